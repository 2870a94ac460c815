#pragma once

#include <complex>
#include <functional>

#include "muskatlab/grid.hpp"

namespace muskat {

// Fourier multiplier acting bin-wise on the half-complex spectrum.  Bins 0 and
// N/2 are forced real after application, so conjugate-symmetric symbols act
// exactly and output samples are always real.
struct Multiplier {
    std::function<std::complex<double>(double)> symbol;
    std::complex<double> zero_mode_value{0.0, 0.0};

    RealField apply(const RealField& u) const;
};

// Lambda^sigma, symbol |k|^sigma.  sigma > 0 sends the zero mode to zero,
// sigma = 0 is the identity, sigma < 0 requires mean-zero input
// (|mean| <= 1e-10 * ||u||_L2).
RealField apply_lambda(const RealField& u, double sigma);

// Hilbert transform, symbol -i sign(k).
RealField hilbert(const RealField& u);

// Spectral d/dx; the Nyquist bin is zeroed.
RealField derivative(const RealField& u);
RealField second_derivative(const RealField& u);

// Sharp Fourier cutoff keeping modes with |k| <= n (a wavenumber, not an index).
RealField project(const RealField& u, double n);

// exp(-t Lambda); t < 0 throws NegativeTimeError.
RealField heat_semigroup(const RealField& u, double t);

// u(. - alpha) via the exact spectral shift; grid-multiple alpha reduces to a
// cyclic sample shift.
RealField translate(const RealField& u, double alpha);

// (I + Lambda^sigma)^{-1}
RealField resolvent_lambda(const RealField& u, double sigma);

// 2/3-rule truncation: zero all bins with index > floor(N/3).
RealField dealias(const RealField& u);
RealField dealiased_product(const RealField& a, const RealField& b);

// Paraproduct (I + Lambda^{1+eps})^{-1}(a * Lambda^{1+eps} g); requires
// 0 < eps < 1/2.  The pointwise product is dealiased.
RealField paraproduct(const RealField& a, const RealField& g, double eps);

// H(f u) - f H(u) with dealiased products.
RealField hilbert_commutator(const RealField& f, const RealField& u);

}  // namespace muskat
