#include "muskatlab/spectral.hpp"

#include <cmath>

namespace muskat {

namespace {

void require_finite(const RealField& u, const char* where) {
    if (!u.is_finite()) throw NonFiniteError(std::string(where) + ": input contains NaN or Inf");
}

// Applies symbol(k_j) to bin j; zero_mode multiplies bin 0.  Bins 0 and N/2
// keep only their real part so the inverse transform is a genuine real field.
RealField apply_symbol(const RealField& u, const std::function<std::complex<double>(double)>& symbol,
                       std::complex<double> zero_mode) {
    Spectrum s = to_spectrum(u);
    const int nq = u.grid().nyquist_index();
    s.bins[0] = std::complex<double>((zero_mode * s.bins[0]).real(), 0.0);
    for (int j = 1; j < nq; ++j) s.bins[j] *= symbol(u.grid().wavenumber(j));
    s.bins[nq] = std::complex<double>((symbol(u.grid().wavenumber(nq)) * s.bins[nq]).real(), 0.0);
    return to_field(s);
}

}  // namespace

RealField Multiplier::apply(const RealField& u) const {
    require_finite(u, "Multiplier::apply");
    return apply_symbol(u, symbol, zero_mode_value);
}

RealField apply_lambda(const RealField& u, double sigma) {
    require_finite(u, "apply_lambda");
    if (sigma == 0.0) return u;
    if (sigma < 0.0) {
        double tol = 1e-10 * u.l2_norm();
        if (std::abs(u.mean()) > tol)
            throw NonZeroMeanError("apply_lambda: sigma < 0 requires a mean-zero field");
    }
    return apply_symbol(
        u, [sigma](double k) { return std::complex<double>(std::pow(std::abs(k), sigma), 0.0); },
        std::complex<double>(0.0, 0.0));
}

RealField hilbert(const RealField& u) {
    require_finite(u, "hilbert");
    return apply_symbol(
        u, [](double) { return std::complex<double>(0.0, -1.0); }, std::complex<double>(0.0, 0.0));
}

RealField derivative(const RealField& u) {
    Spectrum s = to_spectrum(u);
    const Grid& g = u.grid();
    const int nq = g.nyquist_index();
    s.bins[0] = 0.0;
    for (int j = 1; j < nq; ++j) s.bins[j] *= std::complex<double>(0.0, g.wavenumber(j));
    s.bins[nq] = 0.0;
    return to_field(s);
}

RealField second_derivative(const RealField& u) {
    Spectrum s = to_spectrum(u);
    const Grid& g = u.grid();
    const int nq = g.nyquist_index();
    s.bins[0] = 0.0;
    for (int j = 1; j < nq; ++j) {
        double k = g.wavenumber(j);
        s.bins[j] *= -k * k;
    }
    s.bins[nq] = 0.0;
    return to_field(s);
}

RealField project(const RealField& u, double n) {
    if (!(n > 0.0)) throw ParamRangeError("project: cutoff must be positive");
    Spectrum s = to_spectrum(u);
    const Grid& g = u.grid();
    for (int j = 1; j <= g.nyquist_index(); ++j)
        if (g.wavenumber(j) > n) s.bins[j] = 0.0;
    return to_field(s);
}

RealField heat_semigroup(const RealField& u, double t) {
    if (t < 0.0) throw NegativeTimeError("heat_semigroup: negative time");
    return apply_symbol(
        u, [t](double k) { return std::complex<double>(std::exp(-t * std::abs(k)), 0.0); },
        std::complex<double>(1.0, 0.0));
}

RealField translate(const RealField& u, double alpha) {
    const Grid& g = u.grid();
    const double h = g.spacing();
    const double r = alpha / h;
    const double rr = std::round(r);
    if (std::abs(r - rr) < 1e-9 * std::max(1.0, std::abs(r))) {
        const int n = g.sample_count;
        int shift = static_cast<int>(std::llround(rr)) % n;
        if (shift < 0) shift += n;
        std::vector<double> out(n);
        // u(x_m - alpha) = u[x_{m - shift}]
        for (int m = 0; m < n; ++m) out[m] = u[(m - shift + n) % n];
        return RealField::from_samples(g, std::move(out));
    }
    return apply_symbol(
        u,
        [alpha](double k) {
            return std::complex<double>(std::cos(k * alpha), -std::sin(k * alpha));
        },
        std::complex<double>(1.0, 0.0));
}

RealField resolvent_lambda(const RealField& u, double sigma) {
    if (!(sigma > 0.0)) throw ParamRangeError("resolvent_lambda: sigma must be positive");
    return apply_symbol(
        u,
        [sigma](double k) {
            return std::complex<double>(1.0 / (1.0 + std::pow(std::abs(k), sigma)), 0.0);
        },
        std::complex<double>(1.0, 0.0));
}

namespace {

RealField truncate_above(const RealField& u, int max_index) {
    Spectrum s = to_spectrum(u);
    for (int j = max_index + 1; j <= u.grid().nyquist_index(); ++j) s.bins[j] = 0.0;
    return to_field(s);
}

}  // namespace

RealField dealias(const RealField& u) { return truncate_above(u, u.grid().sample_count / 3); }

RealField dealiased_product(const RealField& a, const RealField& b) {
    require_same_grid(a, b, "dealiased_product");
    RealField ta = dealias(a);
    RealField tb = dealias(b);
    std::vector<double> out(a.size());
    for (int m = 0; m < a.size(); ++m) out[m] = ta[m] * tb[m];
    // aliased images of the pointwise product land above N/3; drop them so the
    // retained band is the exact Galerkin product
    return dealias(RealField::from_samples(a.grid(), std::move(out)));
}

RealField paraproduct(const RealField& a, const RealField& g, double eps) {
    require_same_grid(a, g, "paraproduct");
    if (!(eps > 0.0 && eps < 0.5)) throw EpsilonRangeError("paraproduct: eps must lie in (0, 1/2)");
    RealField lg = apply_lambda(g, 1.0 + eps);
    RealField prod = dealiased_product(a, lg);
    // (I + Lambda^{1+eps})^{-1}: zero mode divides by 1 + |0|^{1+eps} = 1
    Spectrum s = to_spectrum(prod);
    const Grid& gr = prod.grid();
    for (int j = 1; j <= gr.nyquist_index(); ++j)
        s.bins[j] /= 1.0 + std::pow(std::abs(gr.wavenumber(j)), 1.0 + eps);
    return to_field(s);
}

RealField hilbert_commutator(const RealField& f, const RealField& u) {
    require_same_grid(f, u, "hilbert_commutator");
    RealField fu = dealiased_product(f, u);
    RealField fhu = dealiased_product(f, hilbert(u));
    return hilbert(fu) - fhu;
}

}  // namespace muskat
