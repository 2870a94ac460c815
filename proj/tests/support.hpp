#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "muskatlab/grid.hpp"

namespace muskat::testing {

// O(N^2) reference DFT with the same layout as to_spectrum: bin j holds
// sum_m u_m exp(-i k_j x_m)-style coefficients in half-complex form, i.e.
// the unnormalized forward transform over sample indices.
inline std::vector<std::complex<double>> direct_dft(const RealField& u) {
    const int n = u.size();
    std::vector<std::complex<double>> bins(n / 2 + 1);
    for (int j = 0; j <= n / 2; ++j) {
        std::complex<double> acc = 0.0;
        for (int m = 0; m < n; ++m) {
            const double phase = -2.0 * std::numbers::pi * j * m / n;
            acc += u[m] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        bins[j] = acc;
    }
    return bins;
}

// Dense convolution with the exact discrete Hilbert kernel on an even grid:
// (H u)_m = (2/N) sum_{r odd} u_{m-r} cot(pi r / N).  This is the inverse
// transform of the multiplier -i sgn(k) with the mean and Nyquist bins
// annihilated, computed without any FFT.
inline RealField direct_hilbert(const RealField& u) {
    const int n = u.size();
    std::vector<double> out(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int r = 1 - n; r < n; r += 2)
            if (r != 0) acc += u.at_wrapped(m - r) / std::tan(std::numbers::pi * r / n);
        out[m] = acc / n;
    }
    return RealField::from_samples(u.grid(), std::move(out));
}

// c(s) = integral over the line of (1 - cos t) / |t|^{1+2s} dt, 0 < s < 1,
// via dense Simpson on [eps, T] plus series head and integration-by-parts
// tail.  Anchor: c(1/2) = pi.
inline double cs_constant(double s) {
    const double p = 1.0 + 2.0 * s;
    const double eps = 1e-4;
    const double big = 400.0;
    auto f = [&](double t) { return (1.0 - std::cos(t)) / std::pow(t, p); };
    // head: (1 - cos t) = t^2/2 - t^4/24 + t^6/720
    double head = 0.5 * std::pow(eps, 2.0 - 2.0 * s) / (2.0 - 2.0 * s) -
                  std::pow(eps, 4.0 - 2.0 * s) / (24.0 * (4.0 - 2.0 * s)) +
                  std::pow(eps, 6.0 - 2.0 * s) / (720.0 * (6.0 - 2.0 * s));
    const int steps = 4'000'000;  // even
    const double dh = (big - eps) / steps;
    double simpson = f(eps) + f(big);
    for (int i = 1; i < steps; ++i) simpson += f(eps + i * dh) * (i % 2 ? 4.0 : 2.0);
    simpson *= dh / 3.0;
    // tail: 1/(2s T^{2s}) minus the oscillatory integral, expanded by parts;
    // integral of cos t / t^p over [T, inf) = -sin T/T^p + p cos T/T^{p+1}
    //   - p(p+1) integral of cos t / t^{p+2}, recursed once more
    double tail = 1.0 / (2.0 * s * std::pow(big, 2.0 * s)) +
                  std::sin(big) / std::pow(big, p) -
                  p * std::cos(big) / std::pow(big, p + 1.0) -
                  p * (p + 1.0) * std::sin(big) / std::pow(big, p + 2.0) +
                  p * (p + 1.0) * (p + 2.0) * std::cos(big) / std::pow(big, p + 3.0);
    return 2.0 * (head + simpson + tail);
}

// Least-squares slope of log(err) against log(h): the measured convergence
// order of a refinement sequence.
inline double fitted_order(const std::vector<double>& hs, const std::vector<double>& errs) {
    const int n = static_cast<int>(hs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(hs[i]);
        const double y = std::log(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double rel_l2(const RealField& a, const RealField& b) {
    return (a - b).l2_norm() / b.l2_norm();
}

}  // namespace muskat::testing
