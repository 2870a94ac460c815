#include "muskatlab/profiles.hpp"

#include <cmath>

#include "muskatlab/spectral.hpp"

namespace muskat {

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    // C^3 transition: spectral tails decay ~ k^-5, negligible at the Nyquist
    // scale for the grids used here
    return t * t * t * t * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
}

double plateau_bump(double x, double inner, double outer) {
    double ax = std::abs(x);
    if (ax <= inner) return 1.0;
    if (ax >= outer) return 0.0;
    return smooth_step((outer - ax) / (outer - inner));
}

RealField make_window(const Grid& g, double inner_frac, double outer_frac) {
    const double L = g.half_length;
    return RealField::from_function(
        g, [&](double x) { return plateau_bump(x, inner_frac * L, outer_frac * L); });
}

RealField make_windowed_linear(const Grid& g, double m) {
    const double L = g.half_length;
    // central plateau with slope m and a disjoint return band near the seam
    RealField core = RealField::from_function(g, [&](double x) { return plateau_bump(x, L / 4.0, L / 2.0); });
    RealField ret = RealField::from_function(g, [&](double x) {
        double d = L - std::abs(x);  // distance to the periodic seam
        return plateau_bump(d, 3.0 * L / 8.0, L / 2.0);
    });
    double sum_core = 0.0, sum_ret = 0.0;
    for (int i = 0; i < g.sample_count; ++i) {
        sum_core += core[i];
        sum_ret += ret[i];
    }
    const double c = sum_core / sum_ret;  // < 1: return slope stays below m
    RealField fx = RealField::zeros(g);
    for (int i = 0; i < g.sample_count; ++i) fx[i] = m * (core[i] - c * ret[i]);
    // mean-zero derivative -> periodic antiderivative (spectral division by ik)
    Spectrum s = to_spectrum(fx);
    s.bins[0] = 0.0;
    for (int j = 1; j < g.nyquist_index(); ++j)
        s.bins[j] /= std::complex<double>(0.0, g.wavenumber(j));
    s.bins[g.nyquist_index()] = 0.0;
    return to_field(s);
}

RealField make_gaussian(const Grid& g, double amplitude, double width) {
    return RealField::from_function(
        g, [&](double x) { return amplitude * std::exp(-(x / width) * (x / width)); });
}

RealField make_packet(const Grid& g, double amplitude, double width, double k0) {
    return RealField::from_function(g, [&](double x) {
        return amplitude * std::exp(-(x / width) * (x / width)) * std::cos(k0 * x);
    });
}

RealField make_sine(const Grid& g, double amplitude, double k) {
    return RealField::from_function(g, [&](double x) { return amplitude * std::sin(k * x); });
}

}  // namespace muskat
