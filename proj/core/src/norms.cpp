#include "muskatlab/norms.hpp"

#include <algorithm>
#include <cmath>

#include "muskatlab/finite_diff.hpp"
#include "muskatlab/spectral.hpp"

namespace muskat {

double linf_norm(const RealField& u) { return u.max_abs(); }

double lp_norm(const RealField& u, double p) {
    if (!(p >= 1.0)) throw ParamRangeError("lp_norm: p must be >= 1");
    double acc = 0.0;
    for (double v : u.samples()) acc += std::pow(std::abs(v), p);
    return std::pow(u.grid().spacing() * acc, 1.0 / p);
}

namespace {

// Parseval factor: h * sum_m u_m^2 = (h / N) * sum over all DFT bins of |u_hat|^2.
double spectral_sum(const RealField& u, const std::function<double(double)>& weight, bool include_zero,
                    double zero_weight) {
    Spectrum s = to_spectrum(u);
    const Grid& g = u.grid();
    const int nq = g.nyquist_index();
    double acc = 0.0;
    if (include_zero) acc += zero_weight * std::norm(s.bins[0]);
    for (int j = 1; j < nq; ++j) acc += 2.0 * weight(g.wavenumber(j)) * std::norm(s.bins[j]);
    acc += weight(g.wavenumber(nq)) * std::norm(s.bins[nq]);
    return std::sqrt(acc * g.spacing() / g.sample_count);
}

}  // namespace

double sobolev_norm(const RealField& u, double sigma) {
    if (!u.is_finite()) throw NonFiniteError("sobolev_norm: input contains NaN or Inf");
    if (sigma < 0.0) {
        if (std::abs(u.mean()) > 1e-10 * u.l2_norm())
            throw NonZeroMeanError("sobolev_norm: sigma < 0 requires a mean-zero field");
    }
    const bool include_zero = (sigma == 0.0);
    return spectral_sum(
        u, [sigma](double k) { return std::pow(k, 2.0 * sigma); }, include_zero, 1.0);
}

double sobolev_intersection_norm(const RealField& u, double s1, double s2) {
    return sobolev_norm(u, s1) + sobolev_norm(u, s2);
}

double nonhomogeneous_sobolev_norm(const RealField& u, double sigma) {
    return spectral_sum(
        u, [sigma](double k) { return std::pow(1.0 + k * k, sigma); }, true, 1.0);
}

void BesovSpec::validate(const Grid& g) const {
    if (!(s > 0.0 && s < 2.0)) throw SpecRangeError("BesovSpec: s must lie in (0, 2)");
    if (p != 2 && p != kBesovPInf) throw SpecRangeError("BesovSpec: p must be 2 or infinity");
    if (q != 1 && q != 2) throw SpecRangeError("BesovSpec: q must be 1 or 2");
    const double h = g.spacing();
    const double amin = alpha_min == 0.0 ? h : alpha_min;
    const double amax = alpha_max == 0.0 ? g.half_length : alpha_max;
    if (amin < 0.5 * h) throw SpecRangeError("BesovSpec: alpha_min below h/2");
    if (amax > g.half_length) throw SpecRangeError("BesovSpec: alpha_max above L");
    if (!(amin < amax)) throw SpecRangeError("BesovSpec: empty alpha window");
    if (nodes_per_decade < 4) throw SpecRangeError("BesovSpec: too few nodes per decade");
}

double besov_norm(const RealField& u, const BesovSpec& spec) {
    const Grid& g = u.grid();
    spec.validate(g);
    const double amin = spec.alpha_min == 0.0 ? g.spacing() : spec.alpha_min;
    const double amax = spec.alpha_max == 0.0 ? g.half_length : spec.alpha_max;
    const double dt = std::log(10.0) / spec.nodes_per_decade;
    const int count = std::max(2, static_cast<int>(std::ceil(std::log(amax / amin) / dt)) + 1);
    const double step = std::log(amax / amin) / (count - 1);

    auto inner = [&](double a) {
        RealField d = spec.s < 1.0 ? delta(u, a) : s_sym(u, a);
        return spec.p == 2 ? d.l2_norm() : d.max_abs();
    };
    // integral over alpha in R of (inner/|alpha|^s)^q d alpha / |alpha|, as a
    // log-trapezoid over the positive window, doubled for the negative half
    double acc = 0.0;
    for (int i = 0; i < count; ++i) {
        double a = amin * std::exp(i * step);
        double v = inner(a) / std::pow(a, spec.s);
        double integrand = spec.q == 2 ? v * v : v;
        double w = (i == 0 || i == count - 1) ? 0.5 * step : step;
        acc += w * integrand;
    }
    acc *= 2.0;
    return spec.q == 2 ? std::sqrt(acc) : acc;
}

double holder_norm(const RealField& u, double nu) {
    if (!(nu > 0.0 && nu < 1.0)) throw NuRangeError("holder_norm: nu must lie in (0, 1)");
    const Grid& g = u.grid();
    const int n = g.sample_count;
    const double h = g.spacing();
    double semi = 0.0;
    for (int m = 1; m <= n / 2; ++m) {
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = std::abs(u[(i + m) % n] - u[i]);
            diff = std::max(diff, d);
        }
        semi = std::max(semi, diff / std::pow(m * h, nu));
    }
    return u.max_abs() + semi;
}

double lipschitz_sup(const RealField& u) { return derivative(u).max_abs(); }

double check_interpolation(const RealField& u, double s, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw ExponentMismatchError("check_interpolation: eps must lie in (0, 1)");
    if (!(s > 0.0)) throw ExponentMismatchError("check_interpolation: s must be positive");
    const double lo = s, mid = s + 0.5 - 0.5 * eps, hi = s + 0.5;
    const double theta = (hi - mid) / (hi - lo);  // exponent matching: theta = eps
    double nm = sobolev_norm(u, mid);
    double nl = sobolev_norm(u, lo);
    double nh = sobolev_norm(u, hi);
    if (nm == 0.0) return 0.0;
    double denom = std::pow(nl, 2.0 * theta) * std::pow(nh, 2.0 - 2.0 * theta);
    return nm * nm / denom;
}

}  // namespace muskat
