#pragma once

#include "muskatlab/grid.hpp"

namespace muskat {

double linf_norm(const RealField& u);
// (h * sum |u|^p)^(1/p)
double lp_norm(const RealField& u, double p);

// Homogeneous Sobolev norm via the spectral sum, calibrated so that
// sobolev_norm(u, 0) equals the sample L2 norm (h * sum u^2)^(1/2).  The zero
// mode is included only at sigma = 0; sigma < 0 requires mean-zero input.
double sobolev_norm(const RealField& u, double sigma);

// ||u||_{E ∩ F} = ||u||_E + ||u||_F for two homogeneous Sobolev indices.
double sobolev_intersection_norm(const RealField& u, double s1, double s2);

// Nonhomogeneous norm with weight (1 + k^2)^(sigma/2), zero mode included.
double nonhomogeneous_sobolev_norm(const RealField& u, double sigma);

// Besov seminorm from finite differences: first differences for s in (0,1),
// symmetric second differences for s in [1,2); inner L^p on the grid
// (p in {2, inf}), outer L^q(d alpha / alpha) over [alpha_min, alpha_max]
// by log-trapezoid, doubled for the negative-offset half.
struct BesovSpec {
    double s = 0.5;
    int p = 2;  // 2 or kBesovPInf
    int q = 2;  // 1 or 2
    double alpha_min = 0.0;  // 0 -> grid spacing h
    double alpha_max = 0.0;  // 0 -> half length L
    int nodes_per_decade = 64;

    void validate(const Grid& g) const;
};
constexpr int kBesovPInf = -1;

double besov_norm(const RealField& u, const BesovSpec& spec);

// ||u||_inf + sup over grid shifts y in (0, L] of max_x |u(x+y)-u(x)| / y^nu,
// 0 < nu < 1.
double holder_norm(const RealField& u, double nu);

// max over samples of |spectral derivative|
double lipschitz_sup(const RealField& u);

// Ratio ||u||^2_{H^{s+1/2-eps/2}} / (||u||^{2 theta}_{H^s} ||u||^{2-2theta}_{H^{s+1/2}})
// with theta solved from exponent matching of the interpolation triple
// (s, s+1/2-eps/2, s+1/2), i.e. theta = eps.  Always <= 1 up to rounding.
double check_interpolation(const RealField& u, double s, double eps);

}  // namespace muskat
