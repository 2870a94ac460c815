#pragma once

#include "muskatlab/finite_diff.hpp"
#include "muskatlab/grid.hpp"

namespace muskat {

// F(a) = a^2 / (1 + a^2), the kernel fraction of the singular integral.
double kernel_fraction(double a);
// F'(a) = 2a / (1 + a^2)^2, |F'| <= 3 sqrt(3) / 8.
double kernel_fraction_prime(double a);

// gamma(f) = F(f_x) pointwise.
RealField gamma_coefficient(const RealField& f);

// T(f)g = -(1/pi) integral of slope(g_x, alpha) * F(slope(f, alpha)) d alpha.
// alpha = 0 cell: the integrand tends to g_xx * F(f_x).
RealField t_operator(const RealField& f, const RealField& g, const AlphaRule& rule);

// -(1/pi) integral of slope(g_x, alpha) d alpha, the quadrature route to
// Lambda g; alpha = 0 cell value g_xx.
RealField quadrature_lambda(const RealField& g, const AlphaRule& rule);

// (1/pi) d/dx of the quadrature of arctan(slope(f, alpha)); alpha = 0 cell
// value arctan(f_x).  Equals -Lambda f + T(f)f up to quadrature error.
RealField rhs_arctan(const RealField& f, const AlphaRule& rule);

// Even/odd kernel split: E = (F(slope) + F(slope_bar))/2,
// O = (F(slope) - F(slope_bar))/2, defect Q = E - F(f_x).
struct SymmetrizedKernels {
    std::vector<double> nodes;  // rule.nodes order
    std::vector<RealField> even_part;
    std::vector<RealField> odd_part;
    std::vector<RealField> defect;
    RealField even_limit;  // F(f_x)
};
SymmetrizedKernels kernels(const RealField& f, const AlphaRule& rule);

// T_e(f)g = -(1/2pi) integral of (slope(g_x) - slope_bar(g_x)) * E d alpha.
// The alpha -> 0 Taylor limit of that integrand is 2 g_xx F(f_x): the odd pair
// slope -> g_xx, slope_bar -> -g_xx while E -> F(f_x).
RealField t_even(const RealField& f, const RealField& g, const AlphaRule& rule);
// T_o(f)g = -(1/pi) integral of slope(g_x) * O d alpha; O -> 0 linearly at
// alpha = 0, so the limit slot carries 0.  t_even + t_odd = t_operator
// exactly on symmetric rules.
RealField t_odd(const RealField& f, const RealField& g, const AlphaRule& rule);

// V(f) = -(1/pi) integral of O(alpha,.)/alpha d alpha; the alpha = 0 cell
// carries the Taylor limit O/alpha -> -F'(f_x) f_xx / 2.
RealField drift(const RealField& f, const AlphaRule& rule);

// R(f,g) = T(f)g - gamma(f) Lambda g - V(f) g_x with dealiased products.
RealField remainder(const RealField& f, const RealField& g, const AlphaRule& rule, double eps);

// Lambda^{1+eps} T(f)g - T(f) Lambda^{1+eps} g.
RealField commutator_lambda(const RealField& f, const RealField& g, double eps, const AlphaRule& rule);

// Paraproduct form of the right-hand side.  rhs is t_operator(f,f) itself;
// para_remainder is what the paraproducts miss.
struct Paralinearization {
    RealField rhs;
    RealField para_gamma;  // paraproduct(gamma(f), Lambda f)
    RealField para_drift;  // paraproduct(V(f), f_x)
    RealField para_remainder;
};
Paralinearization paralinearize(const RealField& f, double eps, const AlphaRule& rule);
RealField paralinearized_rhs(const RealField& f, double eps, const AlphaRule& rule);

}  // namespace muskat
