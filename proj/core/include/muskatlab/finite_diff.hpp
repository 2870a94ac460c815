#pragma once

#include <functional>
#include <map>
#include <vector>

#include "muskatlab/grid.hpp"

namespace muskat {

// Symmetric quadrature rule in the offset variable alpha.  The alpha = 0 cell
// is carried by zero_limit_weight and an analytic limit value supplied by the
// caller.  weights sum with zero_limit_weight to the measure of the covered
// interval.
struct AlphaRule {
    std::vector<double> nodes;    // nonzero offsets, symmetric about 0
    std::vector<double> weights;  // same length as nodes
    double zero_limit_weight = 0.0;

    // Composite trapezoid on grid multiples alpha = m h, 0 < |m| <= max_index,
    // covering [-max_index h, max_index h]; default max_index = N/2 covers [-L, L].
    static AlphaRule trapezoid_grid_rule(const Grid& g, int max_index = -1);
    // Oracle rule: 4x refined nodes alpha = m h/4 with composite Simpson weights.
    static AlphaRule refined_simpson_rule(const Grid& g);

    double covered_measure() const;  // sum of weights + zero_limit_weight
    double max_abs_node() const;
    void validate() const;
    // evaluation order fixed for reproducibility: ascending |alpha|, negative
    // sign before positive at equal magnitude
    std::vector<int> evaluation_order() const;
};

// delta_alpha u = u(x) - u(x - alpha)
RealField delta(const RealField& u, double alpha);
// delta_bar_alpha u = u(x) - u(x + alpha)
RealField delta_bar(const RealField& u, double alpha);
// s_alpha u = 2u(x) - u(x - alpha) - u(x + alpha)
RealField s_sym(const RealField& u, double alpha);

// Divided differences; alpha = 0 throws ZeroAlphaError.  The alpha -> 0 limits
// (slope -> u_x, s_slope -> 0, d_slope -> 2 u_x) are taken through explicit
// limit slots by callers, never by evaluating at alpha = 0.
RealField slope(const RealField& u, double alpha);      // delta_alpha u / alpha
RealField slope_bar(const RealField& u, double alpha);  // delta_bar_alpha u / alpha
RealField s_slope(const RealField& u, double alpha);    // s_alpha u / alpha
RealField d_slope(const RealField& u, double alpha);    // (u(x+alpha) - u(x-alpha)) / alpha

// Quadrature of a field-valued integrand over the rule's nodes plus the
// alpha = 0 cell: sum_m w_m values(alpha_m) + w_0 * limit_value.
RealField alpha_integrate(const std::function<RealField(double)>& values, const RealField& limit_value,
                          const AlphaRule& rule);
// Map-based variant; throws MissingNodeError if a rule node has no entry.
RealField alpha_integrate(const std::map<double, RealField>& values, const RealField& limit_value,
                          const AlphaRule& rule);

}  // namespace muskat
