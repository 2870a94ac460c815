#include "muskatlab/finite_diff.hpp"

#include <algorithm>
#include <cmath>

#include "muskatlab/spectral.hpp"

namespace muskat {

AlphaRule AlphaRule::trapezoid_grid_rule(const Grid& g, int max_index) {
    if (max_index < 0) max_index = g.sample_count / 2;
    // indices past N/2 extend the coverage over further periods (translates
    // wrap); useful when the truncation tail must be pushed below the
    // in-range discretization error
    if (max_index < 1 || max_index > 64 * g.sample_count)
        throw ParamRangeError("trapezoid_grid_rule: max_index out of range");
    const double h = g.spacing();
    AlphaRule r;
    for (int m = -max_index; m <= max_index; ++m) {
        if (m == 0) continue;
        r.nodes.push_back(m * h);
        r.weights.push_back(std::abs(m) == max_index ? 0.5 * h : h);
    }
    r.zero_limit_weight = h;
    return r;
}

AlphaRule AlphaRule::refined_simpson_rule(const Grid& g) {
    const double d = g.spacing() / 4.0;
    const int half = 2 * g.sample_count;  // nodes m d, |m| <= half, covering [-L, L]
    AlphaRule r;
    for (int m = -half; m <= half; ++m) {
        if (m == 0) continue;
        double c;
        if (std::abs(m) == half)
            c = 1.0;
        else
            c = (m % 2 == 0) ? 2.0 : 4.0;
        r.nodes.push_back(m * d);
        r.weights.push_back(c * d / 3.0);
    }
    r.zero_limit_weight = 2.0 * d / 3.0;
    return r;
}

double AlphaRule::covered_measure() const {
    double acc = zero_limit_weight;
    for (double w : weights) acc += w;
    return acc;
}

double AlphaRule::max_abs_node() const {
    double m = 0.0;
    for (double a : nodes) m = std::max(m, std::abs(a));
    return m;
}

void AlphaRule::validate() const {
    if (nodes.size() != weights.size()) throw ParamRangeError("AlphaRule: nodes/weights size mismatch");
    if (nodes.empty()) throw ParamRangeError("AlphaRule: empty rule");
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == 0.0) throw ZeroAlphaError("AlphaRule: alpha = 0 belongs to the limit slot");
        // symmetric partner with matching weight must exist
        bool found = false;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (nodes[j] == -nodes[i]) {
                if (std::abs(weights[j] - weights[i]) > 1e-14 * std::abs(weights[i]))
                    throw ParamRangeError("AlphaRule: asymmetric weights");
                found = true;
                break;
            }
        }
        if (!found) throw ParamRangeError("AlphaRule: node set not symmetric about 0");
    }
}

std::vector<int> AlphaRule::evaluation_order() const {
    std::vector<int> idx(nodes.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [this](int a, int b) {
        double ma = std::abs(nodes[a]), mb = std::abs(nodes[b]);
        if (ma != mb) return ma < mb;
        return nodes[a] < nodes[b];
    });
    return idx;
}

RealField delta(const RealField& u, double alpha) { return u - translate(u, alpha); }

RealField delta_bar(const RealField& u, double alpha) { return u - translate(u, -alpha); }

RealField s_sym(const RealField& u, double alpha) {
    RealField out = u;
    out *= 2.0;
    out -= translate(u, alpha);
    out -= translate(u, -alpha);
    return out;
}

namespace {
void require_nonzero(double alpha, const char* where) {
    if (alpha == 0.0) throw ZeroAlphaError(std::string(where) + ": alpha = 0 (use the analytic limit)");
}
}  // namespace

RealField slope(const RealField& u, double alpha) {
    require_nonzero(alpha, "slope");
    return delta(u, alpha) * (1.0 / alpha);
}

RealField slope_bar(const RealField& u, double alpha) {
    require_nonzero(alpha, "slope_bar");
    return delta_bar(u, alpha) * (1.0 / alpha);
}

RealField s_slope(const RealField& u, double alpha) {
    require_nonzero(alpha, "s_slope");
    return s_sym(u, alpha) * (1.0 / alpha);
}

RealField d_slope(const RealField& u, double alpha) {
    require_nonzero(alpha, "d_slope");
    return (translate(u, -alpha) - translate(u, alpha)) * (1.0 / alpha);
}

RealField alpha_integrate(const std::function<RealField(double)>& values, const RealField& limit_value,
                          const AlphaRule& rule) {
    RealField acc = limit_value * rule.zero_limit_weight;
    for (int i : rule.evaluation_order()) acc += values(rule.nodes[i]) * rule.weights[i];
    return acc;
}

RealField alpha_integrate(const std::map<double, RealField>& values, const RealField& limit_value,
                          const AlphaRule& rule) {
    return alpha_integrate(
        [&values](double a) -> RealField {
            auto it = values.find(a);
            if (it == values.end()) throw MissingNodeError("alpha_integrate: no value for a rule node");
            return it->second;
        },
        limit_value, rule);
}

}  // namespace muskat
