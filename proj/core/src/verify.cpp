#include "muskatlab/verify.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "muskatlab/estimator.hpp"
#include "muskatlab/finite_diff.hpp"
#include "muskatlab/muskat.hpp"
#include "muskatlab/norms.hpp"
#include "muskatlab/profiles.hpp"
#include "muskatlab/spectral.hpp"

namespace muskat {

namespace {

// Breaking the w(-a) = w(a) symmetry defeats the even/odd recombination and
// shifts every quadrature, so any nonzero perturbation must fail the suite.
AlphaRule perturbed_rule(const Grid& g, int max_index, double perturb) {
    AlphaRule rule = AlphaRule::trapezoid_grid_rule(g, max_index);
    if (perturb != 0.0) {
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            if (rule.nodes[i] > 0.0) rule.weights[i] *= 1.0 + perturb;
    }
    return rule;
}

double windowed_l2(const RealField& u, double frac) {
    const Grid& g = u.grid();
    const double cut = frac * g.half_length;
    double acc = 0.0;
    for (int m = 0; m < g.sample_count; ++m)
        if (std::abs(g.x(m)) <= cut) acc += u[m] * u[m];
    return std::sqrt(g.spacing() * acc);
}

RealField pointwise(const RealField& a, const RealField& b) {
    std::vector<double> out(a.size());
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] * b[m];
    return RealField::from_samples(a.grid(), std::move(out));
}

IdentityResult finish(std::string name, double measured, double tolerance) {
    IdentityResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.tolerance = tolerance;
    r.pass = std::isfinite(measured) && measured <= tolerance;
    return r;
}

}  // namespace

IdentitySuite run_identity_suite(const RunConfig& rc) {
    const Grid& g = rc.sim.grid;
    const int n = g.sample_count;
    const AlphaRule full = perturbed_rule(g, -1, rc.verify.perturb_rule);

    EnsembleSpec es = rc.ensemble;
    es.count = 2 * rc.verify.ensemble_count;

    IdentitySuite suite;

    {  // t_even + t_odd recombines into t_operator exactly on symmetric rules
        double worst = 0.0;
        for (int i = 0; i < rc.verify.ensemble_count; ++i) {
            const RealField f = random_field(es, 2 * i);
            const RealField gg = random_field(es, 2 * i + 1);
            const RealField whole = t_operator(f, gg, full);
            const RealField split = t_even(f, gg, full) + t_odd(f, gg, full);
            const double denom = whole.l2_norm();
            if (denom > 0.0) worst = std::max(worst, (split - whole).l2_norm() / denom);
        }
        suite.results.push_back(finish("even_odd_sum", worst, 1e-10));
    }

    {  // arctan form of the right-hand side against -Lambda + T, with all
       // three terms realized under the same quadrature rule so the identity
       // is one between discrete integrals, not between regularizations.
       // The band is capped so the cubic part of arctan stays below the
       // Nyquist mode; otherwise its aliases enter the two sides differently.
        EnsembleSpec smooth = es;
        smooth.k_max = g.wavenumber(n / 6);
        double worst = 0.0;
        for (int i = 0; i < rc.verify.ensemble_count; ++i) {
            const RealField f = random_field(smooth, 2 * i);
            const RealField lam = quadrature_lambda(f, full);
            const RealField top = t_operator(f, f, full);
            const double scale = std::max(lam.l2_norm(), top.l2_norm());
            if (scale == 0.0) continue;
            const RealField defect = rhs_arctan(f, full) + lam - top;
            worst = std::max(worst, defect.l2_norm() / scale);
        }
        suite.results.push_back(finish("arctan_equivalence", worst, 1e-4));
    }

    {  // constant-slope cancellation: wherever every slope of f equals m the
       // operator acting on a curved field collapses to gamma(m) Lambda, and
       // both the remainder and the drift vanish identically
        const AlphaRule truncated = perturbed_rule(g, n / 16, rc.verify.perturb_rule);
        const RealField curved = make_gaussian(g, 0.5, 0.2 * g.half_length);
        const RealField curved_x = derivative(curved);
        const RealField lamq = quadrature_lambda(curved, truncated);
        double worst = 0.0;
        for (double m : {0.2, 1.0, 3.0}) {
            const RealField f = make_windowed_linear(g, m);
            const RealField gamma = gamma_coefficient(f);
            const RealField vee = drift(f, truncated);
            const RealField principal = pointwise(gamma, lamq);
            const RealField rem =
                t_operator(f, curved, truncated) - principal - pointwise(vee, curved_x);
            const double denom = windowed_l2(principal, 0.125);
            if (denom == 0.0) continue;
            worst = std::max(worst, windowed_l2(rem, 0.125) / denom);
            worst = std::max(worst, windowed_l2(vee, 0.125) / denom);
        }
        suite.results.push_back(finish("constant_slope", worst, 1e-5));
    }

    {  // quadrature Lambda against the spectral multiplier.  The truncation
       // tail of the 1/alpha kernel decays like 1/coverage, so the rule's
       // coverage is scaled with the resolution (node count ~ N^2); an
       // oscillatory packet keeps the data's moments, and with them the
       // slowly decaying image potentials, out of the measurement.
        const int k0 = std::min(150, n / 6);
        const RealField u =
            make_packet(g, 0.5, 0.08 * g.half_length, k0 * g.wavenumber(1));
        const AlphaRule wide =
            perturbed_rule(g, std::max(n / 128, 4) * n, rc.verify.perturb_rule);
        const RealField spectral = apply_lambda(u, 1.0);
        const double err =
            (quadrature_lambda(u, wide) - spectral).l2_norm() / spectral.l2_norm();
        suite.results.push_back(finish("lambda_quadrature", err, 1e-3));
    }

    suite.all_pass = std::all_of(suite.results.begin(), suite.results.end(),
                                 [](const IdentityResult& r) { return r.pass; });
    return suite;
}

std::string identity_suite_to_json(const IdentitySuite& suite) {
    nlohmann::json arr = nlohmann::json::array();
    for (const IdentityResult& r : suite.results)
        arr.push_back({{"name", r.name},
                       {"measured", r.measured},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    return nlohmann::json{{"identities", arr}, {"all_pass", suite.all_pass}}.dump(2);
}

}  // namespace muskat
