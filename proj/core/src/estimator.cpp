#include "muskatlab/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "muskatlab/errors.hpp"
#include "muskatlab/finite_diff.hpp"
#include "muskatlab/muskat.hpp"
#include "muskatlab/norms.hpp"
#include "muskatlab/parallel.hpp"
#include "muskatlab/profiles.hpp"
#include "muskatlab/spectral.hpp"

namespace muskat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based draw keyed by (seed, sample, mode, lane): order-independent,
// so parallel generation is deterministic.
double uniform01(std::uint64_t seed, std::uint64_t sample, std::uint64_t mode, std::uint64_t lane) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ sample);
    h = splitmix64(h ^ mode);
    h = splitmix64(h ^ lane);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

RealField pointwise(const RealField& a, const RealField& b) {
    require_same_grid(a, b, "pointwise product");
    std::vector<double> out(a.size());
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] * b[m];
    return RealField::from_samples(a.grid(), std::move(out));
}

}  // namespace

int EnsembleSpec::max_mode_index() const {
    if (k_max <= 0.0) return grid.sample_count / 3;
    const double unit = grid.wavenumber(1);
    const double j = std::floor(k_max / unit + 1e-9);
    // clamp before the cast; anything past the sample count fails validate anyway
    if (j > grid.sample_count) return grid.sample_count;
    return static_cast<int>(j);
}

void EnsembleSpec::validate() const {
    if (count < 1) throw SpecRangeError("ensemble count must be >= 1");
    if (!(beta > 0.5)) throw SpecRangeError("spectral decay beta must exceed 1/2");
    if (!(amplitude >= 0.0)) throw SpecRangeError("amplitude must be non-negative");
    const int jmax = max_mode_index();
    if (jmax < 1) throw SpecRangeError("k_max keeps no modes");
    if (jmax > grid.sample_count / 3)
        throw SpecRangeError("k_max must stay at or below a third of the sample count");
    if (localization.enabled &&
        !(localization.inner_frac > 0.0 && localization.inner_frac < localization.outer_frac &&
          localization.outer_frac <= 1.0))
        throw SpecRangeError("localization window fractions must satisfy 0 < inner < outer <= 1");
}

RealField random_field(const EnsembleSpec& spec, int index) {
    spec.validate();
    if (index < 0 || index >= spec.count) throw SpecRangeError("sample index out of range");

    const Grid& g = spec.grid;
    const int n = g.sample_count;
    const int jmax = spec.max_mode_index();
    Spectrum s;
    s.grid = g;
    s.bins.assign(static_cast<size_t>(g.nyquist_index()) + 1, {0.0, 0.0});
    const auto idx = static_cast<std::uint64_t>(index);
    for (int j = 1; j <= jmax; ++j) {
        const double u_phase = uniform01(spec.seed, idx, static_cast<std::uint64_t>(j), 0);
        const double u_mag = uniform01(spec.seed, idx, static_cast<std::uint64_t>(j), 1);
        const double k = g.wavenumber(j);
        const double amp = spec.amplitude * std::pow(k, -spec.beta) * (0.5 + 0.5 * u_mag);
        const double phase = 2.0 * std::numbers::pi * u_phase;
        // bins[j] = (N/2) A e^{i phi} synthesizes the mode A cos(k x + phi)
        s.bins[j] = 0.5 * n * amp * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    RealField f = to_field(s);
    if (spec.localization.enabled) {
        f = pointwise(f, make_window(g, spec.localization.inner_frac, spec.localization.outer_frac));
        f -= f.mean();
    }
    return f;
}

std::string to_string(CheckId id) {
    switch (id) {
        case CheckId::LowFreq: return "LOW_FREQ";
        case CheckId::Lipschitz: return "LIPSCHITZ";
        case CheckId::Remainder: return "REMAINDER";
        case CheckId::RemainderHsum: return "REMAINDER_HSUM";
        case CheckId::DriftHolder: return "DRIFT_HOLDER";
        case CheckId::Commutator: return "COMMUTATOR";
        case CheckId::ParaRemainder: return "PARA_REMAINDER";
        case CheckId::Kpv: return "KPV";
        case CheckId::Product: return "PRODUCT";
        case CheckId::Composition: return "COMPOSITION";
        case CheckId::HilbertComm: return "HILBERT_COMM";
    }
    throw ParamRangeError("unknown check id");
}

CheckId check_id_from_string(const std::string& name) {
    for (CheckId id : all_checks())
        if (to_string(id) == name) return id;
    throw ParamRangeError("unknown check id '" + name + "'");
}

std::vector<CheckId> all_checks() {
    return {CheckId::LowFreq,       CheckId::Lipschitz, CheckId::Remainder, CheckId::RemainderHsum,
            CheckId::DriftHolder,   CheckId::Commutator, CheckId::ParaRemainder, CheckId::Kpv,
            CheckId::Product,       CheckId::Composition, CheckId::HilbertComm};
}

void CheckParams::validate(CheckId id) const {
    const bool needs_eps = id == CheckId::Remainder || id == CheckId::RemainderHsum ||
                           id == CheckId::DriftHolder || id == CheckId::Commutator ||
                           id == CheckId::ParaRemainder || id == CheckId::Kpv;
    if (needs_eps && !(eps > 0.0 && eps < 0.5))
        throw EpsilonRangeError("eps must lie in (0, 1/2)");
    if (id == CheckId::DriftHolder && !(nu > 0.0 && nu < eps))
        throw NuRangeError("drift Holder exponent needs 0 < nu < eps");
    if (id == CheckId::HilbertComm && !(theta > 0.0 && theta < nu && nu < 1.0))
        throw NuRangeError("Hilbert commutator needs 0 < theta < nu < 1");
    if (id == CheckId::Lipschitz && !(delta >= 0.0 && delta < 0.5))
        throw ParamRangeError("Lipschitz-continuity gap needs delta in [0, 1/2)");
    if (id == CheckId::Composition && !(sigma > 1.0 && sigma < 2.0))
        throw SpecRangeError("composition index sigma must lie in (1, 2)");
    if (id == CheckId::Product && !(s_product > 0.0 && s_product < 1.0))
        throw SpecRangeError("product-rule index must lie in (0, 1)");
}

namespace {

double guarded_ratio(double lhs, double rhs) {
    if (rhs < 1e-14) throw DegenerateRhsError("right-hand side below 1e-14");
    const double r = lhs / rhs;
    if (!std::isfinite(r)) throw NonFiniteError("non-finite inequality ratio");
    return r;
}

}  // namespace

double check_ratio(CheckId id, const RealField& a, const RealField& b, const CheckParams& p) {
    p.validate(id);
    require_same_grid(a, b, "check_ratio");
    const AlphaRule rule = AlphaRule::trapezoid_grid_rule(a.grid());
    const double eps = p.eps;

    switch (id) {
        case CheckId::LowFreq: {
            const double lhs = t_operator(a, b, rule).l2_norm();
            return guarded_ratio(lhs, sobolev_norm(a, 1.0) * sobolev_norm(b, 1.5));
        }
        case CheckId::Lipschitz: {
            const RealField diff = t_operator(a, b, rule) - t_operator(b, b, rule);
            const double rhs =
                sobolev_norm(a - b, 1.0 - p.delta) * sobolev_norm(b, 1.5 + p.delta);
            return guarded_ratio(diff.l2_norm(), rhs);
        }
        case CheckId::Remainder: {
            const double lhs = remainder(a, b, rule, eps).l2_norm();
            BesovSpec bs;
            bs.s = 1.0 - eps;
            bs.p = 2;
            bs.q = 1;
            return guarded_ratio(lhs, sobolev_norm(a, 1.5 + eps) * besov_norm(b, bs));
        }
        case CheckId::RemainderHsum: {
            // B^{1-eps}_{2,1} controlled by H^{1-3eps/2} + H^{1-eps/2}
            const double lhs = remainder(a, b, rule, eps).l2_norm();
            const double rhs = sobolev_norm(a, 1.5 + eps) *
                               (sobolev_norm(b, 1.0 - 1.5 * eps) + sobolev_norm(b, 1.0 - 0.5 * eps));
            return guarded_ratio(lhs, rhs);
        }
        case CheckId::DriftHolder: {
            const double lhs = holder_norm(drift(a, rule), p.nu);
            const double nf = sobolev_intersection_norm(a, 1.0, 1.5 + eps);
            return guarded_ratio(lhs, nf * nf);
        }
        case CheckId::Commutator: {
            const double lhs = commutator_lambda(a, b, eps, rule).l2_norm();
            const double rhs = sobolev_intersection_norm(a, 1.0, 1.5 + eps) *
                               sobolev_intersection_norm(b, 1.5 + eps, 2.0);
            return guarded_ratio(lhs, rhs);
        }
        case CheckId::ParaRemainder: {
            const Paralinearization para = paralinearize(a, eps, rule);
            const double lhs = nonhomogeneous_sobolev_norm(para.para_remainder, 1.0 + eps);
            const double rhs = sobolev_intersection_norm(a, 1.0, 1.5 + eps) *
                               sobolev_intersection_norm(a, 1.0, 2.0 + 0.5 * eps);
            return guarded_ratio(lhs, rhs);
        }
        case CheckId::Kpv: {
            const double s = 1.0 + eps, s1 = 1.5 * eps, s2 = 1.0 - 0.5 * eps;
            const RealField lhs_field = apply_lambda(pointwise(a, b), s) -
                                        pointwise(a, apply_lambda(b, s)) -
                                        pointwise(b, apply_lambda(a, s));
            const double rhs =
                lp_norm(apply_lambda(a, s1), 4) * lp_norm(apply_lambda(b, s2), 4);
            return guarded_ratio(lhs_field.l2_norm(), rhs);
        }
        case CheckId::Product: {
            const double lhs = sobolev_norm(pointwise(a, b), p.s_product);
            const double rhs = 2.0 * linf_norm(a) * sobolev_norm(b, p.s_product) +
                               2.0 * linf_norm(b) * sobolev_norm(a, p.s_product);
            return guarded_ratio(lhs, rhs);
        }
        case CheckId::Composition: {
            std::vector<double> vals(a.size());
            for (int m = 0; m < a.size(); ++m) vals[m] = kernel_fraction(a[m]);
            const RealField fa = RealField::from_samples(a.grid(), std::move(vals));
            const double rhs = sobolev_norm(a, p.sigma - 1.0) + sobolev_norm(a, p.sigma);
            return guarded_ratio(sobolev_norm(fa, p.sigma), rhs);
        }
        case CheckId::HilbertComm: {
            const RealField comm = hilbert(pointwise(a, b)) - pointwise(a, hilbert(b));
            const double rhs = holder_norm(a, p.nu) * nonhomogeneous_sobolev_norm(b, -p.theta);
            return guarded_ratio(comm.l2_norm(), rhs);
        }
    }
    throw ParamRangeError("unknown check id");
}

namespace {

// Second field of a sample pair comes from a derived stream so every index
// stays within the ensemble count.
EnsembleSpec partner_stream(const EnsembleSpec& spec) {
    EnsembleSpec out = spec;
    out.seed = splitmix64(spec.seed ^ 0xA076'1D64'78BD'642FULL);
    return out;
}

void fill_stats(EstimateReport& rep) {
    if (rep.ratios.empty()) {
        rep.max = rep.median = rep.p90 = 0.0;
        return;
    }
    std::vector<double> sorted = rep.ratios;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();
    rep.max = sorted.back();
    rep.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    size_t i90 = static_cast<size_t>(std::ceil(0.9 * static_cast<double>(n)));
    i90 = std::min(std::max<size_t>(i90, 1), n) - 1;
    rep.p90 = sorted[i90];
}

}  // namespace

EstimateReport check(CheckId id, const EnsembleSpec& spec, const CheckParams& params) {
    spec.validate();
    params.validate(id);
    const EnsembleSpec partner = partner_stream(spec);

    std::vector<double> slots(static_cast<size_t>(spec.count),
                              std::numeric_limits<double>::quiet_NaN());
    parallel_for(spec.count, [&](int i) {
        const RealField a = random_field(spec, i);
        const RealField b = random_field(partner, i);
        try {
            slots[static_cast<size_t>(i)] = check_ratio(id, a, b, params);
        } catch (const DegenerateRhsError&) {
            // NaN slot marks the skipped sample
        }
    });

    EstimateReport rep;
    rep.id = to_string(id);
    rep.params = params;
    rep.grid = spec.grid;
    rep.seed = spec.seed;
    rep.resolution_tag = "N=" + std::to_string(spec.grid.sample_count);
    for (double r : slots) {
        if (std::isnan(r))
            ++rep.degenerate_count;
        else
            rep.ratios.push_back(r);
    }
    fill_stats(rep);
    return rep;
}

std::vector<EstimateReport> campaign(const CampaignConfig& cfg) {
    std::vector<EstimateReport> out;
    if (cfg.checks.empty()) return out;

    EnsembleSpec fine = cfg.ensemble;
    fine.grid = Grid::make(cfg.ensemble.grid.half_length, 2 * cfg.ensemble.grid.sample_count);
    if (cfg.ensemble.k_max <= 0.0) {
        // keep the coarse-grid band when the cutoff was defaulted
        fine.k_max = cfg.ensemble.grid.wavenumber(cfg.ensemble.grid.sample_count / 3);
    }

    for (CheckId id : cfg.checks) {
        EstimateReport coarse = check(id, cfg.ensemble, cfg.params);
        EstimateReport refined = check(id, fine, cfg.params);
        const bool flag = refined.max > 2.0 * coarse.max;
        coarse.refinement_flag = flag;
        refined.refinement_flag = flag;
        out.push_back(std::move(coarse));
        out.push_back(std::move(refined));
    }
    return out;
}

}  // namespace muskat
