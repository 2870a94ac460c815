#include "muskatlab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "muskatlab/errors.hpp"
#include "muskatlab/muskat.hpp"
#include "muskatlab/norms.hpp"
#include "muskatlab/profiles.hpp"
#include "muskatlab/spectral.hpp"

namespace muskat {

RealField make_profile(const Grid& g, const InitialProfile& p) {
    if (p.kind == "gaussian") return make_gaussian(g, p.amplitude, p.width);
    if (p.kind == "packet") return make_packet(g, p.amplitude, p.width, p.wavenumber);
    if (p.kind == "sine") return make_sine(g, p.amplitude, p.wavenumber);
    if (p.kind == "windowed_linear") return make_windowed_linear(g, p.slope);
    if (p.kind == "zero") return RealField::zeros(g);
    throw ParamRangeError("unknown profile kind '" + p.kind + "'");
}

double SimConfig::effective_dt() const {
    if (dt > 0.0) return dt;
    const double kmax = std::isfinite(cutoff) ? cutoff : grid.wavenumber(grid.nyquist_index());
    return 0.5 / std::max(kmax, 1.0);
}

void SimConfig::validate() const {
    if (!(s > 1.5 && s < 2.0)) throw SpecRangeError("energy index s must lie in (3/2, 2)");
    if (!(effective_dt() > 0.0)) throw ParamRangeError("time step must be positive");
    if (!(t_end >= 0.0)) throw NegativeTimeError("t_end must be non-negative");
    if (snapshot_every < 1) throw ParamRangeError("snapshot_every must be >= 1");
    if (!(blowup_factor > 1.0)) throw ParamRangeError("blowup_factor must exceed 1");
    if (std::isfinite(cutoff) && cutoff < grid.wavenumber(1))
        throw ParamRangeError("cutoff must keep at least the first mode");
}

namespace {

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2; series branch avoids
// cancellation near z = 0.
double phi1(double z) {
    if (std::abs(z) < 1e-4) return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
    return std::expm1(z) / z;
}

double phi2(double z) {
    if (std::abs(z) < 1e-4) return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0));
    return (std::expm1(z) - z) / (z * z);
}

RealField apply_cutoff(const RealField& f, double cutoff) {
    if (!std::isfinite(cutoff)) return f;
    const Grid& g = f.grid();
    if (cutoff >= g.wavenumber(g.nyquist_index())) return f;
    return project(f, cutoff);
}

// Galerkin nonlinearity J_n T(f)f.  The continuum right-hand side is an exact
// x-derivative, so the mean is removed to keep the discrete mean conserved.
RealField nonlinearity(const RealField& f, const SimConfig& cfg, const AlphaRule& rule) {
    if (!cfg.nonlinear) return RealField::zeros(f.grid());
    RealField n = t_operator(f, f, rule);
    n -= n.mean();
    return apply_cutoff(n, cfg.cutoff);
}

struct EtdTables {
    std::vector<double> decay;     // e^{-dt |k|}
    std::vector<double> dt_phi1;   // dt phi1(-dt |k|)
    std::vector<double> dt_phi2;   // dt phi2(-dt |k|)
};

EtdTables make_tables(const Grid& g, double dt) {
    const int half = g.nyquist_index();
    EtdTables t;
    t.decay.resize(half + 1);
    t.dt_phi1.resize(half + 1);
    t.dt_phi2.resize(half + 1);
    for (int j = 0; j <= half; ++j) {
        const double z = -dt * g.wavenumber(j);
        t.decay[j] = std::exp(z);
        t.dt_phi1[j] = dt * phi1(z);
        t.dt_phi2[j] = dt * phi2(z);
    }
    return t;
}

}  // namespace

Diagnostics diagnose(const RealField& f, double s) {
    Diagnostics d;
    d.h1 = sobolev_norm(f, 1.0);
    d.hs = sobolev_norm(f, s);
    d.hs_half = sobolev_norm(f, s + 0.5);
    d.lipschitz = lipschitz_sup(f);
    d.linf = f.max_abs();
    d.mean = f.mean();
    const RealField lam = apply_lambda(f, s + 0.5);
    const RealField fx = derivative(f);
    const double h = f.grid().spacing();
    double acc = 0.0;
    for (int m = 0; m < f.grid().sample_count; ++m)
        acc += lam[m] * lam[m] / (1.0 + fx[m] * fx[m]);
    d.dissipation = h * acc;
    return d;
}

SimState make_state(double t, const RealField& f, const SimConfig& cfg) {
    return SimState{t, f, diagnose(f, cfg.s)};
}

SimState step(const SimState& state, const SimConfig& cfg, double hs_ceiling) {
    const Grid& g = state.f.grid();
    if (g != cfg.grid) throw GridMismatchError("state grid differs from config grid");
    const double dt = cfg.effective_dt();
    const EtdTables tab = make_tables(g, dt);
    const AlphaRule rule = AlphaRule::trapezoid_grid_rule(g);

    Spectrum fh = to_spectrum(state.f);
    const Spectrum nh = to_spectrum(nonlinearity(state.f, cfg, rule));
    const int half = g.nyquist_index();

    Spectrum ah = fh;
    for (int j = 0; j <= half; ++j) ah.bins[j] = tab.decay[j] * fh.bins[j] + tab.dt_phi1[j] * nh.bins[j];

    if (cfg.stepper == Stepper::Etd1) {
        fh = ah;
    } else {
        const RealField a = to_field(ah);
        const Spectrum nah = to_spectrum(nonlinearity(a, cfg, rule));
        for (int j = 0; j <= half; ++j)
            fh.bins[j] = ah.bins[j] + tab.dt_phi2[j] * (nah.bins[j] - nh.bins[j]);
    }

    SimState next = make_state(state.t + dt, to_field(fh), cfg);
    if (!next.f.is_finite()) throw BlowupError("field lost finiteness", next.t);
    if (next.diag.hs > hs_ceiling) throw BlowupError("H^s norm exceeded the blowup ceiling", next.t);
    return next;
}

std::vector<SimState> evolve(const RealField& f0, const SimConfig& cfg) {
    cfg.validate();
    if (f0.grid() != cfg.grid) throw GridMismatchError("initial field grid differs from config grid");
    const double dt = cfg.effective_dt();
    const int nsteps = std::max(0, static_cast<int>(std::llround(cfg.t_end / dt)));

    SimState state = make_state(0.0, apply_cutoff(f0, cfg.cutoff), cfg);
    const double ceiling =
        state.diag.hs > 0.0 ? cfg.blowup_factor * state.diag.hs : std::numeric_limits<double>::infinity();

    std::vector<SimState> out;
    out.reserve(static_cast<size_t>(nsteps / cfg.snapshot_every) + 2);
    out.push_back(state);
    for (int i = 1; i <= nsteps; ++i) {
        state = step(state, cfg, ceiling);
        if (i % cfg.snapshot_every == 0 || i == nsteps) out.push_back(state);
    }
    return out;
}

std::vector<SimState> evolve(const SimConfig& cfg) {
    return evolve(make_profile(cfg.grid, cfg.profile), cfg);
}

EnergyReport energy_report(const std::vector<SimState>& states) {
    if (states.size() < 3)
        throw InsufficientDataError("energy report needs at least three snapshots");
    EnergyReport rep;
    bool any = false;
    double fmax = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < states.size(); ++i) {
        const SimState& a = states[i - 1];
        const SimState& b = states[i];
        const SimState& c = states[i + 1];
        EnergyRow row;
        row.t = b.t;
        row.hs_sq = b.diag.hs * b.diag.hs;
        row.ddt_hs_sq = (c.diag.hs * c.diag.hs - a.diag.hs * a.diag.hs) / (c.t - a.t);
        row.hs_half_sq = b.diag.hs_half * b.diag.hs_half;
        row.dissipation = b.diag.dissipation;
        row.lipschitz = b.diag.lipschitz;
        rep.rows.push_back(row);
        if (row.hs_sq > 0.0) {
            const double k2 = row.lipschitz * row.lipschitz;
            const double f = (0.5 * row.ddt_hs_sq + row.hs_half_sq / (4.0 * (1.0 + k2))) / row.hs_sq;
            fmax = std::max(fmax, f);
            any = true;
        }
    }
    rep.f_measured = any ? fmax : 0.0;
    return rep;
}

std::vector<CauchyRow> cauchy_study(const RealField& f0, const std::vector<double>& cutoffs,
                                    double s_prime, const SimConfig& base) {
    if (cutoffs.size() < 2) throw InsufficientDataError("cauchy study needs at least two cutoffs");
    const double dt = base.effective_dt();  // shared step so snapshot times align
    std::vector<std::vector<SimState>> runs;
    runs.reserve(cutoffs.size());
    for (double n : cutoffs) {
        SimConfig cfg = base;
        cfg.cutoff = n;
        cfg.dt = dt;
        runs.push_back(evolve(f0, cfg));
    }
    std::vector<CauchyRow> rows;
    for (size_t i = 0; i + 1 < cutoffs.size(); ++i) {
        const auto& lo = runs[i];
        const auto& hi = runs[i + 1];
        CauchyRow row;
        row.n_low = cutoffs[i];
        row.n_high = cutoffs[i + 1];
        for (size_t j = 0; j < std::min(lo.size(), hi.size()); ++j) {
            const RealField diff = hi[j].f - lo[j].f;
            const double l2 = diff.l2_norm();
            const double hsp = sobolev_norm(diff, s_prime);
            row.sup_l2 = std::max(row.sup_l2, l2);
            row.sup_hsp = std::max(row.sup_hsp, hsp);
            row.sup_total = std::max(row.sup_total, l2 + hsp);
        }
        rows.push_back(row);
    }
    return rows;
}

StabilityReport stability_study(const RealField& f0, const RealField& perturbation, double eps_amp,
                                const SimConfig& cfg) {
    require_same_grid(f0, perturbation, "stability_study");
    const std::vector<SimState> base = evolve(f0, cfg);
    const std::vector<SimState> bumped = evolve(f0 + perturbation * eps_amp, cfg);

    StabilityReport rep;
    for (size_t j = 0; j < std::min(base.size(), bumped.size()); ++j) {
        rep.times.push_back(base[j].t);
        rep.diff_hhalf.push_back(sobolev_norm(bumped[j].f - base[j].f, 0.5));
    }
    rep.initial = rep.diff_hhalf.empty() ? 0.0 : rep.diff_hhalf.front();
    double cmax = 0.0;
    if (rep.initial > 0.0) {
        cmax = -std::numeric_limits<double>::infinity();
        for (size_t j = 1; j < rep.times.size(); ++j) {
            const double d = std::max(rep.diff_hhalf[j], 1e-300);
            cmax = std::max(cmax, std::log(d / rep.initial) / rep.times[j]);
        }
        if (!std::isfinite(cmax)) cmax = 0.0;
    }
    rep.c_measured = cmax;
    return rep;
}

}  // namespace muskat
