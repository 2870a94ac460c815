#include <cmath>
#include <numbers>

#include "doctest.h"
#include "muskatlab/evolution.hpp"
#include "muskatlab/profiles.hpp"
#include "muskatlab/norms.hpp"
#include "muskatlab/spectral.hpp"
#include "support.hpp"

using namespace muskat;
using namespace muskat::testing;

namespace {

constexpr double kPi = std::numbers::pi;

Grid small_grid() { return Grid::make(kPi, 128); }

SimConfig base_config(const Grid& g) {
    SimConfig cfg;
    cfg.grid = g;
    cfg.s = 1.6;
    return cfg;
}

}  // namespace

TEST_CASE("profiles: each kind builds its shape, unknown kinds are rejected") {
    const Grid g = small_grid();
    InitialProfile p;
    p.kind = "sine";
    p.amplitude = 0.5;
    p.wavenumber = 3.0;
    const RealField s = make_profile(g, p);
    for (int m = 0; m < g.sample_count; m += 17)
        CHECK(s[m] == doctest::Approx(0.5 * std::sin(3 * g.x(m))).epsilon(1e-12));
    p.kind = "zero";
    CHECK(make_profile(g, p).max_abs() == 0.0);
    p.kind = "gaussian";
    p.width = 0.8;
    const RealField gs = make_profile(g, p);
    CHECK(gs[g.sample_count / 2] == doctest::Approx(0.5));  // centered peak
    p.kind = "squarewave";
    CHECK_THROWS_AS(make_profile(g, p), ParamRangeError);
}

TEST_CASE("config validation enforces the documented ranges") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.effective_dt() == doctest::Approx(0.5 / g.nyquist_wavenumber()));
    cfg.cutoff = 16.0;
    CHECK(cfg.effective_dt() == doctest::Approx(0.5 / 16.0));
    cfg.dt = 0.01;
    CHECK(cfg.effective_dt() == 0.01);

    auto reject = [&](auto mutate, auto tag) {
        SimConfig c = base_config(g);
        mutate(c);
        CHECK_THROWS_AS(c.validate(), decltype(tag));
    };
    reject([](SimConfig& c) { c.s = 1.4; }, SpecRangeError{""});
    reject([](SimConfig& c) { c.s = 2.0; }, SpecRangeError{""});
    reject([](SimConfig& c) { c.t_end = -1.0; }, NegativeTimeError{""});
    reject([](SimConfig& c) { c.snapshot_every = 0; }, ParamRangeError{""});
    reject([](SimConfig& c) { c.blowup_factor = 1.0; }, ParamRangeError{""});
    reject([](SimConfig& c) { c.cutoff = 0.5; }, ParamRangeError{""});
}

TEST_CASE("linear flow decays each mode exactly as exp(-|k| t)") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.nonlinear = false;
    cfg.dt = 0.125;
    cfg.t_end = 1.0;
    const RealField f0 = RealField::from_function(
        g, [](double x) { return 0.5 * std::sin(3 * x) + 0.25 * std::cos(7 * x) + 0.1; });
    const auto states = evolve(f0, cfg);
    const double t = states.back().t;
    CHECK(t == doctest::Approx(1.0));
    const RealField exact = RealField::from_function(g, [t](double x) {
        return 0.5 * std::exp(-3 * t) * std::sin(3 * x) + 0.25 * std::exp(-7 * t) * std::cos(7 * x) +
               0.1;
    });
    CHECK(rel_l2(states.back().f, exact) <= 1e-10);
}

TEST_CASE("stepper convergence orders under time-step halving") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.cutoff = 20.0;
    cfg.t_end = 0.1;
    cfg.snapshot_every = 1 << 20;  // keep only initial and final states
    cfg.profile.kind = "gaussian";
    cfg.profile.amplitude = 0.4;
    cfg.profile.width = 0.8;

    auto final_field = [&](Stepper st, double dt) {
        SimConfig c = cfg;
        c.stepper = st;
        c.dt = dt;
        return evolve(c).back().f;
    };
    for (Stepper st : {Stepper::EtdRk2, Stepper::Etd1}) {
        const RealField ref = final_field(st, 0.1 / 128);
        std::vector<double> hs, errs;
        for (double dt : {0.1 / 8, 0.1 / 16, 0.1 / 32}) {
            hs.push_back(dt);
            errs.push_back((final_field(st, dt) - ref).l2_norm());
        }
        const double order = fitted_order(hs, errs);
        if (st == Stepper::EtdRk2)
            CHECK(order >= 1.9);
        else {
            CHECK(order >= 0.9);
            CHECK(order <= 1.6);
        }
    }
}

TEST_CASE("nonlinear flow preserves the mean and does not raise the sup") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.t_end = 0.25;
    cfg.profile.kind = "gaussian";
    cfg.profile.amplitude = 0.2;
    cfg.profile.width = 1.0;
    const auto states = evolve(cfg);
    REQUIRE(states.size() >= 3);
    const double m0 = states.front().diag.mean;
    for (size_t i = 1; i < states.size(); ++i) {
        const auto& prev = states[i - 1];
        const auto& cur = states[i];
        CHECK(std::abs(cur.diag.mean - m0) <= 1e-9 * cur.t + 1e-13);
        CHECK(cur.diag.linf <= prev.diag.linf + 1e-6 * (cur.t - prev.t) + 1e-12);
    }
}

TEST_CASE("dissipation dominates the weighted high norm on every snapshot") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.t_end = 0.2;
    cfg.profile.kind = "gaussian";
    cfg.profile.amplitude = 0.4;
    cfg.profile.width = 0.8;
    int violations = 0;
    for (const SimState& st : evolve(cfg)) {
        const double k2 = st.diag.lipschitz * st.diag.lipschitz;
        const double lower = st.diag.hs_half * st.diag.hs_half / (1.0 + k2);
        if (st.diag.dissipation < lower * (1.0 - 1e-12)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("a step through a tiny ceiling reports blowup") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    const SimState st = make_state(0.0, make_gaussian(g, 0.5, 0.8), cfg);
    CHECK_THROWS_AS(step(st, cfg, 1e-6), BlowupError);
    CHECK_THROWS_AS(step(SimState{0.0, RealField::zeros(Grid::make(kPi, 256)), {}}, cfg),
                    GridMismatchError);
}

TEST_CASE("snapshot cadence keeps multiples of the stride plus both endpoints") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.dt = 0.01;
    cfg.t_end = 0.1;  // 10 steps
    cfg.snapshot_every = 4;
    cfg.profile.kind = "sine";
    const auto states = evolve(cfg);
    REQUIRE(states.size() == 4);
    CHECK(states[0].t == 0.0);
    CHECK(states[1].t == doctest::Approx(0.04));
    CHECK(states[2].t == doctest::Approx(0.08));
    CHECK(states[3].t == doctest::Approx(0.10));
}

TEST_CASE("energy report: interior rows, centered slopes, measured constant") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.t_end = 0.1;
    cfg.profile.kind = "gaussian";
    const auto states = evolve(cfg);
    const EnergyReport rep = energy_report(states);
    REQUIRE(rep.rows.size() == states.size() - 2);
    double fmax = -1e300;
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& row = rep.rows[i];
        const auto& a = states[i];
        const auto& b = states[i + 1];
        const auto& c = states[i + 2];
        CHECK(row.t == b.t);
        CHECK(row.hs_sq == doctest::Approx(b.diag.hs * b.diag.hs).epsilon(1e-13));
        CHECK(row.ddt_hs_sq ==
              doctest::Approx((c.diag.hs * c.diag.hs - a.diag.hs * a.diag.hs) / (c.t - a.t))
                  .epsilon(1e-12));
        const double k2 = row.lipschitz * row.lipschitz;
        fmax = std::max(fmax, (0.5 * row.ddt_hs_sq + row.hs_half_sq / (4.0 * (1.0 + k2))) / row.hs_sq);
    }
    CHECK(rep.f_measured == doctest::Approx(fmax).epsilon(1e-12));
    CHECK_THROWS_AS(energy_report({states[0], states[1]}), InsufficientDataError);
}

TEST_CASE("cutoff refinement differences shrink and report in order") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.dt = 0.01;
    cfg.t_end = 0.1;
    const RealField f0 = make_gaussian(g, 0.4, 0.8);
    const auto rows = cauchy_study(f0, {8.0, 16.0, 32.0}, 1.1, cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n_low == 8.0);
    CHECK(rows[0].n_high == 16.0);
    CHECK(rows[1].n_low == 16.0);
    CHECK(rows[1].n_high == 32.0);
    for (const auto& row : rows) {
        CHECK(std::isfinite(row.sup_total));
        CHECK(row.sup_total <= row.sup_l2 + row.sup_hsp + 1e-12);
        CHECK(row.sup_total >= std::max(row.sup_l2, row.sup_hsp) - 1e-12);
    }
    CHECK(rows[1].sup_total <= rows[0].sup_total * 1.1);
    CHECK_THROWS_AS(cauchy_study(f0, {8.0}, 1.1, cfg), InsufficientDataError);
}

TEST_CASE("stability study: zero perturbation stays identically zero") {
    const Grid g = small_grid();
    SimConfig cfg = base_config(g);
    cfg.t_end = 0.1;
    const RealField f0 = make_gaussian(g, 0.4, 0.8);
    const RealField pert = make_sine(g, 1.0, 5.0);

    const StabilityReport zero = stability_study(f0, pert, 0.0, cfg);
    CHECK(zero.initial == 0.0);
    CHECK(zero.c_measured == 0.0);
    for (double d : zero.diff_hhalf) CHECK(d == 0.0);

    const double eps = 1e-4;
    const StabilityReport rep = stability_study(f0, pert, eps, cfg);
    CHECK(rep.initial == doctest::Approx(eps * sobolev_norm(pert, 0.5)).epsilon(1e-10));
    CHECK(std::isfinite(rep.c_measured));
    CHECK(rep.times.size() == rep.diff_hhalf.size());
}
