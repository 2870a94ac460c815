#include <cmath>
#include <numbers>

#include "doctest.h"
#include "muskatlab/estimator.hpp"
#include "muskatlab/norms.hpp"
#include "muskatlab/spectral.hpp"
#include "support.hpp"

using namespace muskat;
using namespace muskat::testing;

namespace {

constexpr double kPi = std::numbers::pi;

Grid small_grid() { return Grid::make(kPi, 128); }

RealField mode(const Grid& g, int k) {
    return RealField::from_function(g, [k](double x) { return std::sin(k * x); });
}

RealField noise(const Grid& g, std::uint64_t seed = 11) {
    EnsembleSpec es;
    es.grid = g;
    es.seed = seed;
    es.count = 1;
    return random_field(es, 0);
}

// converged Simpson quadrature (in log alpha) of the single-mode Besov
// integrand over the same window the library integrates
double besov_mode_oracle(const Grid& g, int k, const BesovSpec& spec) {
    const double amin = spec.alpha_min == 0.0 ? g.spacing() : spec.alpha_min;
    const double amax = spec.alpha_max == 0.0 ? g.half_length : spec.alpha_max;
    auto inner = [&](double a) {
        if (spec.p == 2) {
            const double amp =
                spec.s < 1.0 ? 2.0 * std::abs(std::sin(k * a / 2)) : 2.0 * (1.0 - std::cos(k * a));
            return amp * std::sqrt(kPi);
        }
        // grid sup of the translated cosine envelope
        double mx = 0.0;
        for (int m = 0; m < g.sample_count; ++m)
            mx = std::max(mx, std::abs(std::cos(k * (g.x(m) - a / 2))));
        const double amp = spec.s < 1.0 ? 2.0 * std::abs(std::sin(k * a / 2)) : 2.0 * (1.0 - std::cos(k * a));
        return amp * mx;
    };
    const int steps = 20000;
    const double dt = std::log(amax / amin) / steps;
    double acc = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double a = amin * std::exp(i * dt);
        const double v = inner(a) / std::pow(a, spec.s);
        const double integrand = spec.q == 2 ? v * v : v;
        const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * dt / 3.0 * integrand;
    }
    acc *= 2.0;
    return spec.q == 2 ? std::sqrt(acc) : acc;
}

}  // namespace

TEST_CASE("lp norms: closed forms and parameter gate") {
    const Grid g = small_grid();
    const RealField u = noise(g);
    CHECK(lp_norm(u, 2.0) == doctest::Approx(u.l2_norm()).epsilon(1e-13));
    const RealField c = RealField::from_function(g, [](double) { return 1.5; });
    CHECK(lp_norm(c, 1.0) == doctest::Approx(1.5 * 2 * kPi).epsilon(1e-13));
    // sin^4 integrates to 3 pi / 4 over the period, exactly on the grid
    CHECK(lp_norm(mode(g, 1), 4.0) == doctest::Approx(std::pow(0.75 * kPi, 0.25)).epsilon(1e-13));
    CHECK(linf_norm(c) == 1.5);
    CHECK_THROWS_AS(lp_norm(u, 0.5), ParamRangeError);
}

TEST_CASE("Sobolev norm: spectral closed forms on single modes") {
    const Grid g = small_grid();
    const RealField u = mode(g, 3);
    const double l2 = std::sqrt(kPi);
    CHECK(sobolev_norm(u, 0.0) == doctest::Approx(u.l2_norm()).epsilon(1e-13));
    CHECK(sobolev_norm(u, 1.6) == doctest::Approx(std::pow(3.0, 1.6) * l2).epsilon(1e-12));
    CHECK(sobolev_norm(u, -0.5) == doctest::Approx(std::pow(3.0, -0.5) * l2).epsilon(1e-12));
    CHECK(nonhomogeneous_sobolev_norm(u, 1.6) ==
          doctest::Approx(std::pow(10.0, 0.8) * l2).epsilon(1e-12));
}

TEST_CASE("Sobolev norm: zero mode handling") {
    const Grid g = small_grid();
    const RealField c = RealField::from_function(g, [](double) { return 0.7; });
    CHECK(sobolev_norm(c, 0.0) == doctest::Approx(0.7 * std::sqrt(2 * kPi)).epsilon(1e-13));
    CHECK(sobolev_norm(c, 1.0) == 0.0);
    CHECK(nonhomogeneous_sobolev_norm(c, 1.0) ==
          doctest::Approx(0.7 * std::sqrt(2 * kPi)).epsilon(1e-13));
    CHECK_THROWS_AS(sobolev_norm(c, -0.5), NonZeroMeanError);
    RealField bad = c;
    bad[3] = std::nan("");
    CHECK_THROWS_AS(sobolev_norm(bad, 1.0), NonFiniteError);
}

TEST_CASE("intersection norm is the sum of the two norms") {
    const Grid g = small_grid();
    const RealField u = noise(g, 4);
    CHECK(sobolev_intersection_norm(u, 1.0, 1.5) ==
          doctest::Approx(sobolev_norm(u, 1.0) + sobolev_norm(u, 1.5)).epsilon(1e-13));
}

TEST_CASE("Besov seminorm matches a converged single-mode quadrature") {
    const Grid g = small_grid();
    BesovSpec spec;

    SUBCASE("first differences, p = 2, q = 2") {
        spec.s = 0.5;
        CHECK(besov_norm(mode(g, 3), spec) ==
              doctest::Approx(besov_mode_oracle(g, 3, spec)).epsilon(2e-2));
    }
    SUBCASE("second differences, p = 2, q = 2") {
        spec.s = 1.3;
        CHECK(besov_norm(mode(g, 3), spec) ==
              doctest::Approx(besov_mode_oracle(g, 3, spec)).epsilon(2e-2));
    }
    SUBCASE("sup inner norm, q = 1") {
        spec.s = 0.7;
        spec.p = kBesovPInf;
        spec.q = 1;
        CHECK(besov_norm(mode(g, 3), spec) ==
              doctest::Approx(besov_mode_oracle(g, 3, spec)).epsilon(2e-2));
    }
}

TEST_CASE("Besov seminorm scales linearly and respects the whole-window constant") {
    const Grid g = Grid::make(kPi, 4096);
    BesovSpec spec;
    spec.s = 0.5;
    const RealField u = mode(g, 40);
    const double b = besov_norm(u, spec);
    CHECK(besov_norm(3.0 * u, spec) == doctest::Approx(3.0 * b).epsilon(1e-12));
    // window wide enough in both directions that the seminorm approaches
    // sqrt(2 c(s)) times the homogeneous H^s norm, c(1/2) = pi
    const double ideal = std::sqrt(2.0 * cs_constant(0.5)) * sobolev_norm(u, 0.5);
    CHECK(b == doctest::Approx(ideal).epsilon(8e-2));
}

TEST_CASE("Besov spec validation rejects out-of-range parameters") {
    const Grid g = small_grid();
    auto reject = [&](auto mutate) {
        BesovSpec spec;
        mutate(spec);
        CHECK_THROWS_AS(spec.validate(g), SpecRangeError);
    };
    reject([](BesovSpec& s) { s.s = 2.0; });
    reject([](BesovSpec& s) { s.p = 3; });
    reject([](BesovSpec& s) { s.q = 3; });
    reject([&](BesovSpec& s) { s.alpha_min = 0.1 * g.spacing(); });
    reject([&](BesovSpec& s) { s.alpha_max = 1.5 * g.half_length; });
    reject([](BesovSpec& s) { s.nodes_per_decade = 2; });
    BesovSpec ok;
    CHECK_NOTHROW(ok.validate(g));
}

TEST_CASE("Holder norm: constant fields and brute-force agreement") {
    const Grid g = small_grid();
    const RealField c = RealField::from_function(g, [](double) { return -2.0; });
    CHECK(holder_norm(c, 0.3) == doctest::Approx(2.0).epsilon(1e-13));

    const RealField u = noise(g, 9);
    const double nu = 0.4;
    double semi = 0.0;
    for (int m = 1; m <= g.sample_count / 2; ++m) {
        double diff = 0.0;
        for (int i = 0; i < g.sample_count; ++i)
            diff = std::max(diff, std::abs(u.at_wrapped(i + m) - u[i]));
        semi = std::max(semi, diff / std::pow(m * g.spacing(), nu));
    }
    CHECK(holder_norm(u, nu) == doctest::Approx(u.max_abs() + semi).epsilon(1e-13));
    CHECK_THROWS_AS(holder_norm(u, 0.0), NuRangeError);
    CHECK_THROWS_AS(holder_norm(u, 1.0), NuRangeError);
}

TEST_CASE("Lipschitz bound is the sup of the spectral derivative") {
    const Grid g = small_grid();
    CHECK(lipschitz_sup(mode(g, 3)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lipschitz_sup(noise(g)) == derivative(noise(g)).max_abs());
}

TEST_CASE("interpolation ratio is 1 on single modes and never above 1") {
    const Grid g = small_grid();
    CHECK(check_interpolation(mode(g, 5), 1.6, 0.25) == doctest::Approx(1.0).epsilon(1e-10));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const RealField u = noise(g, seed);
        for (double eps : {0.1, 0.25, 0.4})
            CHECK(check_interpolation(u, 1.6, eps) <= 1.0 + 1e-9);
    }
    CHECK_THROWS_AS(check_interpolation(mode(g, 5), 1.6, 0.0), ExponentMismatchError);
    CHECK_THROWS_AS(check_interpolation(mode(g, 5), 1.6, 1.0), ExponentMismatchError);
    CHECK_THROWS_AS(check_interpolation(mode(g, 5), -1.0, 0.25), ExponentMismatchError);
}

TEST_CASE("finite-difference constant oracle") {
    // c(s) = integral of (1 - cos t) / |t|^{1+2s}; the anchor c(1/2) = pi
    CHECK(cs_constant(0.5) == doctest::Approx(kPi).epsilon(1e-7));
}
