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

Grid small_grid() { return Grid::make(std::numbers::pi, 128); }

RealField noise(const Grid& g, std::uint64_t seed = 11) {
    EnsembleSpec es;
    es.grid = g;
    es.seed = seed;
    es.count = 1;
    return random_field(es, 0);
}

}  // namespace

TEST_CASE("to_spectrum matches a direct DFT") {
    const Grid g = small_grid();
    const RealField u = noise(g);
    const Spectrum s = to_spectrum(u);
    const auto ref = direct_dft(u);
    REQUIRE(s.bins.size() == ref.size());
    double scale = 0.0;
    for (const auto& b : ref) scale = std::max(scale, std::abs(b));
    for (size_t j = 0; j < ref.size(); ++j)
        CHECK(std::abs(s.bins[j] - ref[j]) <= 1e-12 * scale);
}

TEST_CASE("to_field inverts to_spectrum bit-tightly") {
    const Grid g = small_grid();
    const RealField u = noise(g, 3);
    const RealField back = to_field(to_spectrum(u));
    for (int m = 0; m < u.size(); ++m) CHECK(back[m] == doctest::Approx(u[m]).epsilon(1e-14));
}

TEST_CASE("Parseval: h sum u^2 equals (h/N) sum |u_hat|^2") {
    const Grid g = small_grid();
    const RealField u = noise(g, 5);
    const Spectrum s = to_spectrum(u);
    double spectral = std::norm(s.bins[0]) + std::norm(s.bins[g.nyquist_index()]);
    for (int j = 1; j < g.nyquist_index(); ++j) spectral += 2.0 * std::norm(s.bins[j]);
    spectral *= g.spacing() / g.sample_count;
    const double sample = u.l2_norm() * u.l2_norm();
    CHECK(spectral == doctest::Approx(sample).epsilon(1e-12));
}

TEST_CASE("Lambda acts as |k| on pure modes") {
    const Grid g = small_grid();
    for (int k : {1, 3, 17}) {
        const RealField u = RealField::from_function(g, [&](double x) { return std::sin(k * x); });
        const RealField lam = apply_lambda(u, 1.0);
        const RealField expect = RealField::from_function(g, [&](double x) { return k * std::sin(k * x); });
        CHECK(rel_l2(lam, expect) <= 1e-10);
    }
}

TEST_CASE("Lambda^sigma scales modes by |k|^sigma, including negative sigma") {
    const Grid g = small_grid();
    const double k = 4.0;
    const RealField u = RealField::from_function(g, [&](double x) { return std::cos(k * x); });
    const RealField up = apply_lambda(u, 1.6);
    const RealField down = apply_lambda(up, -1.6);
    CHECK(rel_l2(down, u) <= 1e-12);
    CHECK(up.l2_norm() == doctest::Approx(std::pow(k, 1.6) * u.l2_norm()).epsilon(1e-12));
}

TEST_CASE("negative Lambda power rejects nonzero mean") {
    const Grid g = small_grid();
    RealField u = RealField::from_function(g, [](double x) { return 1.0 + std::sin(x); });
    CHECK_THROWS_AS(apply_lambda(u, -0.5), NonZeroMeanError);
}

TEST_CASE("Hilbert transform matches the dense cot-kernel convolution") {
    const Grid g = small_grid();
    RealField u = noise(g, 7);
    const RealField h1 = hilbert(u);
    const RealField h2 = direct_hilbert(u);
    CHECK((h1 - h2).max_abs() <= 1e-12 * u.max_abs());
}

TEST_CASE("Hilbert transform on modes: H cos = sin, H sin = -cos") {
    const Grid g = small_grid();
    const double k = 5.0;
    const RealField c = RealField::from_function(g, [&](double x) { return std::cos(k * x); });
    const RealField s = RealField::from_function(g, [&](double x) { return std::sin(k * x); });
    CHECK(rel_l2(hilbert(c), s) <= 1e-12);
    CHECK(rel_l2(hilbert(s), -1.0 * c) <= 1e-12);
}

TEST_CASE("H^2 = -identity on mean-zero fields") {
    const Grid g = small_grid();
    const RealField u = noise(g, 9);
    const RealField hh = hilbert(hilbert(u));
    CHECK(rel_l2(hh, -1.0 * u) <= 1e-10);
}

TEST_CASE("Lambda equals H d/dx on band-limited data") {
    const Grid g = small_grid();
    const RealField u = noise(g, 13);
    CHECK(rel_l2(hilbert(derivative(u)), apply_lambda(u, 1.0)) <= 1e-12);
}

TEST_CASE("derivative of sin(kx) and the Nyquist convention") {
    const Grid g = small_grid();
    const double k = 6.0;
    const RealField u = RealField::from_function(g, [&](double x) { return std::sin(k * x); });
    const RealField expect =
        RealField::from_function(g, [&](double x) { return k * std::cos(k * x); });
    CHECK(rel_l2(derivative(u), expect) <= 1e-10);
    // the Nyquist cosine has zero spectral derivative on the samples
    const double kn = g.nyquist_wavenumber();
    const RealField ny = RealField::from_function(g, [&](double x) { return std::cos(kn * x); });
    CHECK(derivative(ny).max_abs() <= 1e-12);
    CHECK(rel_l2(second_derivative(u), -k * k * u) <= 1e-10);
}

TEST_CASE("heat semigroup decays modes by exp(-t|k|)") {
    const Grid g = small_grid();
    for (int k : {1, 8}) {
        const RealField u =
            RealField::from_function(g, [&](double x) { return std::cos(k * x); });
        const RealField v = heat_semigroup(u, 0.7);
        CHECK(rel_l2(v, std::exp(-0.7 * k) * u) <= 1e-10);
    }
    CHECK_THROWS_AS(heat_semigroup(noise(g), -0.1), NegativeTimeError);
}

TEST_CASE("projection zeroes the tail and is idempotent") {
    const Grid g = small_grid();
    const RealField u = noise(g, 17);
    const RealField p = project(u, 10.0);
    const Spectrum s = to_spectrum(p);
    for (int j = 0; j <= g.nyquist_index(); ++j)
        if (g.wavenumber(j) > 10.0) CHECK(std::abs(s.bins[j]) <= 1e-12);
    CHECK((project(p, 10.0) - p).max_abs() <= 1e-14);
    // projection commutes with the multiplier
    CHECK(rel_l2(project(apply_lambda(u, 1.0), 10.0), apply_lambda(p, 1.0)) <= 1e-12);
}

TEST_CASE("translate by grid multiples is an exact cyclic shift") {
    const Grid g = small_grid();
    const RealField u = noise(g, 19);
    const RealField t = translate(u, 5 * g.spacing());
    for (int m = 0; m < u.size(); ++m) CHECK(t[m] == u.at_wrapped(m - 5));
    const RealField back = translate(t, -5 * g.spacing());
    for (int m = 0; m < u.size(); ++m) CHECK(back[m] == u[m]);
}

TEST_CASE("off-grid translate is spectrally exact on band-limited data") {
    const Grid g = small_grid();
    const double k = 3.0;
    const RealField u = RealField::from_function(g, [&](double x) { return std::sin(k * x); });
    const double a = 0.37;  // not a grid multiple
    const RealField t = translate(u, a);
    const RealField expect =
        RealField::from_function(g, [&](double x) { return std::sin(k * (x - a)); });
    CHECK(rel_l2(t, expect) <= 1e-12);
}

TEST_CASE("resolvent inverts 1 + Lambda^sigma mode by mode") {
    const Grid g = small_grid();
    const double k = 7.0, sigma = 1.25;
    const RealField u = RealField::from_function(g, [&](double x) { return std::cos(k * x); });
    const RealField r = resolvent_lambda(u, sigma);
    CHECK(rel_l2(r, (1.0 / (1.0 + std::pow(k, sigma))) * u) <= 1e-12);
    // constants are fixed points: the zero mode carries weight 1/(1+0)
    RealField c = RealField::from_function(g, [](double) { return 2.5; });
    CHECK((resolvent_lambda(c, sigma) - c).max_abs() <= 1e-12);
}

TEST_CASE("dealiased product is the exact Galerkin product of cosines") {
    const Grid g = small_grid();  // N = 128, cutoff band N/3 -> index 42
    const RealField a = RealField::from_function(g, [](double x) { return std::cos(3 * x); });
    const RealField b = RealField::from_function(g, [](double x) { return std::cos(5 * x); });
    const RealField p = dealiased_product(a, b);
    const RealField expect = RealField::from_function(
        g, [](double x) { return 0.5 * (std::cos(2 * x) + std::cos(8 * x)); });
    CHECK(rel_l2(p, expect) <= 1e-12);
}

TEST_CASE("dealiased product keeps no content above N/3") {
    const Grid g = small_grid();
    const RealField a = noise(g, 23);
    const RealField b = noise(g, 29);
    const Spectrum s = to_spectrum(dealiased_product(a, b));
    for (int j = g.sample_count / 3 + 1; j <= g.nyquist_index(); ++j)
        CHECK(std::abs(s.bins[j]) <= 1e-12);
}

TEST_CASE("paraproduct is a contraction from the resolvent weight") {
    const Grid g = small_grid();
    const RealField a = noise(g, 31);
    const RealField u = noise(g, 37);
    const double eps = 0.25;
    const RealField p = paraproduct(a, u, eps);
    CHECK(p.is_finite());
    // (1 + Lambda^{1+eps})^{-1} applied after the product bounds the result
    // by the plain dealiased product of a with Lambda^{1+eps} u
    const RealField raw = dealiased_product(a, apply_lambda(u, 1.0 + eps));
    CHECK(p.l2_norm() <= raw.l2_norm() + 1e-12);
}

TEST_CASE("hilbert commutator vanishes for constant multiplier") {
    const Grid g = small_grid();
    const RealField u = noise(g, 41);
    const RealField c = RealField::from_function(g, [](double) { return 3.0; });
    CHECK(hilbert_commutator(c, u).max_abs() <= 1e-12 * u.max_abs());
    // and is antisymmetric under exchanging roles in the L2 pairing
    const RealField f = noise(g, 43);
    const RealField lhs = hilbert_commutator(f, u);
    CHECK(lhs.is_finite());
}
