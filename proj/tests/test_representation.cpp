#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "conevol/algebra/rm_polynomial.hpp"
#include "conevol/conevolume/cone_volume.hpp"
#include "conevol/numerics/complex_polynomial.hpp"
#include "conevol/representation/identities.hpp"
#include "conevol/representation/rep_point.hpp"
#include "conevol/representation/words.hpp"

using namespace conevol;
using namespace conevol::rep;
using algebra::GaussianRational;
using algebra::Rational;
using std::complex;

namespace {

constexpr double kPi = std::numbers::pi;

RepPoint geometric_point(double alpha) {
    const double A = 1.0 / std::tan(alpha / 2.0);
    const auto roots = num::find_roots(cone::rm_poly_at(A));
    return RepPoint::from_alpha_and_v(alpha, cone::select_geometric_root(roots, alpha).V);
}

double commutator_distance(const Generators& g, const Mat2c& w) {
    return distance(g.S * w * g.S.inverse() * w.inverse(), Mat2c::identity());
}

}  // namespace

TEST_CASE("generator traces and determinants") {
    Sl2Sampler rng(1);
    for (int i = 0; i < 50; ++i) {
        const double alpha = rng.uniform(0.1, kPi);
        const complex<double> rho(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const auto p = RepPoint::from_alpha_and_rho(alpha, rho);
        const auto g = build_generators(p);
        const double expected = 2.0 * std::cos(alpha / 2.0);
        CHECK(std::abs(g.S.trace() - expected) < 1e-12);
        CHECK(std::abs(g.T.trace() - expected) < 1e-12);
        CHECK(std::abs(g.S.det() - 1.0) < 1e-12);
        CHECK(std::abs(g.T.det() - 1.0) < 1e-12);
        CHECK(distance(g.n * g.n, -Mat2c::identity()) == 0.0);
        // the involution swaps each generator with its inverse
        CHECK(distance(g.n * g.S, g.S.inverse() * g.n) < 1e-12);
        CHECK(distance(g.n * g.T, g.T.inverse() * g.n) < 1e-12);
    }
    const auto g = build_generators(RepPoint::from_alpha_and_rho(kPi, {0.3, 0.1}));
    CHECK(std::abs(g.S.trace()) < 1e-12);  // alpha = pi
}

TEST_CASE("rep point invariants") {
    const auto p = RepPoint::from_alpha_and_v(1.0, {-0.645035117785688, 3.36059739708184});
    CHECK(std::abs(p.A - 1.0 / std::tan(0.5)) < 1e-15);
    CHECK(std::abs(std::cosh(p.rho) - p.V) < 1e-10);
    CHECK(p.rho.real() >= 0.0);
    CHECK_THROWS_AS(RepPoint::from_alpha_and_v(0.0, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(RepPoint::from_alpha_and_v(4.0, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("word evaluation basics") {
    CHECK(word_eval<complex<double>>({}, Mat2c::identity(), Mat2c::identity()) ==
          Mat2c::identity());

    Sl2Sampler rng(2);
    for (int i = 0; i < 20; ++i) {
        const double alpha = rng.uniform(0.2, 3.0);
        const complex<double> rho(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const auto g = build_generators(RepPoint::from_alpha_and_rho(alpha, rho));
        const auto w = word_eval<complex<double>>(relator_word(), g.S, g.T);
        CHECK(std::abs(w.det() - 1.0) < 1e-10);
    }
    CHECK(relator_word().size() == 17);
    CHECK(longitude_s_word().size() == 18);
    CHECK(longitude_t_word().size() == 18);
}

TEST_CASE("relation holds at geometric roots") {
    for (double alpha : {0.5, 1.0, 1.7, 2.4, 2.8}) {
        const auto p = geometric_point(alpha);
        const auto g = build_generators(p);
        const auto w = word_eval<complex<double>>(relator_word(), g.S, g.T);
        CHECK(commutator_distance(g, w) < 1e-8);
    }
}

TEST_CASE("trace of SWn vanishes on both factors") {
    // at geometric roots of the quintic
    for (double alpha : {0.6, 1.3, 2.1}) {
        CHECK(std::abs(trace_swn(geometric_point(alpha))) < 1e-8);
    }
    // at roots of the companion factor 2V^2 + A^4 + 2A^2 - 1
    for (double alpha : {0.8, 1.9, 2.6}) {
        const double A = 1.0 / std::tan(alpha / 2.0);
        const double a2 = A * A;
        const complex<double> v =
            std::sqrt(complex<double>((1.0 - a2 * a2 - 2.0 * a2) / 2.0, 0.0));
        CHECK(std::abs(trace_swn(RepPoint::from_alpha_and_v(alpha, v))) < 1e-8);
    }
    // sinh(rho) = 0 kills the product
    CHECK(std::abs(trace_swn(RepPoint::from_alpha_and_rho(1.2, {0.0, 0.0}))) < 1e-10);
}

TEST_CASE("involution square identity at random variety points") {
    Sl2Sampler rng(3);
    for (int i = 0; i < 200; ++i) {
        const double alpha = rng.uniform(0.15, 3.0);
        const complex<double> rho(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const auto g = build_generators(RepPoint::from_alpha_and_rho(alpha, rho));
        const auto w = word_eval<complex<double>>(relator_word(), g.S, g.T);
        const auto swn = g.S * w * g.n;
        const auto lhs = g.S * w * g.S.inverse() * w.inverse();
        CHECK(distance(lhs, -(swn * swn)) < 1e-8);
    }
}

TEST_CASE("longitude trace lemma holds for arbitrary SL(2,C) pairs") {
    Sl2Sampler rng(4);
    for (int i = 0; i < 200; ++i) {
        const Mat2c s = rng.next();
        const Mat2c t = rng.next();
        CHECK(std::abs(s.det() - 1.0) < 1e-12);
        const auto [ls, lt] = longitudes(s, t);
        CHECK(std::abs((s.inverse() * lt).trace() - s.trace()) < 1e-9);
        CHECK(std::abs((t.inverse() * ls).trace() - t.trace()) < 1e-9);
    }
}

TEST_CASE("longitude eigenvalues at a geometric root") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        const auto p = geometric_point(alpha);
        const auto g = build_generators(p);
        const auto [ls, lt] = longitudes(g.S, g.T);
        (void)ls;
        const complex<double> L = longitude_eigenvalue(p.A, p.V);
        // eigenvalues of the unit-determinant longitude are {L, 1/L}
        const complex<double> tr = lt.trace();
        const complex<double> disc = std::sqrt(tr * tr - 4.0);
        const complex<double> e1 = (tr + disc) / 2.0;
        const complex<double> e2 = (tr - disc) / 2.0;
        CHECK(std::min(std::abs(e1 - L), std::abs(e2 - L)) < 1e-8);
    }
}

TEST_CASE("pythagorean consistency") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        CHECK(pythagorean_check(geometric_point(alpha)) < 1e-8);
    }

    // real roots past the transition give unit-modulus eigenvalue
    const double alpha = 3.0;
    const double A = 1.0 / std::tan(alpha / 2.0);
    const auto roots = num::find_roots(cone::rm_poly_at(A));
    for (const auto& r : roots) {
        CHECK(std::abs(r.imag()) < 1e-9);  // spherical regime: all real
        CHECK(std::abs(std::abs(longitude_eigenvalue(A, {r.real(), 0.0})) - 1.0) < 1e-10);
    }

    // direct substitution: V = 0, A = 1
    CHECK(std::abs(longitude_eigenvalue(1.0, {0.0, 0.0}) - complex<double>(1.0, 0.0)) <
          1e-15);
    CHECK_THROWS_AS(longitude_eigenvalue(1.0, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(pythagorean_check(RepPoint::from_alpha_and_v(1.0, {0.5, 0.0})),
                    std::domain_error);
}

TEST_CASE("exact sample validation") {
    CHECK_THROWS_AS(ExactSample(Rational(1, 2), Rational(1, 2), Rational(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExactSample(Rational(1), Rational(0), Rational(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExactSample(Rational(3, 5), Rational(4, 5), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExactSample::from_circle_parameter(Rational(0), Rational(2)),
                    std::invalid_argument);

    const auto s = ExactSample::from_circle_parameter(Rational(1, 2), Rational(3));
    CHECK(s.c == Rational(3, 5));
    CHECK(s.s == Rational(4, 5));
    CHECK(s.c * s.c + s.s * s.s == 1);
}

TEST_CASE("exact generators have exact unit determinant") {
    const auto g = build_exact_generators(
        ExactSample(Rational(3, 5), Rational(4, 5), Rational(7, 2)));
    CHECK(g.S.det() == GaussianRational(1));
    CHECK(g.T.det() == GaussianRational(1));
    CHECK(g.n.det() == GaussianRational(1));
    const auto w = word_eval<GaussianRational>(relator_word(), g.S, g.T);
    CHECK(w.det() == GaussianRational(1));
}

TEST_CASE("exact trace identity on the stated samples") {
    CHECK(exact_identity_check(ExactSample(Rational(3, 5), Rational(4, 5), Rational(2))));
    CHECK(exact_identity_check(ExactSample(Rational(0), Rational(1), Rational(3))));

    // u = 1 forces sinh(rho) = 0: both sides exactly zero
    const ExactSample degenerate(Rational(3, 5), Rational(4, 5), Rational(1));
    CHECK(exact_identity_check(degenerate));
    const auto g = build_exact_generators(degenerate);
    const auto w = word_eval<GaussianRational>(relator_word(), g.S, g.T);
    CHECK((g.S * w * g.n).trace() == GaussianRational(0));
}

TEST_CASE("exact trace identity on a family slice") {
    const auto family = exact_sample_family(120);
    REQUIRE(family.size() == 120);
    for (const auto& s : family) CHECK(exact_identity_check(s));
}

TEST_CASE("family enumeration is deterministic and well-formed") {
    const auto a = exact_sample_family(1369);
    const auto b = exact_sample_family(1369);
    REQUIRE(a.size() == 1369);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].c == b[i].c);
        CHECK(a[i].u == b[i].u);
        CHECK(a[i].c * a[i].c + a[i].s * a[i].s == 1);
    }
}
