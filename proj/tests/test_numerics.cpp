#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "conevol/errors.hpp"
#include "conevol/numerics/bisection.hpp"
#include "conevol/numerics/complex_ops.hpp"
#include "conevol/numerics/complex_polynomial.hpp"
#include "conevol/numerics/quadrature.hpp"

using namespace conevol::num;
using conevol::QuadratureError;
using conevol::RootFindingError;
using std::complex;

namespace {

struct Rng {
    std::uint64_t s;
    std::uint64_t bits() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(bits() >> 11) * 0x1.0p-53);
    }
    complex<double> disc(double r) { return {uniform(-r, r), uniform(-r, r)}; }
};

ComplexPolynomial from_roots(const std::vector<complex<double>>& roots) {
    std::vector<complex<double>> cs = {1.0};
    for (const auto& r : roots) {
        std::vector<complex<double>> next(cs.size() + 1, complex<double>(0.0));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            next[i + 1] += cs[i];
            next[i] -= cs[i] * r;
        }
        cs = std::move(next);
    }
    return ComplexPolynomial(cs);
}

double greedy_match_distance(std::vector<complex<double>> a, std::vector<complex<double>> b) {
    double worst = 0.0;
    for (const auto& x : a) {
        auto best = std::min_element(b.begin(), b.end(), [&](const auto& p, const auto& q) {
            return std::abs(p - x) < std::abs(q - x);
        });
        worst = std::max(worst, std::abs(*best - x));
        b.erase(best);
    }
    return worst;
}

/// companion-matrix eigenvalue oracle (test-side only)
std::vector<complex<double>> companion_roots(const ComplexPolynomial& p) {
    const int n = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const auto& c = p.coeffs();
    for (int i = 0; i < n - 1; ++i) m(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<complex<double>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

}  // namespace

TEST_CASE("roots of V^2 - 1") {
    const auto roots = find_roots(ComplexPolynomial({-1.0, 0.0, 1.0}));
    REQUIRE(roots.size() == 2);
    CHECK(greedy_match_distance({{1.0, 0.0}, {-1.0, 0.0}}, roots) < 1e-12);
}

TEST_CASE("degree one") {
    const auto roots = find_roots(ComplexPolynomial({4.0, 2.0}));
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - complex<double>(-2.0, 0.0)) < 1e-14);
}

TEST_CASE("roots of the A=0 quintic are the known real set") {
    // 8V^5 - 8V^3 + V; quadratic formula on 8W^2 - 8W + 1 for W = V^2
    const double wp = (2.0 + std::sqrt(2.0)) / 4.0;
    const double wm = (2.0 - std::sqrt(2.0)) / 4.0;
    const std::vector<complex<double>> expected = {
        {0.0, 0.0},
        {std::sqrt(wp), 0.0}, {-std::sqrt(wp), 0.0},
        {std::sqrt(wm), 0.0}, {-std::sqrt(wm), 0.0}};
    const auto roots = find_roots(ComplexPolynomial({0.0, 1.0, 0.0, -8.0, 0.0, 8.0}));
    REQUIRE(roots.size() == 5);
    CHECK(greedy_match_distance(expected, roots) < 1e-10);
    CHECK(std::abs(std::sqrt(wp) - 0.92388) < 1e-5);
    CHECK(std::abs(std::sqrt(wm) - 0.38268) < 1e-5);
}

TEST_CASE("construct-then-solve recovers random roots") {
    Rng rng{42};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<complex<double>> roots;
        for (int i = 0; i < 5; ++i) roots.push_back(rng.disc(2.0));
        const auto p = from_roots(roots);
        const auto found = find_roots(p);
        CHECK(greedy_match_distance(roots, found) < 1e-9);
        for (const auto& r : found) {
            double maxc = 0.0;
            for (const auto& c : p.coeffs()) maxc = std::max(maxc, std::abs(c));
            CHECK(std::abs(p.eval(r)) / (1.0 + maxc) < 1e-10);
        }
    }
}

TEST_CASE("roots agree with the companion-matrix oracle") {
    Rng rng{7};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<complex<double>> cs;
        for (int i = 0; i < 6; ++i) cs.push_back(rng.disc(3.0));
        if (std::abs(cs.back()) < 0.2) cs.back() += 1.0;
        const ComplexPolynomial p(cs);
        CHECK(greedy_match_distance(companion_roots(p), find_roots(p)) < 1e-8);
    }
}

TEST_CASE("real-coefficient roots come in conjugate pairs") {
    Rng rng{11};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<complex<double>> cs;
        for (int i = 0; i < 6; ++i) cs.emplace_back(rng.uniform(-3.0, 3.0), 0.0);
        if (std::abs(cs.back()) < 0.2) cs.back() += 1.0;
        auto roots = find_roots(ComplexPolynomial(cs));
        std::vector<complex<double>> conj;
        conj.reserve(roots.size());
        for (const auto& r : roots) conj.push_back(std::conj(r));
        CHECK(greedy_match_distance(conj, roots) < 1e-9);
    }
}

TEST_CASE("root finder error paths") {
    CHECK_THROWS_AS(find_roots(ComplexPolynomial({complex<double>(2.0)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(ComplexPolynomial({}), std::invalid_argument);
    CHECK_THROWS_AS(ComplexPolynomial({complex<double>(0.0), complex<double>(
                        std::numeric_limits<double>::quiet_NaN())}),
                    std::invalid_argument);

    // iteration cap: one sweep cannot settle a degree-8 cluster
    std::vector<complex<double>> roots(8, complex<double>(0.5, 0.25));
    const auto p = from_roots(roots);
    RootOptions opts;
    opts.max_iterations = 1;
    opts.tol = 1e-14;
    try {
        find_roots(p, opts);
        FAIL("expected RootFindingError");
    } catch (const RootFindingError& e) {
        CHECK(e.best_roots.size() == 8);
        CHECK(e.scaled_residuals.size() == 8);
    }
}

TEST_CASE("quadrature on smooth integrals") {
    const auto s = adaptive_integrate([](double x) { return std::sin(x); }, 0.0,
                                      std::numbers::pi, 1e-12);
    CHECK(std::abs(s.value - 2.0) < 1e-10);
    CHECK(std::abs(s.value - 2.0) <= std::max(1e-10, s.err_estimate));

    const auto q = adaptive_integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-13);
    CHECK(std::abs(q.value - 1.0 / 3.0) < 1e-12);

    const auto zero_len = adaptive_integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-10);
    CHECK(zero_len.value == 0.0);
}

TEST_CASE("quadrature linearity on random polynomial integrands") {
    Rng rng{3};
    for (int trial = 0; trial < 10; ++trial) {
        double a[4], b[4];
        for (int i = 0; i < 4; ++i) {
            a[i] = rng.uniform(-2.0, 2.0);
            b[i] = rng.uniform(-2.0, 2.0);
        }
        auto fa = [&](double x) { return a[0] + x * (a[1] + x * (a[2] + x * a[3])); };
        auto fb = [&](double x) { return b[0] + x * (b[1] + x * (b[2] + x * b[3])); };
        auto fab = [&](double x) { return fa(x) + fb(x); };
        const auto ia = adaptive_integrate(fa, -1.0, 2.0, 1e-12);
        const auto ib = adaptive_integrate(fb, -1.0, 2.0, 1e-12);
        const auto iab = adaptive_integrate(fab, -1.0, 2.0, 1e-12);
        CHECK(std::abs(iab.value - (ia.value + ib.value)) <=
              ia.err_estimate + ib.err_estimate + iab.err_estimate + 1e-12);
    }
}

TEST_CASE("quadrature self-consistency under tolerance halving") {
    auto f = [](double x) { return std::exp(-x) * std::cos(5.0 * x); };
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        const auto c = adaptive_integrate(f, 0.0, 3.0, tol);
        const auto fine = adaptive_integrate(f, 0.0, 3.0, tol / 2.0);
        CHECK(std::abs(c.value - fine.value) < 10.0 * tol);
    }
}

TEST_CASE("quadrature depth exhaustion carries a partial value") {
    // discontinuity at an irrational point defeats bisection at tiny depth
    auto f = [](double x) { return x > 1.0 / std::numbers::pi ? 1.0 : 0.0; };
    QuadratureOptions opts;
    opts.tol = 1e-14;
    opts.max_depth = 4;
    try {
        adaptive_integrate(f, 0.0, 1.0, opts);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::abs(e.partial_value - (1.0 - 1.0 / std::numbers::pi)) < 0.05);
        CHECK(e.err_estimate > 0.0);
    }
    CHECK_THROWS_AS(adaptive_integrate([](double) { return 1.0; }, 1.0, 0.0, 1e-8),
                    std::invalid_argument);
}

TEST_CASE("bisection") {
    CHECK(std::abs(bisect([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12) -
                   std::sqrt(2.0)) < 1e-11);
    CHECK(std::abs(bisect([](double x) { return x; }, -1.0, 1.0, 1e-12)) < 1e-11);
    CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(bisect([](double x) { return x; }, 1.0, -1.0, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("principal branches") {
    CHECK(std::abs(principal_acosh({1.0, 0.0})) < 1e-15);
    CHECK(std::abs(principal_sqrt({-1.0, 0.0}) - complex<double>(0.0, 1.0)) < 1e-15);
    CHECK(principal_sqrt({-4.0, 0.0}).real() >= 0.0);

    Rng rng{8};
    for (int i = 0; i < 100; ++i) {
        // stay off the branch cut (-inf, 1] on the real axis
        complex<double> z = rng.disc(3.0);
        if (std::abs(z.imag()) < 1e-3) z += complex<double>(0.0, 0.5);
        const auto r = principal_acosh(z);
        CHECK(r.real() >= 0.0);
        CHECK(std::abs(std::cosh(r) - z) < 1e-12 * (1.0 + std::abs(z)));
        CHECK(principal_sqrt(z).real() >= 0.0);
    }
}
