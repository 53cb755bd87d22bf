#include "conevol/conevolume/cone_volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "conevol/algebra/rm_polynomial.hpp"
#include "conevol/errors.hpp"
#include "conevol/numerics/bisection.hpp"
#include "conevol/numerics/quadrature.hpp"

namespace conevol::cone {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSignSlack = 1e-9;

void sort_canonically(std::vector<std::complex<double>>& roots) {
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

double cot_half_angle(double alpha) {
    if (alpha == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::tan(alpha / 2.0);
}

}  // namespace

ConeAngle::ConeAngle(double radians) : radians_(radians) {
    if (!std::isfinite(radians) || radians < 0.0 || radians > kPi + 1e-12)
        throw std::invalid_argument("ConeAngle: radians must lie in [0, pi]");
}

double ConeAngle::cot_half() const { return cot_half_angle(radians_); }

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::Hyperbolic: return "hyperbolic";
        case Regime::Euclidean: return "euclidean";
        case Regime::Spherical: return "spherical";
    }
    return "unknown";
}

num::ComplexPolynomial rm_poly_at(double A) {
    if (!std::isfinite(A)) throw std::invalid_argument("rm_poly_at: non-finite A");
    const auto exact = algebra::rm_coefficients_exact();  // descending V-degree
    std::vector<std::complex<double>> ascending(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
        ascending[exact.size() - 1 - i] = exact[i].eval_double(A);
    return num::ComplexPolynomial(std::move(ascending));
}

GeometricRoot select_geometric_root(const std::vector<std::complex<double>>& roots,
                                    double alpha) {
    GeometricRoot out;
    out.all_roots = roots;
    sort_canonically(out.all_roots);
    out.selection_rule_applied = "max-Im among {Re <= 0, Im >= 0} (1e-9 slack)";

    const std::complex<double>* best = nullptr;
    for (const auto& r : out.all_roots) {
        if (r.imag() < -kSignSlack || r.real() > kSignSlack) continue;
        if (!best || r.imag() > best->imag() ||
            (r.imag() == best->imag() && r.real() > best->real()))
            best = &r;
    }
    if (!best)
        throw NonHyperbolicError("no root with Re <= 0, Im >= 0 at alpha = " +
                                 std::to_string(alpha));
    if (best->imag() < kSignSlack)
        throw NonHyperbolicError("qualifying roots are all real at alpha = " +
                                 std::to_string(alpha) + ": not hyperbolic");
    out.V = *best;
    return out;
}

std::complex<double> display_root(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> sorted = roots;
    sort_canonically(sorted);
    // prefer a genuinely complex upper-half root; among near-real candidates
    // compare real parts only, so root-finder noise in Im cannot flip the pick
    auto better = [](const std::complex<double>& a, const std::complex<double>& b) {
        const bool ac = a.imag() > kSignSlack;
        const bool bc = b.imag() > kSignSlack;
        if (ac != bc) return ac;
        if (ac) return a.imag() > b.imag();
        return a.real() > b.real();
    };
    const std::complex<double>* best = nullptr;
    for (const auto& r : sorted) {
        if (r.real() > kSignSlack) continue;
        if (!best || better(r, *best)) best = &r;
    }
    if (!best) {
        for (const auto& r : sorted)
            if (!best || better(r, *best)) best = &r;
    }
    return *best;
}

double integrand(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= kPi + 1e-12))
        throw std::invalid_argument("integrand: alpha must lie in (0, pi]");
    if (alpha >= alpha0()) return 0.0;

    const double A = cot_half_angle(alpha);
    const auto roots = num::find_roots(rm_poly_at(A));
    const GeometricRoot g = select_geometric_root(roots, alpha);
    const double x = g.V.real();
    const double y = g.V.imag();
    // 2 log|L| = log( ((A+y)^2 + x^2) / ((A-y)^2 + x^2) ), evaluated as
    // log1p to stay accurate as y -> 0 near the transition angle
    const double denom = (A - y) * (A - y) + x * x;
    return std::log1p(std::max(0.0, 4.0 * A * y) / denom);
}

double alpha0(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("alpha0: tol must be positive");
    // Bisection against the exact discriminant sign; the bracket endpoints have
    // opposite signs by the transition-angle characterization. Computed once to
    // the floating-point resolution of the bracket (far below any sane tol).
    static const double cached = [] {
        const auto& disc = algebra::discriminant_in_a();
        auto sign_at_alpha = [&disc](double a) -> double {
            const double A = cot_half_angle(a);
            return static_cast<double>(disc.sign_at(algebra::rational_from_double(A)));
        };
        const double lo = 2.0 * kPi / 3.0;
        const double hi = kPi - 1e-9;
        return num::bisect(sign_at_alpha, lo, hi, 1e-15);
    }();
    return cached;
}

VolumeResult volume(double alpha, double tol) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > kPi + 1e-12)
        throw std::invalid_argument("volume: alpha must lie in [0, pi]");
    if (!(tol > 0.0)) throw std::invalid_argument("volume: tol must be positive");

    const double a0 = alpha0();
    VolumeResult out;
    out.alpha = alpha;
    out.A = cot_half_angle(alpha);
    out.regime = alpha == 0.0 ? Regime::Hyperbolic : classify_regime(alpha);

    if (alpha < a0 && alpha > 0.0) {
        const auto roots = num::find_roots(rm_poly_at(out.A));
        out.geometric_root = select_geometric_root(roots, alpha).V;
    }
    if (alpha >= a0) return out;  // integrand identically zero on [alpha, pi]

    if (alpha == 0.0) {
        // improper endpoint: the integrand extends by continuity with value 0;
        // probe the decay toward zero before trusting the extension
        const double p4 = integrand(1e-4);
        const double p5 = integrand(1e-5);
        const double p6 = integrand(1e-6);
        if (!(p5 < p4 && p6 < p5 && p4 < 1e-2))
            throw QuadratureError("volume: integrand does not decay toward alpha = 0", 0.0,
                                  p4);
    }

    const auto f = [a0](double x) {
        if (x <= 0.0 || x >= a0) return 0.0;
        return integrand(x);
    };
    const num::IntegrationResult r = num::adaptive_integrate(f, alpha, a0, tol);
    out.volume = r.value;
    out.err_estimate = r.err_estimate;
    return out;
}

VolumeResult cover_volume(int k, double tol) {
    if (k < 3)
        throw std::invalid_argument(
            "cover_volume: k must be >= 3 (2pi/k must fall below the transition angle)");
    VolumeResult base = volume(2.0 * kPi / k, tol);
    base.volume *= k;
    base.err_estimate *= k;
    return base;
}

Regime classify_regime(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= kPi + 1e-12) || !std::isfinite(alpha))
        throw std::invalid_argument("classify_regime: alpha must lie in (0, pi]");
    const double a0 = alpha0();
    if (std::abs(alpha - a0) <= 1e-9) return Regime::Euclidean;
    return alpha < a0 ? Regime::Hyperbolic : Regime::Spherical;
}

}  // namespace conevol::cone
