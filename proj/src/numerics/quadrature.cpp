#include "conevol/numerics/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "conevol/errors.hpp"

namespace conevol::num {

namespace {

// Gauss–Kronrod 7–15 pair on [-1, 1]; Kronrod rule exact through degree 22.
constexpr std::array<double, 15> kNodes = {
    -0.991455371120812639207, -0.949107912342758524526, -0.864864423359769072790,
    -0.741531185599394439864, -0.586087235467691130294, -0.405845151377397166907,
    -0.207784955007898467601, 0.0,
    0.207784955007898467601,  0.405845151377397166907,  0.586087235467691130294,
    0.741531185599394439864,  0.864864423359769072790,  0.949107912342758524526,
    0.991455371120812639207,
};

constexpr std::array<double, 15> kKronrodWeights = {
    0.0229353220105292249637, 0.0630920926299785532907, 0.1047900103222501838400,
    0.1406532597155259187450, 0.1690047266392679028270, 0.1903505780647854099130,
    0.2044329400752988924140, 0.2094821410847278280130, 0.2044329400752988924140,
    0.1903505780647854099130, 0.1690047266392679028270, 0.1406532597155259187450,
    0.1047900103222501838400, 0.0630920926299785532907, 0.0229353220105292249637,
};

// Gauss weights for the embedded 7-point rule (nodes 1,3,5,7,9,11,13).
constexpr std::array<double, 7> kGaussWeights = {
    0.129484966168869693271, 0.279705391489276667901, 0.381830050505118944950,
    0.417959183673469387755, 0.381830050505118944950, 0.279705391489276667901,
    0.129484966168869693271,
};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::array<double, 15> fv{};
    for (int i = 0; i < 15; ++i) {
        const double x = mid + half * kNodes[static_cast<std::size_t>(i)];
        const double y = f(x);
        if (!std::isfinite(y)) throw std::invalid_argument("adaptive_integrate: non-finite integrand");
        fv[static_cast<std::size_t>(i)] = y;
    }
    double k15 = 0.0;
    for (int i = 0; i < 15; ++i)
        k15 += kKronrodWeights[static_cast<std::size_t>(i)] * fv[static_cast<std::size_t>(i)];
    double g7 = 0.0;
    for (int i = 0; i < 7; ++i)
        g7 += kGaussWeights[static_cast<std::size_t>(i)] * fv[static_cast<std::size_t>(2 * i + 1)];
    return {half * k15, std::abs(half * (k15 - g7))};
}

struct Accumulator {
    double value = 0.0;
    double err = 0.0;
    bool failed = false;
};

void integrate_recursive(const std::function<double(double)>& f, double a, double b,
                         double tol, int depth, int max_depth, Accumulator& acc) {
    const PanelResult panel = evaluate_panel(f, a, b);
    if (panel.err <= tol || depth >= max_depth) {
        acc.value += panel.kronrod;
        acc.err += panel.err;
        if (panel.err > tol && depth >= max_depth) acc.failed = true;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_recursive(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc);
    integrate_recursive(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                     double b, const QuadratureOptions& opts) {
    if (!(a <= b)) throw std::invalid_argument("adaptive_integrate: requires a <= b");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("adaptive_integrate: non-finite bounds");
    if (a == b) return {0.0, 0.0};

    Accumulator acc;
    integrate_recursive(f, a, b, opts.tol, 0, opts.max_depth, acc);
    if (acc.failed)
        throw QuadratureError("adaptive_integrate: subdivision depth limit reached",
                              acc.value, acc.err);
    return {acc.value, acc.err};
}

}  // namespace conevol::num
