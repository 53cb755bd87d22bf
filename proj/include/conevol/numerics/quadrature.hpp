#pragma once

#include <functional>

namespace conevol::num {

struct IntegrationResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

struct QuadratureOptions {
    double tol = 1e-10;
    int max_depth = 60;
};

/// Adaptive integral of f over [a, b] with a Gauss–Kronrod 7–15 embedded
/// pair per interval and bisection refinement. The per-interval error
/// estimate is |K15 - G7|; err_estimate is the sum over accepted intervals.
///
/// Requires a <= b and finite f on [a, b] (endpoints are never evaluated).
/// Throws QuadratureError (carrying the partial value and its estimate) if
/// some subinterval still misses its local tolerance at max_depth.
IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                     double b, const QuadratureOptions& opts = {});

inline IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                            double b, double tol) {
    return adaptive_integrate(f, a, b, QuadratureOptions{tol, 60});
}

}  // namespace conevol::num
