#pragma once

#include <functional>

namespace conevol::num {

/// Sign-change bisection on [lo, hi]; returns the bracket midpoint once the
/// bracket width is <= tol. Requires lo < hi and f(lo)*f(hi) < 0 (an exact
/// zero at an endpoint or midpoint is returned as-is).
/// Throws std::invalid_argument when there is no sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace conevol::num
