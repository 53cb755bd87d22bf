#include "conevol/numerics/bisection.hpp"

#include <cmath>
#include <stdexcept>

namespace conevol::num {

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("bisect: requires lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("bisect: requires tol > 0");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw std::invalid_argument("bisect: no sign change on [lo, hi]");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace conevol::num
