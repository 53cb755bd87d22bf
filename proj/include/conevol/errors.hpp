#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace conevol {

/// Requested cone angle admits no geometric (hyperbolic) root.
/// Distinct from numerical failure: past the Euclidean angle all roots are real.
class NonHyperbolicError : public std::domain_error {
public:
    explicit NonHyperbolicError(const std::string& what) : std::domain_error(what) {}
};

/// Root iteration hit the iteration cap. Carries the best iterates and their
/// scaled residuals so callers can inspect how close it got.
class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what,
                     std::vector<std::complex<double>> best,
                     std::vector<double> residuals)
        : std::runtime_error(what),
          best_roots(std::move(best)),
          scaled_residuals(std::move(residuals)) {}

    std::vector<std::complex<double>> best_roots;
    std::vector<double> scaled_residuals;
};

/// Adaptive subdivision exhausted its depth budget. Carries the partial
/// integral and the (honest) error estimate accumulated so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double partial, double err)
        : std::runtime_error(what), partial_value(partial), err_estimate(err) {}

    double partial_value;
    double err_estimate;
};

}  // namespace conevol
