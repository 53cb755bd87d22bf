#include "conevol/numerics/complex_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "conevol/errors.hpp"

namespace conevol::num {

namespace {
bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
    if (coeffs_.empty()) throw std::invalid_argument("ComplexPolynomial: zero polynomial");
    for (Complex c : coeffs_)
        if (!finite(c)) throw std::invalid_argument("ComplexPolynomial: non-finite coefficient");
}

Complex ComplexPolynomial::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex ComplexPolynomial::eval_derivative(Complex z) const {
    Complex acc(0.0, 0.0);
    const int n = degree();
    for (int k = n; k >= 1; --k)
        acc = acc * z + coeffs_[static_cast<std::size_t>(k)] * static_cast<double>(k);
    return acc;
}

double ComplexPolynomial::magnitude_scale(Complex z) const {
    const double az = std::abs(z);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * az + std::abs(*it);
    return acc;
}

std::vector<Complex> find_roots(const ComplexPolynomial& p, const RootOptions& opts) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("find_roots: degree < 1");
    const Complex lead = p.coeffs().back();
    if (std::abs(lead) < std::numeric_limits<double>::min())
        throw std::invalid_argument("find_roots: leading coefficient underflows");

    // circle radius from the coefficient bound, fixed irrational phase offset
    double ratio_max = 0.0;
    for (int k = 0; k < n; ++k)
        ratio_max = std::max(ratio_max, std::abs(p.coeffs()[static_cast<std::size_t>(k)] / lead));
    const double radius = 1.0 + ratio_max;
    constexpr double kPhase = 0.61803398874989485;  // 1/golden ratio, radians

    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + kPhase;
        z[static_cast<std::size_t>(k)] = radius * Complex(std::cos(theta), std::sin(theta));
    }

    constexpr double kEps = std::numeric_limits<double>::epsilon();
    std::vector<Complex> pv(z.size());
    std::vector<char> settled(z.size(), 0);

    auto residual_ok = [&](std::size_t i, double factor) {
        return std::abs(pv[i]) <= factor * p.magnitude_scale(z[i]);
    };

    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        for (std::size_t i = 0; i < z.size(); ++i) pv[i] = p.eval(z[i]);

        bool all_at_floor = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            settled[i] = residual_ok(i, 4.0 * kEps) ? 1 : 0;
            all_at_floor = all_at_floor && settled[i];
        }
        if (all_at_floor) break;

        double max_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (settled[i]) continue;
            const Complex dp = p.eval_derivative(z[i]);
            Complex newton;
            if (dp == Complex(0.0, 0.0)) {
                // nudge off a critical point; magnitude tied to the local scale
                newton = Complex(std::abs(z[i]) * 1e-3 + 1e-6, 0.0);
            } else {
                newton = pv[i] / dp;
            }
            Complex repulsion(0.0, 0.0);
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (d != Complex(0.0, 0.0)) repulsion += 1.0 / d;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step = (denom == Complex(0.0, 0.0)) ? newton : newton / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (max_step < 8.0 * kEps) {  // stagnated at the rounding floor
            for (std::size_t i = 0; i < z.size(); ++i) pv[i] = p.eval(z[i]);
            break;
        }
    }

    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!residual_ok(i, opts.tol)) {
            std::vector<double> scaled(z.size());
            for (std::size_t j = 0; j < z.size(); ++j)
                scaled[j] = std::abs(pv[j]) / p.magnitude_scale(z[j]);
            throw RootFindingError("find_roots: no convergence after " +
                                       std::to_string(iter) + " iterations",
                                   z, scaled);
        }
    }
    return z;
}

}  // namespace conevol::num
