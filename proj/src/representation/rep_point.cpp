#include "conevol/representation/rep_point.hpp"

#include <cmath>
#include <stdexcept>

#include "conevol/numerics/complex_ops.hpp"

namespace conevol::rep {

namespace {
void validate_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 3.14159265358979323846 + 1e-12) || !std::isfinite(alpha))
        throw std::invalid_argument("RepPoint: alpha must lie in (0, pi]");
}
}  // namespace

RepPoint RepPoint::from_alpha_and_v(double alpha, std::complex<double> v) {
    validate_alpha(alpha);
    if (!num::is_finite(v)) throw std::invalid_argument("RepPoint: non-finite V");
    RepPoint p;
    p.alpha = alpha;
    p.A = 1.0 / std::tan(alpha / 2.0);
    p.V = v;
    p.rho = num::principal_acosh(v);
    return p;
}

RepPoint RepPoint::from_alpha_and_rho(double alpha, std::complex<double> rho) {
    validate_alpha(alpha);
    if (!num::is_finite(rho)) throw std::invalid_argument("RepPoint: non-finite rho");
    RepPoint p;
    p.alpha = alpha;
    p.A = 1.0 / std::tan(alpha / 2.0);
    p.V = std::cosh(rho);
    p.rho = rho;
    return p;
}

Generators build_generators(const RepPoint& point) {
    const double c = std::cos(point.alpha / 2.0);
    const double s = std::sin(point.alpha / 2.0);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> e_half = std::exp(point.rho / 2.0);
    const std::complex<double> e_mhalf = 1.0 / e_half;

    Generators g;
    g.S = {std::complex<double>(c), i * e_half * s, i * e_mhalf * s, std::complex<double>(c)};
    g.T = {std::complex<double>(c), i * e_mhalf * s, i * e_half * s, std::complex<double>(c)};
    g.n = {i, {}, {}, -i};
    return g;
}

}  // namespace conevol::rep
