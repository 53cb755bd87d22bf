#include "conevol/representation/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "conevol/algebra/rm_polynomial.hpp"
#include "conevol/numerics/complex_ops.hpp"
#include "conevol/representation/words.hpp"

namespace conevol::rep {

using algebra::GaussianRational;
using algebra::Rational;

std::complex<double> trace_swn(const RepPoint& point) {
    const Generators g = build_generators(point);
    const Mat2c w = word_eval<std::complex<double>>(relator_word(), g.S, g.T);
    return (g.S * w * g.n).trace();
}

std::complex<double> longitude_eigenvalue(double A, std::complex<double> V) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> denom = A + i * V;
    if (std::abs(denom) < 1e-14 * (1.0 + std::abs(A) + std::abs(V)))
        throw std::domain_error("longitude_eigenvalue: A + iV degenerates");
    return (A - i * V) / denom;
}

double pythagorean_check(const RepPoint& point) {
    if (std::abs(point.V.imag()) < 1e-14)
        throw std::domain_error("pythagorean_check: V must be off the real axis");
    const Generators g = build_generators(point);
    const auto [ls, lt] = longitudes(g.S, g.T);
    (void)ls;
    const std::complex<double> tr = lt.trace();
    const std::complex<double> L = longitude_eigenvalue(point.A, point.V);
    const double r1 = std::abs(tr - (L + 1.0 / L));
    // complex length gamma with trace(h(l)) = 2 cosh(gamma/2), principal branch
    const std::complex<double> gamma = 2.0 * num::principal_acosh(tr / 2.0);
    const double r2 = std::abs(2.0 * std::cosh(gamma / 2.0) - tr);
    return std::max(r1, r2);
}

ExactSample::ExactSample(Rational c_in, Rational s_in, Rational u_in)
    : c(std::move(c_in)), s(std::move(s_in)), u(std::move(u_in)) {
    if (s == 0) throw std::invalid_argument("ExactSample: s must be nonzero");
    if (u == 0) throw std::invalid_argument("ExactSample: u must be nonzero");
    if (c * c + s * s != 1)
        throw std::invalid_argument("ExactSample: c^2 + s^2 = 1 violated");
}

ExactSample ExactSample::from_circle_parameter(const Rational& t, const Rational& u) {
    if (t == 0) throw std::invalid_argument("ExactSample: t = 0 gives s = 0");
    const Rational denom = 1 + t * t;
    return ExactSample((1 - t * t) / denom, 2 * t / denom, u);
}

ExactGenerators build_exact_generators(const ExactSample& sample) {
    const GaussianRational i = GaussianRational::i();
    const GaussianRational c(sample.c);
    const GaussianRational s(sample.s);
    const GaussianRational u(sample.u);
    const GaussianRational uinv(Rational(1) / sample.u);

    ExactGenerators g;
    g.S = {c, i * u * s, i * uinv * s, c};
    g.T = {c, i * uinv * s, i * u * s, c};
    g.n = {i, GaussianRational(), GaussianRational(), -i};
    return g;
}

namespace {

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1U) out *= b;
        if (e > 1) b *= b;
    }
    return out;
}

/// P(V, A) over the rationals from the exact coefficient list.
Rational rm_eval_exact(const Rational& v, const Rational& a) {
    Rational acc(0);
    for (const auto& coeff : algebra::rm_coefficients_exact()) acc = acc * v + coeff.eval(a);
    return acc;
}

}  // namespace

bool exact_identity_check(const ExactSample& sample) {
    const ExactGenerators g = build_exact_generators(sample);
    const Mat2q w = word_eval<GaussianRational>(relator_word(), g.S, g.T);
    const GaussianRational lhs = (g.S * w * g.n).trace();

    const Rational u2 = sample.u * sample.u;
    const Rational u2inv = Rational(1) / u2;
    const Rational v = (u2 + u2inv) / 2;
    const Rational sinh_rho = (u2 - u2inv) / 2;
    const Rational a = sample.c / sample.s;
    const Rational a2 = a * a;
    const Rational companion = 2 * v * v + a2 * a2 + 2 * a2 - 1;
    const Rational scalar = 16 * rational_pow(sample.s, 16) * sinh_rho * companion *
                            rm_eval_exact(v, a);
    const GaussianRational rhs(Rational(0), scalar);  // 16 i s^16 sinh(rho) (...) P
    return lhs == rhs;
}

std::vector<ExactSample> exact_sample_family(std::size_t count) {
    std::vector<ExactSample> out;
    out.reserve(count);
    for (int k = 1; k <= 37 && out.size() < count; ++k) {
        const Rational t(k, 38);
        for (int j = 1; j <= 37 && out.size() < count; ++j) {
            const Rational u = 1 + Rational(j, 31);
            out.push_back(ExactSample::from_circle_parameter(t, u));
        }
    }
    return out;
}

Sl2Sampler::Sl2Sampler(std::uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ULL) {}

std::uint64_t Sl2Sampler::next_bits() {
    // splitmix64: portable, deterministic across platforms
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Sl2Sampler::uniform(double lo, double hi) {
    const double unit = static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

Mat2c Sl2Sampler::next() {
    for (;;) {
        const std::complex<double> a(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        const std::complex<double> b(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        const std::complex<double> c(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        if (std::abs(a) < 0.3) continue;  // d = (1 + bc)/a needs a away from 0
        const std::complex<double> d = (1.0 + b * c) / a;
        // keep the matrix norm moderate: 18-letter word products lose
        // roughly a digit per entry-magnitude decade
        if (std::abs(d) > 2.0) continue;
        return Mat2c{a, b, c, d};
    }
}

}  // namespace conevol::rep
