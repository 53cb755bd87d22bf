#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "conevol/algebra/rational.hpp"
#include "conevol/representation/rep_point.hpp"

namespace conevol::rep {

/// trace(S * W * n) with W the relator-word evaluation at the point.
/// Vanishes when V is a root of the defining quintic or of the companion
/// factor 2V^2 + A^4 + 2A^2 - 1, and when sinh(rho) = 0.
std::complex<double> trace_swn(const RepPoint& point);

/// Longitude holonomy eigenvalue L = (A - iV) / (A + iV).
/// Throws std::domain_error when A + iV vanishes.
std::complex<double> longitude_eigenvalue(double A, std::complex<double> V);

/// |trace(L_T) - (L + 1/L)| at the point, with L = (A - iV)/(A + iV),
/// combined (max) with the complex-length recovery residual
/// |2 cosh(gamma/2) - trace(L_T)| for gamma = 2 acosh(trace(L_T)/2).
/// Requires V off the real axis and A + iV bounded away from zero.
double pythagorean_check(const RepPoint& point);

/// Exact sample on the representation variety: c, s play cos(alpha/2) and
/// sin(alpha/2) with c^2 + s^2 = 1 enforced exactly, u plays e^{rho/2}.
struct ExactSample {
    algebra::Rational c;
    algebra::Rational s;
    algebra::Rational u;

    /// Validates c^2 + s^2 = 1, s != 0, u != 0.
    ExactSample(algebra::Rational c, algebra::Rational s, algebra::Rational u);

    /// Rational circle point from parameter t != 0:
    /// c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
    static ExactSample from_circle_parameter(const algebra::Rational& t,
                                             const algebra::Rational& u);
};

/// Exact generator matrices over Gaussian rationals for the sample.
struct ExactGenerators {
    Mat2q S;
    Mat2q T;
    Mat2q n;
};
ExactGenerators build_exact_generators(const ExactSample& sample);

/// Verifies, in exact arithmetic, the trace-identity factorization
///   trace(S W n) = 16 i sin^16(alpha/2) sinh(rho) (2V^2 + A^4 + 2A^2 - 1) P(V, A)
/// with A = c/s, V = (u^2 + u^-2)/2, sinh(rho) = (u^2 - u^-2)/2.
/// Returns exact equality of the two Gaussian rationals.
bool exact_identity_check(const ExactSample& sample);

/// The deterministic certification family: a grid of 37 circle parameters
/// t = k/38 (k = 1..37) crossed with 37 values u = 1 + j/31 (j = 1..37),
/// enumerated row-major in u-major order. After clearing denominators the
/// difference of the two identity sides is polynomial of degree <= 36 in t
/// and <= 36 in u, so vanishing on this 37x37 grid forces it to vanish
/// identically; the grid size (1369) is the certification bound.
std::vector<ExactSample> exact_sample_family(std::size_t count = 1369);

/// Random SL(2,C) matrix for property tests: three entries drawn uniformly
/// from a disc, the fourth solved from det = 1; near-singular draws rejected.
/// Deterministic for a fixed generator state (own bit-to-double mapping).
class Sl2Sampler {
public:
    explicit Sl2Sampler(std::uint64_t seed);
    Mat2c next();
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
    std::uint64_t next_bits();
};

}  // namespace conevol::rep
