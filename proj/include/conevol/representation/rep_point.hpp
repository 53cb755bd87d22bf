#pragma once

#include <complex>

#include "conevol/representation/mat2.hpp"

namespace conevol::rep {

/// A point of the representation variety in the angle/axis-distance
/// coordinates: cone angle alpha in (0, pi], A = cot(alpha/2), V = cosh(rho),
/// rho on the principal acosh branch (Re >= 0).
struct RepPoint {
    double alpha;
    double A;
    std::complex<double> V;
    std::complex<double> rho;

    /// rho reconstructed from V on the principal branch.
    static RepPoint from_alpha_and_v(double alpha, std::complex<double> v);

    /// V derived as cosh(rho); any complex rho is a valid variety point.
    static RepPoint from_alpha_and_rho(double alpha, std::complex<double> rho);
};

/// The structured generator pair and the involution matrix:
///   S = [[cos(a/2), i e^{rho/2} sin(a/2)], [i e^{-rho/2} sin(a/2), cos(a/2)]],
///   T = S with rho -> -rho, n = diag(i, -i). All unit determinant.
struct Generators {
    Mat2c S;
    Mat2c T;
    Mat2c n;
};

Generators build_generators(const RepPoint& point);

}  // namespace conevol::rep
