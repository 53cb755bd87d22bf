#pragma once

#include <complex>

#include "conevol/algebra/rational.hpp"

namespace conevol::rep {

/// 2x2 matrix over a complex-like scalar (std::complex<double> for the
/// floating flavor, algebra::GaussianRational for the exact flavor).
/// Group elements constructed here always have determinant one, so inverse()
/// is the adjugate.
template <class Scalar>
struct Mat2 {
    Scalar a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

    Scalar trace() const { return a11 + a22; }
    Scalar det() const { return a11 * a22 - a12 * a21; }

    /// Inverse under the unit-determinant invariant.
    Mat2 inverse() const { return {a22, -a12, -a21, a11}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }

    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
    }
};

using Mat2c = Mat2<std::complex<double>>;
using Mat2q = Mat2<algebra::GaussianRational>;

/// max-entry distance between two floating matrices
inline double distance(const Mat2c& x, const Mat2c& y) {
    double d = std::abs(x.a11 - y.a11);
    d = std::max(d, std::abs(x.a12 - y.a12));
    d = std::max(d, std::abs(x.a21 - y.a21));
    d = std::max(d, std::abs(x.a22 - y.a22));
    return d;
}

}  // namespace conevol::rep
