#pragma once

#include <vector>

#include "conevol/algebra/int_polynomial.hpp"

namespace conevol::algebra {

/// Polynomial in an outer variable V whose coefficients live in Z[A],
/// stored by descending V-degree (index 0 = leading coefficient).
using PolyOverZA = std::vector<IntPolynomial>;

/// Formal V-derivative of a descending-coefficient polynomial.
PolyOverZA derivative_in_v(const PolyOverZA& f);

/// Degree in V after stripping leading zero coefficients; -1 for zero.
int degree_in_v(const PolyOverZA& f);

/// Resultant of f and g with respect to V, as an element of Z[A].
///
/// Convention: determinant of the (deg f + deg g)-square Sylvester matrix
/// with the f-coefficient rows first (deg g rows of f, then deg f rows
/// of g), so Res(V-a, V-b) = a-b. Computed by fraction-free Bareiss
/// elimination; every interior division is exact in Z[A].
///
/// Throws std::invalid_argument on zero input polynomials.
IntPolynomial sylvester_resultant(const PolyOverZA& f, const PolyOverZA& g);

/// Discriminant of f over V: (-1)^(m(m-1)/2) * Res(f, f') / lc(f), with
/// m = deg_V f >= 2 and the division exact (throws if it is not).
/// Rejects deg_V < 2.
IntPolynomial discriminant_over_v(const PolyOverZA& f);

}  // namespace conevol::algebra
