#pragma once

#include <array>

#include "conevol/algebra/int_polynomial.hpp"
#include "conevol/algebra/resultant.hpp"

namespace conevol::algebra {

/// The six V-coefficients of the defining quintic P(V, A) of the link's
/// representation variety, as exact elements of Z[A], ordered by descending
/// V-degree:
///   8, 8A^2, 8A^4+16A^2-8, 4A^6+8A^4-12A^2, A^8+4A^6-2A^4-12A^2+1,
///   -4A^6-8A^4+4A^2.
std::array<IntPolynomial, 6> rm_coefficients_exact();

/// Discriminant of P(V, A) over V as an exact element of Z[A]:
/// Res(P, dP/dV) divided exactly by the leading coefficient 8 (the division
/// throws if inexact, which would indicate an implementation bug).
/// Degree 40, computed once and cached.
const IntPolynomial& discriminant_in_a();

}  // namespace conevol::algebra
