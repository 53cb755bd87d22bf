#include "conevol/algebra/rm_polynomial.hpp"

namespace conevol::algebra {

std::array<IntPolynomial, 6> rm_coefficients_exact() {
    // ascending-in-A coefficient lists
    return {
        IntPolynomial{8},                                    // V^5
        IntPolynomial{0, 0, 8},                              // V^4: 8A^2
        IntPolynomial{-8, 0, 16, 0, 8},                      // V^3: 8A^4+16A^2-8
        IntPolynomial{0, 0, -12, 0, 8, 0, 4},                // V^2: 4A^6+8A^4-12A^2
        IntPolynomial{1, 0, -12, 0, -2, 0, 4, 0, 1},         // V^1: A^8+4A^6-2A^4-12A^2+1
        IntPolynomial{0, 0, 4, 0, -8, 0, -4},                // V^0: -4A^6-8A^4+4A^2
    };
}

const IntPolynomial& discriminant_in_a() {
    static const IntPolynomial cached = [] {
        auto c = rm_coefficients_exact();
        PolyOverZA p(c.begin(), c.end());
        IntPolynomial res = sylvester_resultant(p, derivative_in_v(p));
        // deg_V P = 5, so the discriminant sign factor (-1)^(5*4/2) is +1 and
        // the discriminant is exactly Res(P, P') / 8.
        return res.divide_exact(BigInt(8));
    }();
    return cached;
}

}  // namespace conevol::algebra
