#include "conevol/algebra/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace conevol::algebra {

namespace {

PolyOverZA stripped(const PolyOverZA& f) {
    PolyOverZA out = f;
    std::size_t lead = 0;
    while (lead < out.size() && out[lead].is_zero()) ++lead;
    out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(lead));
    return out;
}

/// Determinant of a square matrix with IntPolynomial entries by Bareiss
/// fraction-free elimination, with row pivoting on zero pivots.
IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPolynomial::constant(1);
    int sign = 1;
    IntPolynomial prev = IntPolynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};  // whole column zero below: singular
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? IntPolynomial{} : num.divide_exact(prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    IntPolynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

PolyOverZA derivative_in_v(const PolyOverZA& f) {
    PolyOverZA s = stripped(f);
    const int m = static_cast<int>(s.size()) - 1;  // degree in V
    if (m < 1) return {};
    PolyOverZA out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) out.push_back(s[static_cast<std::size_t>(k)] * BigInt(m - k));
    return out;
}

int degree_in_v(const PolyOverZA& f) {
    return static_cast<int>(stripped(f).size()) - 1;
}

IntPolynomial sylvester_resultant(const PolyOverZA& f_in, const PolyOverZA& g_in) {
    PolyOverZA f = stripped(f_in);
    PolyOverZA g = stripped(g_in);
    if (f.empty() || g.empty())
        throw std::invalid_argument("sylvester_resultant: zero polynomial");
    const std::size_t m = f.size() - 1;  // deg f
    const std::size_t n = g.size() - 1;  // deg g
    if (m == 0 && n == 0) return IntPolynomial::constant(1);

    const std::size_t size = m + n;
    std::vector<std::vector<IntPolynomial>> syl(size, std::vector<IntPolynomial>(size));
    for (std::size_t row = 0; row < n; ++row)           // f rows first
        for (std::size_t j = 0; j < f.size(); ++j) syl[row][row + j] = f[j];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j < g.size(); ++j) syl[n + row][row + j] = g[j];
    return bareiss_determinant(std::move(syl));
}

IntPolynomial discriminant_over_v(const PolyOverZA& f_in) {
    PolyOverZA f = stripped(f_in);
    const int m = static_cast<int>(f.size()) - 1;
    if (m < 2) throw std::invalid_argument("discriminant_over_v: degree < 2");
    IntPolynomial res = sylvester_resultant(f, derivative_in_v(f));
    const bool negate = (static_cast<long>(m) * (m - 1) / 2) % 2 != 0;
    if (negate) res = -res;
    return res.divide_exact(f.front());
}

}  // namespace conevol::algebra
