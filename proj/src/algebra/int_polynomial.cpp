#include "conevol/algebra/int_polynomial.hpp"

#include <stdexcept>

namespace conevol::algebra {

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = -coeffs_[i];
    return IntPolynomial(std::move(cs));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return IntPolynomial(std::move(cs));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
    std::vector<BigInt> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i] * s;
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<BigInt> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * BigInt(i);
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& s) const {
    if (s == 0) throw std::domain_error("divide_exact: zero divisor");
    std::vector<BigInt> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        BigInt q = coeffs_[i] / s;
        if (q * s != coeffs_[i])
            throw std::domain_error("divide_exact: inexact scalar division");
        cs[i] = std::move(q);
    }
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (is_zero()) return {};
    if (degree() < divisor.degree())
        throw std::domain_error("divide_exact: divisor degree exceeds dividend");

    // Long division in Z[x]; exact divisibility makes every leading-coefficient
    // step an exact integer division.
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1, BigInt(0));
    const auto& d = divisor.coeffs_;
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        const BigInt& lead = rem[k + d.size() - 1];
        if (lead == 0) continue;
        BigInt q = lead / d.back();
        if (q * d.back() != lead)
            throw std::domain_error("divide_exact: inexact polynomial division");
        quot[k] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::domain_error("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

double IntPolynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const BigInt p = rational_num(x);
    const BigInt q = rational_den(x);
    // sum c_i p^i q^(n-i); q > 0 so the sign equals sign(eval(x))
    BigInt acc = 0;
    BigInt qpow = 1;
    std::vector<BigInt> qpows(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        qpows[coeffs_.size() - 1 - i] = qpow;
        qpow *= q;
    }
    BigInt ppow = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] * ppow * qpows[i];
        ppow *= p;
    }
    return acc.sign();
}

}  // namespace conevol::algebra
