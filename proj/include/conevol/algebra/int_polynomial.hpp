#pragma once

#include <vector>

#include "conevol/algebra/rational.hpp"

namespace conevol::algebra {

/// Dense univariate polynomial over arbitrary-precision integers.
/// Coefficient index = degree; no trailing zero coefficients.
/// The zero polynomial has degree() == kZeroDegree (= -1).
class IntPolynomial {
public:
    static constexpr int kZeroDegree = -1;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }
    IntPolynomial(std::initializer_list<BigInt> ascending_coeffs)
        : coeffs_(ascending_coeffs) {
        trim();
    }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
    BigInt coeff(int deg) const {
        return (deg >= 0 && deg <= degree()) ? coeffs_[deg] : BigInt(0);
    }
    const BigInt& leading() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator*(const BigInt& s) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    IntPolynomial derivative() const;

    /// Exact quotient by a scalar; throws std::domain_error if any coefficient
    /// is not divisible.
    IntPolynomial divide_exact(const BigInt& s) const;

    /// Exact quotient by a polynomial; throws std::domain_error unless the
    /// division leaves zero remainder (divisor must divide exactly in Z[x]).
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    /// Horner evaluation, exact.
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    /// Sign of eval(p/q) without building the rational value: evaluates the
    /// homogenized integer sum c_i p^i q^(n-i), whose sign matches (q > 0).
    int sign_at(const Rational& x) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;  // ascending, index = degree
};

}  // namespace conevol::algebra
