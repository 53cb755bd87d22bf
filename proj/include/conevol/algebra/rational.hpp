#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace conevol::algebra {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational: reduced, denominator > 0 after every operation
/// (canonical form maintained by cpp_rational).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num/den with the sign normalized onto the numerator; throws on den == 0.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact rational value of an IEEE double (mantissa * 2^exp). Rejects non-finite input.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // scale mantissa to an integer: doubles carry at most 53 significant bits
    auto mi = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mi);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2 (exact)
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = a * b.conj();
        return {num.re_ / n, num.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace conevol::algebra
