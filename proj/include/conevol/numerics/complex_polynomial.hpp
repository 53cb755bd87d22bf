#pragma once

#include <complex>
#include <vector>

namespace conevol::num {

using Complex = std::complex<double>;

/// Dense polynomial over complex doubles, coefficient index = degree.
/// Leading coefficient nonzero; all coefficients finite (enforced on
/// construction).
class ComplexPolynomial {
public:
    explicit ComplexPolynomial(std::vector<Complex> ascending_coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex eval(Complex z) const;
    Complex eval_derivative(Complex z) const;

    /// sum |c_j| |z|^j — the natural magnitude scale of eval(z), used for
    /// backward-error style residual normalization.
    double magnitude_scale(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

struct RootOptions {
    double tol = 1e-12;
    int max_iterations = 500;
};

/// All roots (with multiplicity) by Aberth–Ehrlich simultaneous iteration.
///
/// Initial guesses sit on a circle of radius 1 + max|c_i/c_lead| with a fixed
/// irrational angular offset; no randomness, so results are deterministic.
/// Every returned root r satisfies |p(r)| <= tol * magnitude_scale(r).
///
/// Throws std::invalid_argument on degree < 1 or a leading coefficient with
/// magnitude at the underflow threshold; throws RootFindingError (carrying the
/// best iterates and scaled residuals) if the iteration cap is reached first.
std::vector<Complex> find_roots(const ComplexPolynomial& p, const RootOptions& opts = {});

}  // namespace conevol::num
