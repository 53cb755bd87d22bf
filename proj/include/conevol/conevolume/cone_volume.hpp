#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "conevol/numerics/complex_polynomial.hpp"

namespace conevol::cone {

/// Cone angle in radians, restricted to [0, pi].
class ConeAngle {
public:
    explicit ConeAngle(double radians);
    double radians() const { return radians_; }
    /// A = cot(alpha/2); +inf at alpha = 0.
    double cot_half() const;

private:
    double radians_;
};

enum class Regime { Hyperbolic, Euclidean, Spherical };
std::string_view to_string(Regime r);

struct GeometricRoot {
    std::complex<double> V;
    std::vector<std::complex<double>> all_roots;   // canonically sorted
    std::string_view selection_rule_applied;
};

struct VolumeResult {
    double volume = 0.0;
    double err_estimate = 0.0;
    double alpha = 0.0;
    double A = 0.0;                                   // +inf at alpha = 0
    std::optional<std::complex<double>> geometric_root;
    Regime regime = Regime::Hyperbolic;
};

/// The defining quintic at a fixed numeric A, ascending coefficients; every
/// value comes from the exact coefficient list in algebra (single source).
num::ComplexPolynomial rm_poly_at(double A);

/// The geometric root: among roots with Im >= -1e-9 and Re <= 1e-9, the one
/// of maximal imaginary part (ties broken toward larger real part).
/// Throws NonHyperbolicError when no root qualifies or the winner is real
/// within tolerance — the angle is past the Euclidean transition.
GeometricRoot select_geometric_root(const std::vector<std::complex<double>>& roots,
                                    double alpha);

/// Deterministic root for display rows where no geometric root exists:
/// same half-plane filter but real winners allowed (falls back to all roots
/// if the filter empties). Used by the CLI for spherical-regime rows.
std::complex<double> display_root(const std::vector<std::complex<double>>& roots);

/// 2 log|L| at the angle, L = (A - iV)/(A + iV) with V the geometric root;
/// computed directly from A and V (no rho), identically 0 for alpha >= alpha0.
/// Requires 0 < alpha <= pi.
double integrand(double alpha);

/// The Euclidean transition angle: the unique zero of the exact discriminant
/// D(cot(alpha/2)) in [2pi/3, pi), found by sign bisection with the
/// discriminant evaluated exactly at rational images of cot(alpha/2).
/// Computed once to full double precision and cached; tol only validated.
double alpha0(double tol = 1e-10);

/// Volume by adaptive integration of the integrand over [alpha, alpha0]
/// (the tail up to pi is identically zero and added analytically).
/// alpha = 0 is the improper cusp endpoint: the integrand extends by
/// continuity with value 0 there. Requires 0 <= alpha <= pi.
VolumeResult volume(double alpha, double tol = 1e-10);

/// k-fold cyclic cover volume k * volume(2pi/k); requires k >= 3.
VolumeResult cover_volume(int k, double tol = 1e-10);

/// Regime of the angle relative to alpha0, with a 1e-9 band for Euclidean.
/// Requires 0 < alpha <= pi.
Regime classify_regime(double alpha);

}  // namespace conevol::cone
