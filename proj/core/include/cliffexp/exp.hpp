#pragma once

#include <array>

#include "cliffexp/algebra.hpp"
#include "cliffexp/multivector.hpp"

namespace cliffexp {

enum class DegeneracyBranch { Generic, PlusDegenerate, MinusDegenerate, BothDegenerate };

std::string_view branch_name(DegeneracyBranch branch);

struct ExpOptions {
  /// A squared factor (a±², |c|, aI) counts as zero below
  /// degeneracy_eps · (Σ vector and bivector coefficients² + 1).
  double degeneracy_eps = 1e-12;
};

/// Per-algebra factors feeding the closed-form exponential.
///
/// Cl03: a±² are sums of squares, a± ≥ 0.
/// Cl30/Cl12: a₊ ≥ 0 and a₋ carries the sign of aI, with
///   a₊² − a₋² = aS, 2a₊a₋ = aI and c_norm = |c| = a₊² + a₋².
/// Cl21: a±² may be negative; a± hold √|a±²|.
struct ExpFactors {
  Signature signature = Signature::Cl30;
  CenterElement center;
  double a_plus = 0.0;
  double a_minus = 0.0;
  double a_plus_sq = 0.0;
  double a_minus_sq = 0.0;
  double c_norm = 0.0;
  double tolerance = 0.0;
  DegeneracyBranch branch = DegeneracyBranch::Generic;
};

ExpFactors exp_factors(const Multivector& x, const ExpOptions& options = {});

/// Closed-form exponential of a general multivector in any of the four algebras.
Multivector exp(const Multivector& x, const ExpOptions& options = {});

/// Closed forms for blades: pure vector, pure bivector, or scalar+pseudoscalar.
/// Evaluated directly from the coefficients without going through exp().
/// Any other grade mix throws MixedGradeInput.
Multivector exp_particular(const Multivector& x);

namespace detail {

/// sinh(√q)/√q for q > 0, sin(√−q)/√−q for q < 0, with the limit 1 for |q| < tol
/// and a Maclaurin polynomial for |q| < 1e3·tol.
double si(double q, double tol);

/// cosh(√q) for q > 0, cos(√−q) for q < 0, with the same small-|q| handling.
double co(double q, double tol);

/// Signs (±, ∓) of the shared Cl30/Cl12 formula body: (+1, −1) for Cl30 and
/// (−1, +1) for Cl12. Other signatures throw UnsupportedSignature.
std::array<int, 2> upper_lower_signs(Signature sig);

}  // namespace detail

}  // namespace cliffexp
