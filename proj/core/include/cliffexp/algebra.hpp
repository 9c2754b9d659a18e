#pragma once

#include <vector>

#include "cliffexp/multivector.hpp"

namespace cliffexp {

enum class InvolutionKind { Reverse, GradeInverse, ReverseGradeInverse };

/// Reverse negates grades 2 and 3, grade inverse negates grades 1 and 3, and
/// their composition negates grades 1 and 2.
Multivector involute(const Multivector& x, InvolutionKind kind);

inline Multivector reverse(const Multivector& x) { return involute(x, InvolutionKind::Reverse); }
inline Multivector grade_inverse(const Multivector& x) {
  return involute(x, InvolutionKind::GradeInverse);
}

/// Keeps only the coefficients of grade g (0..3). Out-of-range g yields zero.
Multivector grade_select(const Multivector& x, int grade);

/// Scalar value of A·Ã·Â·(Â)~.
///
/// The remaining seven coefficients of that product must vanish; a residue
/// larger than 1e-10·(Σ|aᵢ|)⁴ indicates a broken product table and throws
/// std::logic_error.
double determinant(const Multivector& x);

/// Ã·Â·(Â)~, so that Adj(A)·A = A·Adj(A) = Det(A).
Multivector adjugate(const Multivector& x);

struct InverseResult {
  Multivector adjugate;
  double det;
  Multivector inverse;
};

/// Adjugate inverse. |Det| < 1e-12·(Σ|aᵢ|)⁴ throws NonInvertible carrying the
/// adjugate and determinant.
InverseResult inverse(const Multivector& x);

/// Element aS + aI·I of the center {1, I}.
struct CenterElement {
  double scalar = 0.0;        // aS
  double pseudoscalar = 0.0;  // aI

  friend bool operator==(const CenterElement&, const CenterElement&) = default;
};

/// (aS + aI I)(bS + bI I) under the algebra's I².
CenterElement center_product(const CenterElement& x, const CenterElement& y, Signature sig);

/// (aS, aI) of the vector+bivector part N = a + 𝒜 of x.
///
/// Cl03 uses −N² = aS + aI I (so aS is a sum of squares); Cl30, Cl12 and
/// Cl21 use N² = aS + aI I. Scalar and pseudoscalar parts of x are ignored.
CenterElement center_decompose(const Multivector& x);

/// All isolated square roots of c under the algebra's I².
///
/// I² = −1 (Cl30, Cl12): the two roots ±(a₊ + a₋ I); c = 0 has no isolated
/// root. I² = +1 (Cl03, Cl21): up to four roots
/// ±(aS ± √(aS²−aI²) + aI I)/√(2(aS ± √(aS²−aI²))), each pair present when
/// aS² > aI² and its numerator aS ± √(aS²−aI²) is positive.
/// Throws NoIsolatedRoot when no root exists.
std::vector<CenterElement> sqrt_center(const CenterElement& c, Signature sig);

/// Det(A)^(1/4). Negative determinants throw NormUndefined.
double det_norm(const Multivector& x);

}  // namespace cliffexp
