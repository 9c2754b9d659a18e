#include <cmath>

#include "cliffexp/errors.hpp"
#include "cliffexp/exp.hpp"

namespace cliffexp {

namespace {

// a² for a pure vector, read off the signature's basis squares.
double vector_square(const Multivector& x) {
  const auto sq = basis_squares(x.signature());
  return sq[0] * x[Blade::E1] * x[Blade::E1] + sq[1] * x[Blade::E2] * x[Blade::E2] +
         sq[2] * x[Blade::E3] * x[Blade::E3];
}

// 𝒜² for a pure bivector: −a12² − a13² − a23² (Cl30, Cl03), −a12² + a13² + a23²
// (Cl21), a12² + a13² − a23² (Cl12).
double bivector_square(const Multivector& x) {
  const double b12 = x[Blade::E12] * x[Blade::E12];
  const double b13 = x[Blade::E13] * x[Blade::E13];
  const double b23 = x[Blade::E23] * x[Blade::E23];
  switch (x.signature()) {
    case Signature::Cl30:
    case Signature::Cl03: return -b12 - b13 - b23;
    case Signature::Cl21: return -b12 + b13 + b23;
    case Signature::Cl12: return b12 + b13 - b23;
  }
  return 0.0;
}

// exp(B) for a blade B with B² = square: cosh|B| + B sinh|B|/|B| when B² > 0,
// cos|B| + B sin|B|/|B| when B² < 0, and 1 + B when B is null.
Multivector exp_of_square(const Multivector& blade, double square) {
  if (square == 0.0) return blade + 1.0;
  const double mag = std::sqrt(std::abs(square));
  if (square > 0.0) return blade * (std::sinh(mag) / mag) + std::cosh(mag);
  return blade * (std::sin(mag) / mag) + std::cos(mag);
}

}  // namespace

Multivector exp_particular(const Multivector& x) {
  const bool has_scalar = x[Blade::Scalar] != 0.0;
  const bool has_pseudo = x[Blade::E123] != 0.0;
  const bool has_vector = x[Blade::E1] != 0.0 || x[Blade::E2] != 0.0 || x[Blade::E3] != 0.0;
  const bool has_bivector =
      x[Blade::E12] != 0.0 || x[Blade::E13] != 0.0 || x[Blade::E23] != 0.0;
  const Signature sig = x.signature();

  if (!has_vector && !has_bivector) {
    const double scale = std::exp(x.scalar_part());
    const double t = x.pseudoscalar_part();
    if (pseudoscalar_square(sig) < 0) {
      return Multivector::central(sig, scale * std::cos(t), scale * std::sin(t));
    }
    return Multivector::central(sig, scale * std::cosh(t), scale * std::sinh(t));
  }
  if (has_scalar || has_pseudo || (has_vector && has_bivector)) {
    throw MixedGradeInput(
        "exp_particular expects a pure vector, a pure bivector, or scalar + pseudoscalar");
  }
  if (has_vector) return exp_of_square(x, vector_square(x));
  return exp_of_square(x, bivector_square(x));
}

}  // namespace cliffexp
