#include "cliffexp/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cliffexp/errors.hpp"

namespace cliffexp {

namespace {

constexpr std::array<double, kBladeCount> kReverseSigns = {1, 1, 1, 1, -1, -1, -1, -1};
constexpr std::array<double, kBladeCount> kGradeInverseSigns = {1, -1, -1, -1, 1, 1, 1, -1};
constexpr std::array<double, kBladeCount> kCliffordConjugateSigns = {1, -1, -1, -1, -1, -1, -1, 1};

constexpr double kResidueTolerance = 1e-10;
constexpr double kSingularityTolerance = 1e-12;

Multivector apply_signs(const Multivector& x, const std::array<double, kBladeCount>& signs) {
  Multivector::Coeffs c = x.coeffs();
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] *= signs[i];
  return Multivector(x.signature(), c);
}

double pow4(double v) {
  const double sq = v * v;
  return sq * sq;
}

}  // namespace

Multivector involute(const Multivector& x, InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::Reverse: return apply_signs(x, kReverseSigns);
    case InvolutionKind::GradeInverse: return apply_signs(x, kGradeInverseSigns);
    case InvolutionKind::ReverseGradeInverse: return apply_signs(x, kCliffordConjugateSigns);
  }
  return x;
}

Multivector grade_select(const Multivector& x, int grade) {
  Multivector::Coeffs c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (kBladeGrade[i] == grade) c[i] = x[i];
  }
  return Multivector(x.signature(), c);
}

Multivector adjugate(const Multivector& x) {
  return reverse(x) * grade_inverse(x) * involute(x, InvolutionKind::ReverseGradeInverse);
}

double determinant(const Multivector& x) {
  const Multivector product = x * adjugate(x);
  double residue = 0.0;
  for (std::size_t i = 1; i < kBladeCount; ++i) residue = std::max(residue, std::abs(product[i]));
  if (residue > kResidueTolerance * pow4(x.l1_norm())) {
    throw std::logic_error("determinant product has non-scalar residue " +
                           std::to_string(residue));
  }
  return product.scalar_part();
}

InverseResult inverse(const Multivector& x) {
  Multivector adj = adjugate(x);
  const double det = (x * adj).scalar_part();
  if (det == 0.0 || std::abs(det) < kSingularityTolerance * pow4(x.l1_norm())) {
    throw NonInvertible(adj, det);
  }
  return InverseResult{adj, det, adj / det};
}

CenterElement center_product(const CenterElement& x, const CenterElement& y, Signature sig) {
  const double i2 = pseudoscalar_square(sig);
  return CenterElement{x.scalar * y.scalar + i2 * x.pseudoscalar * y.pseudoscalar,
                       x.scalar * y.pseudoscalar + x.pseudoscalar * y.scalar};
}

CenterElement center_decompose(const Multivector& x) {
  const double a1 = x[Blade::E1], a2 = x[Blade::E2], a3 = x[Blade::E3];
  const double a12 = x[Blade::E12], a13 = x[Blade::E13], a23 = x[Blade::E23];
  const double wedge = 2.0 * (a3 * a12 - a2 * a13 + a1 * a23);
  const double v1 = a1 * a1, v2 = a2 * a2, v3 = a3 * a3;
  const double b12 = a12 * a12, b13 = a13 * a13, b23 = a23 * a23;
  switch (x.signature()) {
    case Signature::Cl03: return {v1 + v2 + v3 + b12 + b13 + b23, -wedge};
    case Signature::Cl30: return {v1 + v2 + v3 - b12 - b13 - b23, wedge};
    case Signature::Cl12: return {v1 - v2 - v3 + b12 + b13 - b23, wedge};
    case Signature::Cl21: return {v1 + v2 - v3 - b12 + b13 + b23, wedge};
  }
  return {};
}

std::vector<CenterElement> sqrt_center(const CenterElement& c, Signature sig) {
  const double s = c.scalar;
  const double p = c.pseudoscalar;
  std::vector<CenterElement> roots;

  if (pseudoscalar_square(sig) < 0) {
    const double norm = std::hypot(s, p);
    if (norm == 0.0) throw NoIsolatedRoot("zero center element has no isolated square root");
    double re = 0.0;
    double im = 0.0;
    if (s >= 0.0) {
      re = std::sqrt(0.5 * (s + norm));
      im = p / (2.0 * re);
    } else {
      const double mag = std::sqrt(0.5 * (norm - s));
      im = (p < 0.0) ? -mag : mag;
      re = p / (2.0 * im);
    }
    roots.push_back({re, im});
    roots.push_back({-re, -im});
    return roots;
  }

  // I² = +1
  if (!(s * s > p * p)) {
    throw NoIsolatedRoot("isolated roots need aS² > aI² (aS=" + std::to_string(s) +
                         ", aI=" + std::to_string(p) + ")");
  }
  const double disc = std::sqrt((s - p) * (s + p));
  const double upper = s + disc;
  // (s + disc)(s − disc) = p²
  const double lower = (upper != 0.0) ? (p * p) / upper : s - disc;
  for (double u : {upper, lower}) {
    if (!(u > 0.0)) continue;
    const double denom = std::sqrt(2.0 * u);
    const CenterElement root{u / denom, p / denom};
    roots.push_back(root);
    roots.push_back({-root.scalar, -root.pseudoscalar});
  }
  if (roots.empty()) {
    throw NoIsolatedRoot("aS ± √(aS²−aI²) is not positive (aS=" + std::to_string(s) + ")");
  }
  return roots;
}

double det_norm(const Multivector& x) {
  const double det = determinant(x);
  if (det < 0.0) {
    throw NormUndefined("determinant norm undefined for negative determinant " +
                        std::to_string(det));
  }
  return std::sqrt(std::sqrt(det));
}

}  // namespace cliffexp
