#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <random>

#include <cliffexp/cliffexp.hpp>

namespace cliffexp::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Multivector random_mv(Rng& rng, Signature sig, double lo = -1.0, double hi = 1.0) {
  Multivector::Coeffs c;
  for (double& v : c) v = uniform(rng, lo, hi);
  return Multivector(sig, c);
}

/// Random multivector scaled by the appendix CeilInt policy when its
/// determinant is positive; left as drawn otherwise.
inline Multivector random_normalized_mv(Rng& rng, Signature sig) {
  const Multivector x = random_mv(rng, sig);
  if (determinant(x) > 0.0) return normalize(x, NormalizePolicy::ceil_int()).value;
  return x;
}

/// max|x − y| / max(1, max|x|, max|y|)
inline double rel_diff(const Multivector& x, const Multivector& y) {
  return max_abs_diff(x, y) / std::max({1.0, x.max_abs(), y.max_abs()});
}

inline Multivector one(Signature sig) { return Multivector::scalar(sig, 1.0); }

inline Multivector vec(Signature sig, double a1, double a2, double a3) {
  return Multivector(sig, {0, a1, a2, a3, 0, 0, 0, 0});
}

inline Multivector bivec(Signature sig, double a12, double a13, double a23) {
  return Multivector(sig, {0, 0, 0, 0, a12, a13, a23, 0});
}

/// Cl30 vector v plus the bivector whose dual direction w = (a23, −a13, a12)
/// is orthogonal to v with |w| = ratio·|v|. The center of (v + B)² then has
/// aI = 0 and aS = |v|²(1 − ratio²).
inline Multivector cl30_orthogonal_pair(Rng& rng, double ratio) {
  const double v1 = uniform(rng), v2 = uniform(rng), v3 = uniform(rng);
  double u1 = uniform(rng), u2 = uniform(rng), u3 = uniform(rng);
  const double vv = v1 * v1 + v2 * v2 + v3 * v3;
  const double proj = (u1 * v1 + u2 * v2 + u3 * v3) / vv;
  u1 -= proj * v1;
  u2 -= proj * v2;
  u3 -= proj * v3;
  const double scale = ratio * std::sqrt(vv / (u1 * u1 + u2 * u2 + u3 * u3));
  const double w1 = u1 * scale, w2 = u2 * scale, w3 = u3 * scale;
  // w = (a23, −a13, a12)
  return Multivector(Signature::Cl30, {0, v1, v2, v3, w3, -w2, w1, 0});
}

}  // namespace cliffexp::testing
