#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cliffexp/signature.hpp"

namespace cliffexp {

/// Basis blades in inverse degree lexicographic order. e13 is stored rather
/// than e31 = −e13.
enum class Blade : std::uint8_t { Scalar, E1, E2, E3, E12, E13, E23, E123 };

inline constexpr std::size_t kBladeCount = 8;

inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

inline constexpr std::array<std::string_view, kBladeCount> kBladeNames = {
    "1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};

constexpr std::size_t index(Blade b) { return static_cast<std::size_t>(b); }

/// One entry of the geometric product table: e_i e_j = sign · e_blade.
struct ProductEntry {
  std::uint8_t blade;
  std::int8_t sign;
};

using ProductTable = std::array<std::array<ProductEntry, kBladeCount>, kBladeCount>;

/// Product table of the given algebra, derived from the anticommutation
/// relation e_i e_j + e_j e_i = ±2δ_ij.
const ProductTable& product_table(Signature sig);

/// General multivector a0 + a + 𝒜 + a123 I of one of the 3D algebras.
///
/// Coefficients are ordered [1, e1, e2, e3, e12, e13, e23, e123].
class Multivector {
 public:
  using Coeffs = std::array<double, kBladeCount>;

  explicit Multivector(Signature sig = Signature::Cl30) : sig_(sig), c_{} {}
  Multivector(Signature sig, const Coeffs& coeffs) : sig_(sig), c_(coeffs) {}

  static Multivector scalar(Signature sig, double value);
  static Multivector basis(Signature sig, Blade blade, double coeff = 1.0);
  /// aS + aI·I
  static Multivector central(Signature sig, double scalar_part, double pseudoscalar_part);

  Signature signature() const { return sig_; }
  const Coeffs& coeffs() const { return c_; }
  double operator[](Blade b) const { return c_[index(b)]; }
  double operator[](std::size_t i) const { return c_[i]; }

  double scalar_part() const { return c_[0]; }
  double pseudoscalar_part() const { return c_[7]; }

  /// Copy with one coefficient replaced.
  Multivector with(Blade b, double value) const;

  /// a + 𝒜 (scalar and pseudoscalar parts dropped).
  Multivector vector_bivector_part() const;

  bool is_finite() const;
  double max_abs() const;
  double l1_norm() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
  friend Multivector operator*(Multivector lhs, double s) { return lhs *= s; }
  friend Multivector operator*(double s, Multivector rhs) { return rhs *= s; }
  friend Multivector operator/(Multivector lhs, double s) { return lhs /= s; }
  friend Multivector operator+(Multivector lhs, double s);
  friend Multivector operator-(Multivector lhs, double s);

  /// Geometric product.
  friend Multivector operator*(const Multivector& x, const Multivector& y);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Signature sig_;
  Coeffs c_;
};

Multivector geometric_product(const Multivector& x, const Multivector& y);

/// Largest componentwise absolute difference. Signatures must agree.
double max_abs_diff(const Multivector& x, const Multivector& y);

}  // namespace cliffexp
