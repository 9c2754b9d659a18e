#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "cliffexp/multivector.hpp"

namespace cliffexp {

/// Even subalgebras of Cl(1,3) and Cl(3,1), both isomorphic to Cl30.
enum class EvenSignature { Cl13, Cl31 };

std::string_view even_signature_name(EvenSignature sig);

inline constexpr std::array<std::string_view, kBladeCount> kEvenBladeNames = {
    "1", "e12", "e13", "e14", "e23", "e24", "e34", "e1234"};

/// Even multivector of a 4D algebra, coefficients ordered
/// [1, e12, e13, e14, e23, e24, e34, e1234].
class EvenMultivector4 {
 public:
  using Coeffs = std::array<double, kBladeCount>;

  explicit EvenMultivector4(EvenSignature sig = EvenSignature::Cl13) : sig_(sig), c_{} {}
  EvenMultivector4(EvenSignature sig, const Coeffs& coeffs) : sig_(sig), c_(coeffs) {}

  EvenSignature signature() const { return sig_; }
  const Coeffs& coeffs() const { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }

  friend EvenMultivector4 operator*(const EvenMultivector4& x, const EvenMultivector4& y);
  friend bool operator==(const EvenMultivector4&, const EvenMultivector4&) = default;

 private:
  EvenSignature sig_;
  Coeffs c_;
};

/// Built-in basis correspondences. The Cl12 tables relabel Cl30 as Cl12; the
/// Even tables relabel Cl30 as an even 4D subalgebra. "Primary" and
/// "Alternate" are the two published variants of each.
enum class RemapTable {
  Cl12Primary,
  Cl12Alternate,
  Cl13EvenPrimary,
  Cl13EvenAlternate,
  Cl31EvenPrimary,
  Cl31EvenAlternate,
};

inline constexpr std::array<RemapTable, 6> kAllRemapTables = {
    RemapTable::Cl12Primary,     RemapTable::Cl12Alternate,     RemapTable::Cl13EvenPrimary,
    RemapTable::Cl13EvenAlternate, RemapTable::Cl31EvenPrimary, RemapTable::Cl31EvenAlternate};

std::string_view remap_table_name(RemapTable table);

/// Looks a table up by name ("cl12-primary", "cl13-even-alternate", ...).
/// Throws UnknownRemap.
RemapTable parse_remap_table(std::string_view name);

/// Cl30 slot i maps to target slot `target[i]` with factor `sign[i]`.
struct SignedPermutation {
  std::array<std::uint8_t, kBladeCount> target;
  std::array<std::int8_t, kBladeCount> sign;
};

const SignedPermutation& remap_permutation(RemapTable table);

/// Cl30 → Cl12 for a Cl30 input, Cl12 → Cl30 (inverse table) for a Cl12 input.
/// Even tables throw UnknownRemap; other signatures throw UnsupportedSignature.
Multivector basis_remap(const Multivector& x, RemapTable table);

/// Cl30 → even 4D subalgebra. Cl12 tables throw UnknownRemap.
EvenMultivector4 to_even_subalgebra(const Multivector& x, RemapTable table);

/// Even 4D subalgebra → Cl30 via the inverse table.
Multivector from_even_subalgebra(const EvenMultivector4& x, RemapTable table);

}  // namespace cliffexp
