#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace cliffexp {

/// The four real Clifford algebras over a 3D vector space.
///
/// Cl12 has e1² = +1, e2² = e3² = −1; Cl21 has e1² = e2² = +1, e3² = −1.
enum class Signature { Cl30, Cl03, Cl12, Cl21 };

inline constexpr std::array<Signature, 4> kAllSignatures = {
    Signature::Cl30, Signature::Cl03, Signature::Cl12, Signature::Cl21};

/// Squares of e1, e2, e3.
constexpr std::array<int, 3> basis_squares(Signature sig) {
  switch (sig) {
    case Signature::Cl30: return {1, 1, 1};
    case Signature::Cl03: return {-1, -1, -1};
    case Signature::Cl12: return {1, -1, -1};
    case Signature::Cl21: return {1, 1, -1};
  }
  return {0, 0, 0};
}

constexpr int positive_count(Signature sig) {
  int p = 0;
  for (int s : basis_squares(sig)) p += s > 0 ? 1 : 0;
  return p;
}

constexpr int negative_count(Signature sig) { return 3 - positive_count(sig); }

/// I² = e123² : −1 for Cl30 and Cl12, +1 for Cl03 and Cl21.
constexpr int pseudoscalar_square(Signature sig) {
  const auto sq = basis_squares(sig);
  // e123 e123 = −e1² e2² e3²
  return -sq[0] * sq[1] * sq[2];
}

/// Lowercase tag used on the command line and in JSON ("cl30", ...).
constexpr std::string_view signature_name(Signature sig) {
  switch (sig) {
    case Signature::Cl30: return "cl30";
    case Signature::Cl03: return "cl03";
    case Signature::Cl12: return "cl12";
    case Signature::Cl21: return "cl21";
  }
  return "?";
}

std::optional<Signature> parse_signature(std::string_view name);

}  // namespace cliffexp
