#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <cliffexp/multivector.hpp>

namespace cliffexp::text {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column);
  /// 1-based column of the offending character.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Accepts either eight comma-separated coefficients in blade order with an
/// optional trailing "/ N" divisor,
///   4,1,3,-5,10,9,-9,-4 / 17
/// or a sum of terms,
///   4 + 1*e1 + 3*e2 - 5*e3 + 10*e12 + 9*e13 - 9*e23 - 4*e123
/// where repeated blades add up and I is accepted for e123.
Multivector parse_mv(std::string_view s, Signature sig);

/// Shortest comma form that parses back to exactly the same coefficients.
std::string render_exact(const Multivector& x);

/// Signed terms in blade order with exact zeros suppressed. digits <= 0
/// prints shortest round-trip numbers; otherwise each coefficient is cut
/// (not rounded) to `digits` significant figures.
std::string render_terms(const Multivector& x, int digits = 0);

/// One number cut to `digits` significant figures: the decimals are
/// digits − max(1, number of integer digits).
std::string format_truncated(double value, int digits);

/// Shortest decimal that parses back to `value`.
std::string format_shortest(double value);

}  // namespace cliffexp::text
