#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cliffexp/multivector.hpp"

namespace cliffexp {

enum class SeriesFamily { Exp, Sin, Cos, Sinh, Cosh, Tanh, Tan, SechEuler, SecEuler };

inline constexpr std::array<SeriesFamily, 9> kAllSeriesFamilies = {
    SeriesFamily::Exp,  SeriesFamily::Sin,  SeriesFamily::Cos,
    SeriesFamily::Sinh, SeriesFamily::Cosh, SeriesFamily::Tanh,
    SeriesFamily::Tan,  SeriesFamily::SechEuler, SeriesFamily::SecEuler};

std::string_view series_family_name(SeriesFamily family);
std::optional<SeriesFamily> parse_series_family(std::string_view name);

/// Highest polynomial degree with a precomputed coefficient.
inline constexpr int kMaxSeriesOrder = 60;

/// Taylor polynomial of `family` through degree `terms` (so sinh with 6 terms
/// is A + A³/3! + A⁵/5!).
struct SeriesSpec {
  SeriesFamily family = SeriesFamily::Exp;
  int terms = 20;
};

struct SeriesResult {
  Multivector value;
  /// max |coeff| of the highest-degree nonzero term that was added.
  double last_term_delta = 0.0;
};

/// Coefficient of x^degree. Tanh/Tan come from Bernoulli numbers and
/// SechEuler/SecEuler from Euler numbers, all computed as exact rationals.
/// Throws SeriesOrderExceeded above kMaxSeriesOrder.
double series_coefficient(SeriesFamily family, int degree);

/// Horner evaluation with one geometric product per degree. terms < 1 throws
/// std::invalid_argument; terms > kMaxSeriesOrder throws SeriesOrderExceeded.
SeriesResult series_eval(const Multivector& x, const SeriesSpec& spec);

}  // namespace cliffexp
