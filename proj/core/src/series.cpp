#include "cliffexp/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cliffexp/errors.hpp"

namespace cliffexp {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(int n, int k) {
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

cpp_int factorial(int n) {
  cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// B_0..B_n from Σ_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<cpp_rational> bernoulli_numbers(int n) {
  std::vector<cpp_rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    cpp_rational sum = 0;
    for (int j = 0; j < m; ++j) sum += cpp_rational(binomial(m + 1, j)) * b[j];
    b[m] = -sum / (m + 1);
  }
  return b;
}

// Even-index Euler numbers E_0, E_2, ... from Σ_k C(n, 2k) E_2k = 0.
std::vector<cpp_int> euler_numbers(int n) {
  std::vector<cpp_int> e(n / 2 + 1);
  e[0] = 1;
  for (int m = 1; 2 * m <= n; ++m) {
    cpp_int sum = 0;
    for (int k = 0; k < m; ++k) sum += binomial(2 * m, 2 * k) * e[k];
    e[m] = -sum;
  }
  return e;
}

using CoefficientRow = std::array<double, kMaxSeriesOrder + 1>;

struct CoefficientTables {
  std::array<CoefficientRow, kAllSeriesFamilies.size()> rows{};

  CoefficientTables() {
    const auto bern = bernoulli_numbers(kMaxSeriesOrder + 2);
    const auto eul = euler_numbers(kMaxSeriesOrder);
    for (int d = 0; d <= kMaxSeriesOrder; ++d) {
      const cpp_rational inv_fact(cpp_int(1), factorial(d));
      const int parity_sign = ((d / 2) % 2 == 0) ? 1 : -1;
      const bool odd = d % 2 == 1;
      row(SeriesFamily::Exp)[d] = inv_fact.convert_to<double>();
      row(SeriesFamily::Sinh)[d] = odd ? inv_fact.convert_to<double>() : 0.0;
      row(SeriesFamily::Cosh)[d] = odd ? 0.0 : inv_fact.convert_to<double>();
      row(SeriesFamily::Sin)[d] = odd ? parity_sign * inv_fact.convert_to<double>() : 0.0;
      row(SeriesFamily::Cos)[d] = odd ? 0.0 : parity_sign * inv_fact.convert_to<double>();

      if (odd) {
        // tanh x = Σ 2^{2k}(2^{2k}−1) B_{2k} x^{2k−1} / (2k)!, tan adds (−1)^{k−1}.
        const int k = (d + 1) / 2;
        const cpp_int pow2 = cpp_int(1) << (2 * k);
        const cpp_rational c =
            cpp_rational(pow2 * (pow2 - 1)) * bern[2 * k] / cpp_rational(factorial(2 * k));
        row(SeriesFamily::Tanh)[d] = c.convert_to<double>();
        row(SeriesFamily::Tan)[d] = ((k % 2 == 1) ? c : cpp_rational(-c)).convert_to<double>();
      } else {
        // sech x = Σ E_{2k} x^{2k}/(2k)!, sec x = Σ (−1)^k E_{2k} x^{2k}/(2k)!.
        const cpp_rational c = cpp_rational(eul[d / 2]) * inv_fact;
        row(SeriesFamily::SechEuler)[d] = c.convert_to<double>();
        row(SeriesFamily::SecEuler)[d] = (parity_sign > 0 ? c : cpp_rational(-c)).convert_to<double>();
      }
    }
  }

  CoefficientRow& row(SeriesFamily family) { return rows[static_cast<std::size_t>(family)]; }
  const CoefficientRow& row(SeriesFamily family) const {
    return rows[static_cast<std::size_t>(family)];
  }
};

const CoefficientTables& tables() {
  static const CoefficientTables instance;
  return instance;
}

Multivector power(Multivector base, int n) {
  Multivector result = Multivector::scalar(base.signature(), 1.0);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace

std::string_view series_family_name(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::Exp: return "exp";
    case SeriesFamily::Sin: return "sin";
    case SeriesFamily::Cos: return "cos";
    case SeriesFamily::Sinh: return "sinh";
    case SeriesFamily::Cosh: return "cosh";
    case SeriesFamily::Tanh: return "tanh";
    case SeriesFamily::Tan: return "tan";
    case SeriesFamily::SechEuler: return "sech";
    case SeriesFamily::SecEuler: return "sec";
  }
  return "?";
}

std::optional<SeriesFamily> parse_series_family(std::string_view name) {
  for (SeriesFamily family : kAllSeriesFamilies) {
    if (series_family_name(family) == name) return family;
  }
  return std::nullopt;
}

double series_coefficient(SeriesFamily family, int degree) {
  if (degree < 0) throw std::invalid_argument("negative series degree");
  if (degree > kMaxSeriesOrder) throw SeriesOrderExceeded(degree, kMaxSeriesOrder);
  return tables().row(family)[degree];
}

SeriesResult series_eval(const Multivector& x, const SeriesSpec& spec) {
  if (spec.terms < 1) throw std::invalid_argument("series needs at least one term");
  if (spec.terms > kMaxSeriesOrder) throw SeriesOrderExceeded(spec.terms, kMaxSeriesOrder);
  const CoefficientRow& c = tables().row(spec.family);
  const Signature sig = x.signature();

  Multivector acc = Multivector::scalar(sig, c[spec.terms]);
  for (int d = spec.terms - 1; d >= 0; --d) acc = acc * x + c[d];

  int last = spec.terms;
  while (last > 0 && c[last] == 0.0) --last;
  const double delta = std::abs(c[last]) * power(x, last).max_abs();
  return SeriesResult{acc, delta};
}

}  // namespace cliffexp
