#include "cliffexp/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <string>

#include "cliffexp/errors.hpp"

namespace cliffexp {

namespace {

// Bit i set <=> e_{i+1} is a factor of the blade.
constexpr std::array<unsigned, kBladeCount> kBladeMask = {0b000, 0b001, 0b010, 0b100,
                                                          0b011, 0b101, 0b110, 0b111};

constexpr std::uint8_t blade_of_mask(unsigned mask) {
  for (std::uint8_t i = 0; i < kBladeCount; ++i) {
    if (kBladeMask[i] == mask) return i;
  }
  return 0xff;
}

// Sign picked up when reordering the concatenated factors of a and b into
// increasing index order, then contracting repeated factors with the metric.
constexpr int blade_product_sign(unsigned a, unsigned b, const std::array<int, 3>& squares) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  const unsigned common = a & b;
  for (int i = 0; i < 3; ++i) {
    if ((common >> i) & 1u) sign *= squares[i];
  }
  return sign;
}

constexpr ProductTable make_table(Signature sig) {
  ProductTable table{};
  const auto squares = basis_squares(sig);
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const unsigned a = kBladeMask[i];
      const unsigned b = kBladeMask[j];
      table[i][j] = ProductEntry{blade_of_mask(a ^ b),
                                 static_cast<std::int8_t>(blade_product_sign(a, b, squares))};
    }
  }
  return table;
}

constexpr std::array<ProductTable, 4> kTables = {
    make_table(Signature::Cl30), make_table(Signature::Cl03), make_table(Signature::Cl12),
    make_table(Signature::Cl21)};

}  // namespace

std::optional<Signature> parse_signature(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (Signature sig : kAllSignatures) {
    if (signature_name(sig) == lower) return sig;
  }
  return std::nullopt;
}

const ProductTable& product_table(Signature sig) { return kTables[static_cast<std::size_t>(sig)]; }

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::basis(Signature sig, Blade blade, double coeff) {
  Multivector m(sig);
  m.c_[index(blade)] = coeff;
  return m;
}

Multivector Multivector::central(Signature sig, double scalar_part, double pseudoscalar_part) {
  Multivector m(sig);
  m.c_[0] = scalar_part;
  m.c_[7] = pseudoscalar_part;
  return m;
}

Multivector Multivector::with(Blade b, double value) const {
  Multivector m = *this;
  m.c_[index(b)] = value;
  return m;
}

Multivector Multivector::vector_bivector_part() const {
  Multivector m = *this;
  m.c_[0] = 0.0;
  m.c_[7] = 0.0;
  return m;
}

bool Multivector::is_finite() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double Multivector::l1_norm() const {
  double s = 0.0;
  for (double v : c_) s += std::abs(v);
  return s;
}

Multivector Multivector::operator-() const {
  Multivector m = *this;
  for (double& v : m.c_) v = -v;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (sig_ != rhs.sig_) throw SignatureMismatch(sig_, rhs.sig_);
  for (std::size_t i = 0; i < kBladeCount; ++i) c_[i] += rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (sig_ != rhs.sig_) throw SignatureMismatch(sig_, rhs.sig_);
  for (std::size_t i = 0; i < kBladeCount; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (double& v : c_) v /= s;
  return *this;
}

Multivector operator+(Multivector lhs, double s) {
  lhs.c_[0] += s;
  return lhs;
}

Multivector operator-(Multivector lhs, double s) {
  lhs.c_[0] -= s;
  return lhs;
}

Multivector operator*(const Multivector& x, const Multivector& y) {
  if (x.sig_ != y.sig_) throw SignatureMismatch(x.sig_, y.sig_);
  const ProductTable& table = product_table(x.sig_);
  Multivector out(x.sig_);
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const double xi = x.c_[i];
    if (xi == 0.0) continue;
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const ProductEntry e = table[i][j];
      out.c_[e.blade] += e.sign * xi * y.c_[j];
    }
  }
  return out;
}

Multivector geometric_product(const Multivector& x, const Multivector& y) { return x * y; }

double max_abs_diff(const Multivector& x, const Multivector& y) { return (x - y).max_abs(); }

}  // namespace cliffexp
