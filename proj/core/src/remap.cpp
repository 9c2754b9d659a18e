#include "cliffexp/remap.hpp"

#include <bit>
#include <string>

#include "cliffexp/errors.hpp"

namespace cliffexp {

namespace {

// Basis bitmasks of the even 4D blades in storage order.
constexpr std::array<unsigned, kBladeCount> kEvenMasks = {0b0000, 0b0011, 0b0101, 0b1001,
                                                         0b0110, 0b1010, 0b1100, 0b1111};

constexpr std::array<int, 4> even_metric(EvenSignature sig) {
  if (sig == EvenSignature::Cl13) return {1, -1, -1, -1};
  return {1, 1, 1, -1};
}

// Sign of e_a e_b after sorting into canonical order and contracting
// repeated vectors.
constexpr int mask_product_sign(unsigned a, unsigned b, const std::array<int, 4>& metric) {
  int swaps = 0;
  for (unsigned shifted = a >> 1; shifted != 0; shifted >>= 1) {
    swaps += std::popcount(shifted & b);
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  const unsigned common = a & b;
  for (int bit = 0; bit < 4; ++bit) {
    if (common & (1u << bit)) sign *= metric[bit];
  }
  return sign;
}

constexpr std::size_t even_slot(unsigned mask) {
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (kEvenMasks[i] == mask) return i;
  }
  return kBladeCount;
}

using EvenTable = std::array<std::array<ProductEntry, kBladeCount>, kBladeCount>;

constexpr EvenTable make_even_table(EvenSignature sig) {
  EvenTable table{};
  const auto metric = even_metric(sig);
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const unsigned a = kEvenMasks[i];
      const unsigned b = kEvenMasks[j];
      table[i][j] = {static_cast<std::uint8_t>(even_slot(a ^ b)),
                     static_cast<std::int8_t>(mask_product_sign(a, b, metric))};
    }
  }
  return table;
}

constexpr EvenTable kCl13Table = make_even_table(EvenSignature::Cl13);
constexpr EvenTable kCl31Table = make_even_table(EvenSignature::Cl31);

// Slot i of a Cl30 multivector goes to slot target[i] with sign[i]. Slot 0 is
// the scalar in every table.
constexpr SignedPermutation kCl12Primary{{0, 1, 5, 4, 3, 2, 6, 7}, {1, 1, 1, 1, 1, 1, 1, 1}};
constexpr SignedPermutation kCl12Alternate{{0, 4, 5, 1, 6, 2, 3, 7}, {1, 1, 1, 1, -1, -1, -1, -1}};
constexpr SignedPermutation kCl13Primary{{0, 1, 2, 3, 4, 5, 6, 7}, {1, 1, 1, 1, -1, -1, -1, -1}};
constexpr SignedPermutation kCl13Alternate{{0, 3, 2, 1, 6, 5, 4, 7}, {1, 1, 1, 1, 1, 1, 1, 1}};
constexpr SignedPermutation kCl31Primary{{0, 3, 5, 6, 1, 2, 4, 7}, {1, 1, 1, 1, 1, 1, 1, 1}};
constexpr SignedPermutation kCl31Alternate{{0, 6, 5, 3, 4, 2, 1, 7}, {1, 1, 1, 1, -1, -1, -1, -1}};

bool is_cl12_table(RemapTable table) {
  return table == RemapTable::Cl12Primary || table == RemapTable::Cl12Alternate;
}

EvenSignature even_target(RemapTable table) {
  switch (table) {
    case RemapTable::Cl13EvenPrimary:
    case RemapTable::Cl13EvenAlternate: return EvenSignature::Cl13;
    case RemapTable::Cl31EvenPrimary:
    case RemapTable::Cl31EvenAlternate: return EvenSignature::Cl31;
    default: break;
  }
  throw UnknownRemap("table " + std::string(remap_table_name(table)) +
                     " does not target an even subalgebra");
}

std::array<double, kBladeCount> forward(const std::array<double, kBladeCount>& c,
                                        const SignedPermutation& perm) {
  std::array<double, kBladeCount> out{};
  for (std::size_t i = 0; i < kBladeCount; ++i) out[perm.target[i]] = perm.sign[i] * c[i];
  return out;
}

std::array<double, kBladeCount> backward(const std::array<double, kBladeCount>& c,
                                         const SignedPermutation& perm) {
  std::array<double, kBladeCount> out{};
  for (std::size_t i = 0; i < kBladeCount; ++i) out[i] = perm.sign[i] * c[perm.target[i]];
  return out;
}

}  // namespace

std::string_view even_signature_name(EvenSignature sig) {
  return sig == EvenSignature::Cl13 ? "cl13+" : "cl31+";
}

EvenMultivector4 operator*(const EvenMultivector4& x, const EvenMultivector4& y) {
  if (x.sig_ != y.sig_) {
    throw Error("even multivector signature mismatch: " +
                std::string(even_signature_name(x.sig_)) + " vs " +
                std::string(even_signature_name(y.sig_)));
  }
  const EvenTable& table = (x.sig_ == EvenSignature::Cl13) ? kCl13Table : kCl31Table;
  EvenMultivector4::Coeffs out{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (x.c_[i] == 0.0) continue;
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const ProductEntry e = table[i][j];
      out[e.blade] += e.sign * x.c_[i] * y.c_[j];
    }
  }
  return EvenMultivector4(x.sig_, out);
}

std::string_view remap_table_name(RemapTable table) {
  switch (table) {
    case RemapTable::Cl12Primary: return "cl12-primary";
    case RemapTable::Cl12Alternate: return "cl12-alternate";
    case RemapTable::Cl13EvenPrimary: return "cl13-even-primary";
    case RemapTable::Cl13EvenAlternate: return "cl13-even-alternate";
    case RemapTable::Cl31EvenPrimary: return "cl31-even-primary";
    case RemapTable::Cl31EvenAlternate: return "cl31-even-alternate";
  }
  return "?";
}

RemapTable parse_remap_table(std::string_view name) {
  for (RemapTable table : kAllRemapTables) {
    if (remap_table_name(table) == name) return table;
  }
  throw UnknownRemap("unknown remap table '" + std::string(name) + "'");
}

const SignedPermutation& remap_permutation(RemapTable table) {
  switch (table) {
    case RemapTable::Cl12Primary: return kCl12Primary;
    case RemapTable::Cl12Alternate: return kCl12Alternate;
    case RemapTable::Cl13EvenPrimary: return kCl13Primary;
    case RemapTable::Cl13EvenAlternate: return kCl13Alternate;
    case RemapTable::Cl31EvenPrimary: return kCl31Primary;
    case RemapTable::Cl31EvenAlternate: return kCl31Alternate;
  }
  throw UnknownRemap("unknown remap table");
}

Multivector basis_remap(const Multivector& x, RemapTable table) {
  if (!is_cl12_table(table)) {
    throw UnknownRemap("table " + std::string(remap_table_name(table)) +
                       " maps into an even 4D subalgebra; use to_even_subalgebra");
  }
  const SignedPermutation& perm = remap_permutation(table);
  switch (x.signature()) {
    case Signature::Cl30: return Multivector(Signature::Cl12, forward(x.coeffs(), perm));
    case Signature::Cl12: return Multivector(Signature::Cl30, backward(x.coeffs(), perm));
    default: throw UnsupportedSignature("basis_remap", x.signature());
  }
}

EvenMultivector4 to_even_subalgebra(const Multivector& x, RemapTable table) {
  const EvenSignature target = even_target(table);
  if (x.signature() != Signature::Cl30) throw UnsupportedSignature("to_even_subalgebra", x.signature());
  return EvenMultivector4(target, forward(x.coeffs(), remap_permutation(table)));
}

Multivector from_even_subalgebra(const EvenMultivector4& x, RemapTable table) {
  const EvenSignature target = even_target(table);
  if (x.signature() != target) {
    throw UnknownRemap("table " + std::string(remap_table_name(table)) + " expects " +
                       std::string(even_signature_name(target)));
  }
  return Multivector(Signature::Cl30, backward(x.coeffs(), remap_permutation(table)));
}

}  // namespace cliffexp
