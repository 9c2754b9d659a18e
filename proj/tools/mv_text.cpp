#include "mv_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace cliffexp::text {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  std::string_view slice(std::size_t from) const { return s_.substr(from, pos_ - from); }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] static void fail_at(std::size_t pos, const std::string& message) {
    throw ParseError(message, pos + 1);
  }

  // Unsigned number at the cursor, or nullopt if none starts here.
  std::optional<double> number() {
    if (done() || !(is_digit(peek()) || peek() == '.')) return std::nullopt;
    const char* first = s_.data() + pos_;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), value);
    if (ec == std::errc::result_out_of_range) fail("number out of range");
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  // Leading '+'/'-' signs folded into one factor.
  double signs() {
    double sign = 1.0;
    skip_space();
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -sign;
      advance();
      skip_space();
    }
    return sign;
  }

  double signed_number(const char* what) {
    const double sign = signs();
    const std::size_t at = pos_;
    const auto value = number();
    if (!value) fail_at(at, std::string("expected ") + what);
    return sign * *value;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> blade_slot(std::string_view name) {
  if (name == "I") return index(Blade::E123);
  for (std::size_t i = 1; i < kBladeCount; ++i) {
    if (kBladeNames[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t read_blade(Cursor& cur) {
  const std::size_t start = cur.pos();
  if (cur.peek() == 'I') {
    cur.advance();
    return index(Blade::E123);
  }
  if (cur.peek() != 'e') cur.fail("expected a blade (e1, e2, e3, e12, e13, e23, e123 or I)");
  cur.advance();
  while (is_digit(cur.peek())) cur.advance();
  const std::string_view name = cur.slice(start);
  if (auto slot = blade_slot(name)) return *slot;

  std::string sorted(name.substr(1));
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && blade_slot("e" + sorted) && sorted != name.substr(1)) {
    Cursor::fail_at(start, "unknown blade '" + std::string(name) +
                               "': blades use increasing indices, write e" + sorted +
                               " (e.g. e31 = -e13)");
  }
  Cursor::fail_at(start, "unknown blade '" + std::string(name) + "'");
}

void require_finite(const Multivector::Coeffs& c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw ParseError("coefficients must be finite", 1);
  }
}

Multivector parse_comma_form(std::string_view s, Signature sig) {
  Cursor cur(s);
  Multivector::Coeffs c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (i > 0) {
      cur.skip_space();
      if (cur.peek() != ',') {
        cur.fail(cur.done() ? "expected 8 comma-separated coefficients, got " + std::to_string(i)
                            : std::string("expected ','"));
      }
      cur.advance();
    }
    c[i] = cur.signed_number("a number");
  }
  cur.skip_space();
  if (cur.peek() == ',') cur.fail("more than 8 coefficients");
  if (cur.peek() == '/') {
    cur.advance();
    cur.skip_space();
    const std::size_t at = cur.pos();
    const double divisor = cur.signed_number("a divisor after '/'");
    if (divisor == 0.0) Cursor::fail_at(at, "division by zero");
    for (double& v : c) v /= divisor;
    cur.skip_space();
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  require_finite(c);
  return Multivector(sig, c);
}

Multivector parse_term_form(std::string_view s, Signature sig) {
  Cursor cur(s);
  Multivector::Coeffs c{};
  cur.skip_space();
  if (cur.done()) cur.fail("empty multivector");
  bool first = true;
  while (true) {
    cur.skip_space();
    if (cur.done()) break;
    if (!first && cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    const double sign = cur.signs();
    if (cur.done()) cur.fail("expected a term");
    double coeff = 1.0;
    std::size_t slot = 0;
    if (auto value = cur.number()) {
      coeff = *value;
      cur.skip_space();
      if (cur.peek() == '*') {
        cur.advance();
        cur.skip_space();
        slot = read_blade(cur);
      }
    } else {
      slot = read_blade(cur);
    }
    c[slot] += sign * coeff;
    first = false;
  }
  require_finite(c);
  return Multivector(sig, c);
}

std::string format_fixed_exact(double magnitude) {
  // glibc prints the exact binary value, so cutting this string truncates.
  // 309 integer digits + point + 40 decimals fits.
  char buf[400];
  const int n = std::snprintf(buf, sizeof buf, "%.40f", magnitude);
  return std::string(buf, static_cast<std::size_t>(std::clamp(n, 0, 399)));
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

Multivector parse_mv(std::string_view s, Signature sig) {
  if (s.find(',') != std::string_view::npos) return parse_comma_form(s, sig);
  return parse_term_form(s, sig);
}

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_truncated(double value, int digits) {
  if (!std::isfinite(value)) return format_shortest(value);
  const std::string full = format_fixed_exact(std::abs(value));
  const std::size_t dot = full.find('.');
  const int int_digits = static_cast<int>(dot);
  const int decimals = std::max(0, digits - int_digits);
  std::string out = full.substr(0, decimals > 0 ? dot + 1 + static_cast<std::size_t>(decimals) : dot);
  const bool nonzero = out.find_first_of("123456789") != std::string::npos;
  if (value < 0 && nonzero) out.insert(out.begin(), '-');
  return out;
}

std::string render_exact(const Multivector& x) {
  std::string out;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (i > 0) out += ',';
    out += format_shortest(x[i]);
  }
  return out;
}

std::string render_terms(const Multivector& x, int digits) {
  std::string out;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const double v = x[i];
    if (v == 0.0) continue;
    const std::string mag = digits > 0 ? format_truncated(std::abs(v), digits) : format_shortest(std::abs(v));
    if (out.empty()) {
      if (v < 0) out += '-';
    } else {
      out += v < 0 ? " - " : " + ";
    }
    out += mag;
    if (i > 0) {
      out += '*';
      out += kBladeNames[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cliffexp::text
