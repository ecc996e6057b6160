#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "lorpath/errors.hpp"

namespace lorpath {

/// Exact rational on int64 with positive denominator and gcd-reduced terms.
/// Intermediates are computed in 128 bits; results that do not narrow back
/// to int64 throw std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { *this = reduced(num, den); }

  // Accepts "12", "-3", "0.25", "9/10". Decimal input is parsed exactly.
  static Rational parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  std::string to_string() const;  // "9/10" or "-3"

  // Exact decimal string when the expansion terminates ("9.7", "0.25"),
  // otherwise the "num/den" form.
  std::string decimal_or_fraction() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using i128 = __int128;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static std::int64_t narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
      throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
  }

  static Rational reduced(i128 num, i128 den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) den = 1;
    const i128 g = gcd128(num, den);
    Rational r;
    if (g > 1) {
      num /= g;
      den /= g;
    }
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }
};

inline Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto digits = [&](std::int64_t& out) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw bad();
    i128 acc = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      acc = acc * 10 + (text[pos] - '0');
      if (acc > i128(INT64_MAX)) throw bad();
      ++pos;
    }
    out = static_cast<std::int64_t>(acc);
  };
  std::int64_t whole = 0;
  digits(whole);
  if (pos == text.size()) return negative ? Rational(-whole) : Rational(whole);
  if (text[pos] == '/') {
    ++pos;
    std::int64_t den = 0;
    digits(den);
    if (pos != text.size() || den == 0) throw bad();
    return Rational(negative ? -whole : whole, den);
  }
  if (text[pos] != '.') throw bad();
  ++pos;
  const std::size_t frac_start = pos;
  std::int64_t frac = 0;
  digits(frac);
  if (pos != text.size()) throw bad();
  const std::size_t frac_len = pos - frac_start;
  if (frac_len > 18) throw bad();
  i128 den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  const i128 num = i128(whole) * den + frac;
  return reduced(negative ? -num : num, den);
}

inline std::string Rational::to_string() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

inline std::string Rational::decimal_or_fraction() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  const int digits = twos > fives ? twos : fives;
  if (d != 1 || digits > 18) return to_string();
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  i128 scaled = i128(num_ < 0 ? -num_ : num_) * (scale / den_);
  std::string frac(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + int(scaled % 10));
    scaled /= 10;
  }
  std::string s = num_ < 0 ? "-" : "";
  s += std::to_string(static_cast<std::int64_t>(scaled));
  s += ".";
  s += frac;
  return s;
}

}  // namespace lorpath
