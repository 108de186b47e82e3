#pragma once

#include <compare>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grossone {

/// Exact rational in canonical lowest terms; denominator >= 1.
///
/// Grosspowers are kept exact so that term alignment, ordering and equality
/// are never subject to floating-point ties. Arithmetic uses 128-bit
/// intermediates and throws std::overflow_error if a result leaves the
/// 64-bit range (unreachable for the powers this library produces).
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "3", "-2" or "5/7"; inverse of parse().
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "<int>" or "<int>/<int>".
  static Rational parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }

private:
  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd_wide(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = (std::numeric_limits<long long>::min)();
    constexpr __int128 hi = (std::numeric_limits<long long>::max)();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: value out of 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static long long parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty field");
    std::string buf(s);
    char* end = nullptr;
    const long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size())
      throw std::invalid_argument("Rational::parse: bad integer '" + buf + "'");
    return v;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace grossone
