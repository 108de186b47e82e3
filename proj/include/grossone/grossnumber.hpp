#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "grossone/errors.hpp"
#include "grossone/rational.hpp"

namespace grossone {

/// Exponent of the infinite radix in one term. Always a finite exact
/// rational here; the derivative pipeline only ever produces integers.
using GrossPower = Rational;

/// Settings shared by the evaluation pipeline: a truncation order k
/// (floor at power -k) and the tolerance used by approximate comparison
/// in tests. The tolerance never influences normalization.
struct EvalConfig {
  int order = 3;
  double digit_tol = 0.0;

  void validate() const {
    if (order < 0) throw std::invalid_argument("EvalConfig: order must be >= 0");
    if (digit_tol < 0) throw std::invalid_argument("EvalConfig: digit_tol must be >= 0");
  }

  GrossPower floor() const { return GrossPower(-static_cast<long long>(order)); }
};

/// A number in the positional system with the infinite radix: an ordered
/// sum of terms digit * radix^power with strictly decreasing powers and
/// nonzero finite digits. The empty term list is 0.
///
/// An optional truncation floor makes every operation discard terms whose
/// power falls below it, so a whole computation behaves like a fixed
/// window of retained exponents without per-call bookkeeping.
///
/// Values are immutable after construction and safe to share across
/// threads.
class GrossNumber {
public:
  struct Term {
    GrossPower power;
    double digit;

    friend bool operator==(const Term& a, const Term& b) {
      return a.power == b.power && a.digit == b.digit;
    }
  };

  /// Zero with no floor.
  GrossNumber() = default;

  /// Normalizes arbitrary raw terms: digits at equal powers are summed,
  /// exact zeros dropped, terms sorted by strictly decreasing power and
  /// truncated at the floor. Throws InvalidDigit on NaN/inf digits,
  /// including sums that overflow.
  static GrossNumber normalized(std::vector<Term> raw,
                                std::optional<GrossPower> floor = std::nullopt);

  /// Embeds a finite binary64 value: 0 becomes the empty list, anything
  /// else a single term at power 0.
  static GrossNumber from_finite(double v);

  /// The pure power radix^p (single term with digit 1). p = -1 is the
  /// infinitesimal unit, p = 0 is the number 1.
  static GrossNumber grossone_power(const GrossPower& p);

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<GrossPower>& floor() const { return floor_; }

  bool is_zero() const { return terms_.empty(); }

  /// Highest-power term. Precondition: not zero.
  const Term& leading() const { return terms_.front(); }

  /// Digit at power p, or 0 when no such term exists.
  double coefficient(const GrossPower& p) const;

  bool has_infinite_part() const {
    return !terms_.empty() && terms_.front().power > GrossPower(0);
  }

  /// Digit at power 0 (0 when absent).
  double finite_part() const { return coefficient(GrossPower(0)); }

  /// Terms with negative powers only, keeping this value's floor.
  GrossNumber infinitesimal_part() const;

  /// Same value with a different floor; setting a floor re-truncates,
  /// clearing one never restores dropped terms.
  GrossNumber with_floor(std::optional<GrossPower> f) const;

  /// Exact structural equality: identical term lists and identical floor.
  /// For semantic ordering use compare().
  friend bool operator==(const GrossNumber& a, const GrossNumber& b) {
    return a.terms_ == b.terms_ && a.floor_ == b.floor_;
  }

private:
  std::vector<Term> terms_;
  std::optional<GrossPower> floor_;
};

/// The stricter (less permissive) of two optional floors; the rule every
/// binary operation uses for its result.
std::optional<GrossPower> combined_floor(const std::optional<GrossPower>& a,
                                         const std::optional<GrossPower>& b);

GrossNumber add(const GrossNumber& a, const GrossNumber& b);
GrossNumber sub(const GrossNumber& a, const GrossNumber& b);
GrossNumber neg(const GrossNumber& a);

/// Distributive product of term lists: powers add, digits multiply.
GrossNumber mul(const GrossNumber& a, const GrossNumber& b);

/// Long division by the leading term of b: q = lead(a_rem)/lead(b) is
/// appended, a_rem -= q*b (the leading power cancels exactly by
/// construction), until the remainder vanishes or the next quotient power
/// would fall below the floor.
///
/// The effective floor is the strictest of {a's, b's, the argument}. With
/// no floor at all, only single-term divisors are accepted (those always
/// terminate: one digit divide per dividend term); anything else throws
/// MissingTruncationFloor. b = 0 throws DivisionByZero.
GrossNumber div(const GrossNumber& a, const GrossNumber& b,
                std::optional<GrossPower> floor = std::nullopt);

/// a^n by binary exponentiation, truncating per multiply. Negative n takes
/// the reciprocal via div with a's floor and requires a != 0.
GrossNumber int_pow(const GrossNumber& a, long long n);

/// Sign of the exact difference of the stored terms (floors are ignored:
/// comparison never truncates). The sign of a nonzero value is the sign of
/// its leading digit.
std::strong_ordering compare(const GrossNumber& a, const GrossNumber& b);

inline GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) { return add(a, b); }
inline GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return sub(a, b); }
inline GrossNumber operator-(const GrossNumber& a) { return neg(a); }
inline GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) { return mul(a, b); }
inline GrossNumber operator/(const GrossNumber& a, const GrossNumber& b) { return div(a, b); }

}  // namespace grossone
