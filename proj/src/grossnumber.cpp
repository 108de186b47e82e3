#include "grossone/grossnumber.hpp"

#include <algorithm>
#include <cmath>

namespace grossone {

namespace {

void check_digit(double d) {
  if (!std::isfinite(d)) throw InvalidDigit("non-finite grossdigit");
}

}  // namespace

GrossNumber GrossNumber::normalized(std::vector<Term> raw,
                                    std::optional<GrossPower> floor) {
  for (const Term& t : raw) check_digit(t.digit);

  // Equal-power runs are summed in a digit-sorted order so the result is
  // independent of the order the raw terms arrived in (exact commutativity
  // of + and *).
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
    if (a.power != b.power) return a.power > b.power;
    return a.digit < b.digit;
  });

  GrossNumber out;
  out.floor_ = floor;
  out.terms_.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    const GrossPower p = raw[i].power;
    double sum = 0.0;
    for (; i < raw.size() && raw[i].power == p; ++i) sum += raw[i].digit;
    check_digit(sum);
    if (sum == 0.0) continue;
    if (floor && p < *floor) continue;
    out.terms_.push_back({p, sum});
  }
  return out;
}

GrossNumber GrossNumber::from_finite(double v) {
  check_digit(v);
  GrossNumber out;
  if (v != 0.0) out.terms_.push_back({GrossPower(0), v});
  return out;
}

GrossNumber GrossNumber::grossone_power(const GrossPower& p) {
  GrossNumber out;
  out.terms_.push_back({p, 1.0});
  return out;
}

double GrossNumber::coefficient(const GrossPower& p) const {
  // terms_ is sorted by strictly decreasing power
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const Term& t, const GrossPower& q) { return t.power > q; });
  if (it != terms_.end() && it->power == p) return it->digit;
  return 0.0;
}

GrossNumber GrossNumber::infinitesimal_part() const {
  GrossNumber out;
  out.floor_ = floor_;
  for (const Term& t : terms_)
    if (t.power < GrossPower(0)) out.terms_.push_back(t);
  return out;
}

GrossNumber GrossNumber::with_floor(std::optional<GrossPower> f) const {
  GrossNumber out;
  out.floor_ = f;
  for (const Term& t : terms_)
    if (!f || t.power >= *f) out.terms_.push_back(t);
  return out;
}

std::optional<GrossPower> combined_floor(const std::optional<GrossPower>& a,
                                         const std::optional<GrossPower>& b) {
  if (a && b) return std::max(*a, *b);
  return a ? a : b;
}

GrossNumber add(const GrossNumber& a, const GrossNumber& b) {
  std::vector<GrossNumber::Term> raw;
  raw.reserve(a.terms().size() + b.terms().size());
  raw.insert(raw.end(), a.terms().begin(), a.terms().end());
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return GrossNumber::normalized(std::move(raw), combined_floor(a.floor(), b.floor()));
}

GrossNumber neg(const GrossNumber& a) {
  std::vector<GrossNumber::Term> raw = a.terms();
  for (auto& t : raw) t.digit = -t.digit;
  return GrossNumber::normalized(std::move(raw), a.floor());
}

GrossNumber sub(const GrossNumber& a, const GrossNumber& b) {
  std::vector<GrossNumber::Term> raw;
  raw.reserve(a.terms().size() + b.terms().size());
  raw.insert(raw.end(), a.terms().begin(), a.terms().end());
  for (const auto& t : b.terms()) raw.push_back({t.power, -t.digit});
  return GrossNumber::normalized(std::move(raw), combined_floor(a.floor(), b.floor()));
}

GrossNumber mul(const GrossNumber& a, const GrossNumber& b) {
  std::vector<GrossNumber::Term> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      raw.push_back({ta.power + tb.power, ta.digit * tb.digit});
  return GrossNumber::normalized(std::move(raw), combined_floor(a.floor(), b.floor()));
}

GrossNumber div(const GrossNumber& a, const GrossNumber& b,
                std::optional<GrossPower> floor) {
  if (b.is_zero()) throw DivisionByZero();

  const std::optional<GrossPower> effective =
      combined_floor(floor, combined_floor(a.floor(), b.floor()));
  if (!effective && b.terms().size() > 1) throw MissingTruncationFloor();

  // Work on floor-stripped copies: remainder digits below the floor can
  // still feed quotient terms above it when the divisor's leading power is
  // negative. Truncation is applied once, to the assembled quotient.
  GrossNumber rem = a.with_floor(std::nullopt);
  const GrossNumber bs = b.with_floor(std::nullopt);
  if (bs.is_zero()) throw DivisionByZero();  // b was pure below-floor noise

  std::vector<GrossNumber::Term> quotient;
  while (!rem.is_zero()) {
    const GrossPower lead_power = rem.leading().power;
    const GrossPower q_power = lead_power - bs.leading().power;
    if (effective && q_power < *effective) break;
    const double q_digit = rem.leading().digit / bs.leading().digit;
    check_digit(q_digit);
    quotient.push_back({q_power, q_digit});

    GrossNumber q_term;
    q_term = GrossNumber::normalized({{q_power, q_digit}}, std::nullopt);
    rem = sub(rem, mul(q_term, bs));

    // The leading term cancels by construction; float rounding can leave a
    // residue there, which would stall the power descent. Force it out.
    std::vector<GrossNumber::Term> cleaned;
    cleaned.reserve(rem.terms().size());
    for (const auto& t : rem.terms())
      if (t.power != lead_power) cleaned.push_back(t);
    rem = GrossNumber::normalized(std::move(cleaned), std::nullopt);
  }
  return GrossNumber::normalized(std::move(quotient), effective);
}

GrossNumber int_pow(const GrossNumber& a, long long n) {
  if (n < 0) {
    if (a.is_zero()) throw DivisionByZero();
    const GrossNumber p = int_pow(a, -n);
    return div(GrossNumber::from_finite(1.0).with_floor(a.floor()), p, a.floor());
  }
  GrossNumber result = GrossNumber::from_finite(1.0).with_floor(a.floor());
  GrossNumber base = a;
  unsigned long long e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    e >>= 1ULL;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::strong_ordering compare(const GrossNumber& a, const GrossNumber& b) {
  const GrossNumber d = sub(a.with_floor(std::nullopt), b.with_floor(std::nullopt));
  if (d.is_zero()) return std::strong_ordering::equal;
  return d.leading().digit > 0 ? std::strong_ordering::greater
                               : std::strong_ordering::less;
}

}  // namespace grossone
