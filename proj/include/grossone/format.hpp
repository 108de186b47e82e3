#pragma once

#include <string>
#include <string_view>

#include "grossone/grossnumber.hpp"

namespace grossone {

/// Machine output keeps 17 significant digits (binary64 round-trip safe);
/// human output rounds to 6.
enum class FloatStyle { Machine, Human };

/// One double, "%.17g" or "%.6g".
std::string format_double(double v, FloatStyle style);

/// Canonical text form: `digit@power` terms joined by single spaces, e.g.
/// "125@0 75@-1 15@-2 1@-3". Powers print as integers when the denominator
/// is 1, else "num/den". Zero prints as "0". The floor is not part of the
/// text form.
std::string to_text(const GrossNumber& g, FloatStyle style = FloatStyle::Machine);

/// Inverse of to_text (machine style); throws InvalidDigit on malformed
/// digits and std::invalid_argument on malformed powers or structure.
GrossNumber parse_text(std::string_view text);

/// JSON form: {"terms":[{"power":"-1","digit":75.0},...],"floor":"-3"}
/// with floor null when absent. Powers are strings to keep rationals exact.
std::string to_json(const GrossNumber& g);
GrossNumber from_json(std::string_view json);

}  // namespace grossone
