#include "grossone/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace grossone {

std::string format_double(double v, FloatStyle style) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), style == FloatStyle::Machine ? "%.17g" : "%.6g", v);
  return buf;
}

std::string to_text(const GrossNumber& g, FloatStyle style) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& t : g.terms()) {
    if (!out.empty()) out += ' ';
    out += format_double(t.digit, style);
    out += '@';
    out += t.power.to_string();
  }
  return out;
}

namespace {

double parse_digit(std::string_view s) {
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size())
    throw InvalidDigit("bad grossdigit '" + buf + "'");
  if (!std::isfinite(v)) throw InvalidDigit("non-finite grossdigit '" + buf + "'");
  return v;
}

}  // namespace

GrossNumber parse_text(std::string_view text) {
  std::vector<GrossNumber::Term> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "0" && raw.empty() && i >= text.size()) return GrossNumber();
    const auto at = tok.find('@');
    if (at == std::string_view::npos)
      throw std::invalid_argument("grossnumber term '" + std::string(tok) +
                                  "' lacks '@'");
    raw.push_back({Rational::parse(tok.substr(at + 1)), parse_digit(tok.substr(0, at))});
  }
  return GrossNumber::normalized(std::move(raw), std::nullopt);
}

std::string to_json(const GrossNumber& g) {
  std::string out = "{\"terms\":[";
  bool first = true;
  for (const auto& t : g.terms()) {
    if (!first) out += ',';
    first = false;
    out += "{\"power\":\"" + t.power.to_string() + "\",\"digit\":";
    out += format_double(t.digit, FloatStyle::Machine);
    out += '}';
  }
  out += "],\"floor\":";
  out += g.floor() ? "\"" + g.floor()->to_string() + "\"" : "null";
  out += '}';
  return out;
}

GrossNumber from_json(std::string_view json) {
  const nlohmann::json doc = nlohmann::json::parse(json);
  std::vector<GrossNumber::Term> raw;
  for (const auto& t : doc.at("terms")) {
    const double digit = t.at("digit").get<double>();
    if (!std::isfinite(digit)) throw InvalidDigit("non-finite digit in JSON");
    raw.push_back({Rational::parse(t.at("power").get<std::string>()), digit});
  }
  std::optional<GrossPower> floor;
  if (doc.contains("floor") && !doc.at("floor").is_null())
    floor = Rational::parse(doc.at("floor").get<std::string>());
  return GrossNumber::normalized(std::move(raw), floor);
}

}  // namespace grossone
