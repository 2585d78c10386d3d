#include "qssr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qssr {

std::optional<Rat> try_parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return std::nullopt;
  Int num(text.substr(num_begin, pos - num_begin));
  Int den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) return std::nullopt;
    den = Int(text.substr(den_begin));
    if (den == 0) return std::nullopt;
  }
  if (negative) num = -num;
  // The (num, den) constructor canonicalizes; string construction would not.
  return Rat(num, den);
}

Rat parse_rational(const std::string& text) {
  auto value = try_parse_rational(text);
  if (!value) throw std::invalid_argument("not a rational literal: '" + text + "'");
  return *value;
}

std::string rat_to_string(const Rat& value) { return value.str(); }

double rat_to_double(const Rat& value) { return value.convert_to<double>(); }

Rat rat_pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

}  // namespace qssr
