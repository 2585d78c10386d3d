#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace qssr {

/// Exact arbitrary-precision rational. All symbolic computation in this
/// library runs over these; floating point only appears in the numeric
/// simulation layer.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
std::optional<Rat> try_parse_rational(const std::string& text);

/// Like try_parse_rational but throws std::invalid_argument on bad input.
Rat parse_rational(const std::string& text);

std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

Rat rat_pow(const Rat& base, unsigned exponent);

}  // namespace qssr
