#pragma once

#include <stdexcept>
#include <string>

#include "qssr/polynomial.hpp"

namespace qssr {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses the canonical polynomial text form: rational literals, symbols from
/// `table`, explicit '*', '^' powers, parentheses and +/-. `line` seeds error
/// locations when the text comes from a larger file.
Polynomial parse_polynomial(const SymTab& table, const std::string& text, int line = 1);

}  // namespace qssr
