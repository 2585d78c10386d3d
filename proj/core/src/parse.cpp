#include "qssr/parse.hpp"

#include <cctype>

namespace qssr {

namespace {

class PolyParser {
 public:
  PolyParser(const SymTab& table, const std::string& text, int line)
      : table_(table), text_(text), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    Polynomial p = term();
    if (negative) p = -p;
    while (true) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected integer exponent after '^'");
      unsigned e = static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {  // unary minus on an atom, e.g. 2*-x is rejected but (-x) works
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Int num(text_.substr(start, pos_ - start));
    Int den(1);
    // a '/' directly followed by digits is a rational literal
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      den = Int(text_.substr(dstart, pos_ - dstart));
      if (den == 0) fail("zero denominator in rational literal");
    }
    return Polynomial::constant(table_, Rat(num, den));
  }

  Polynomial symbol() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    int index = table_->index_of(name);
    if (index < 0) {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    return Polynomial::variable(table_, index);
  }

  const SymTab& table_;
  const std::string& text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const SymTab& table, const std::string& text, int line) {
  return PolyParser(table, text, line).parse();
}

}  // namespace qssr
