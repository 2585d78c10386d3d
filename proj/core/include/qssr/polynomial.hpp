#pragma once

#include <map>
#include <string>
#include <vector>

#include "qssr/rational.hpp"
#include "qssr/symbols.hpp"

namespace qssr {

/// Exponent vector; always the length of the owning symbol table.
using Mono = std::vector<int>;

int mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires divisibility
Mono mono_lcm(const Mono& a, const Mono& b);

/// Graded reverse lexicographic comparison over the table order.
/// Returns >0 when a > b, 0 on equality, <0 otherwise.
int grevlex_cmp(const Mono& a, const Mono& b);

struct Term {
  Mono exp;
  Rat coeff;
};

/// Sparse exact multivariate polynomial over a shared symbol table.
/// Terms are kept grevlex-descending with nonzero coefficients, so equal
/// polynomials have identical term lists and identical printed text.
class Polynomial {
 public:
  Polynomial() = default;  // zero over no table; assignable placeholder
  explicit Polynomial(SymTab table) : table_(std::move(table)) {}

  static Polynomial constant(SymTab table, const Rat& value);
  static Polynomial variable(SymTab table, int index, int power = 1);
  static Polynomial from_terms(SymTab table, std::vector<Term> terms);

  const SymTab& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].exp) == 0); }
  Rat constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  int degree_in_set(const std::vector<int>& vars) const;
  bool depends_on(int var) const;
  std::vector<int> support() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial operator*(const Rat& scalar) const;
  Polynomial operator/(const Rat& scalar) const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(int var) const;

  /// Exact evaluation; point assigns every table entry.
  Rat evaluate(const std::vector<Rat>& point) const;

  Polynomial substitute(int var, const Polynomial& value) const;
  Polynomial substitute_many(const std::map<int, Polynomial>& values) const;
  Polynomial substitute_rationals(const std::map<int, Rat>& values) const;

  /// Rewrites onto an extending table (exponents padded with zeros).
  Polynomial lifted(const SymTab& bigger) const;
  /// Rewrites onto a prefix table; every dropped variable must be absent.
  Polynomial projected(const SymTab& smaller) const;

  /// Groups terms by their exponents in `vars`; keys are exponent tuples in
  /// the order given, values are the coefficient polynomials (free of vars).
  std::map<std::vector<int>, Polynomial> collect_on(const std::vector<int>& vars) const;

  /// Rational content: c such that (*this)/c has coprime integer
  /// coefficients with positive leading coefficient. Zero for zero.
  Rat content() const;
  Polynomial primitive_part() const;

  const Term& leading_term() const;  // grevlex leading term

  std::string to_string() const;

 private:
  void normalize();

  SymTab table_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rat& scalar, const Polynomial& p);

/// Exact polynomial division: returns q with p == q * d when d divides p.
/// Division is attempted with the grevlex division algorithm; a nonzero
/// remainder reports failure.
bool exact_divide(const Polynomial& p, const Polynomial& d, Polynomial* quotient);

/// Multivariate gcd via primitive PRS, capped for use as a best-effort
/// simplifier (returns 1 when the cap is exceeded). The result is
/// integer-primitive with positive leading coefficient.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, int total_degree_cap = -1);

}  // namespace qssr
