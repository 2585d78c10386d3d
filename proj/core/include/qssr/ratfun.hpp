#pragma once

#include <map>
#include <string>

#include "qssr/polynomial.hpp"

namespace qssr {

/// Quotient of two polynomials with nonzero denominator. Equality is decided
/// by cross-multiplication, so simplification stays best-effort: rational
/// content is always removed (denominator integer-primitive with positive
/// leading coefficient) and polynomial gcd cancellation runs only while both
/// total degrees stay small.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);
  static RationalFunction constant(SymTab table, const Rat& value);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const SymTab& table() const { return num_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;
  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator/(const RationalFunction& other) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// p/q == r/s decided exactly as p*s - r*q == 0.
  bool equals(const RationalFunction& other) const;

  Rat evaluate(const std::vector<Rat>& point) const;  // throws on zero denominator

  RationalFunction substitute(int var, const RationalFunction& value) const;
  RationalFunction substitute_many(const std::map<int, RationalFunction>& values) const;
  RationalFunction substitute_rationals(const std::map<int, Rat>& values) const;
  RationalFunction lifted(const SymTab& bigger) const;

  RationalFunction derivative(int var) const;

  std::string to_string() const;

  static constexpr int kGcdDegreeCap = 8;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Substitutes rational functions for variables of a polynomial.
RationalFunction substitute_rf(const Polynomial& p, const std::map<int, RationalFunction>& values);

}  // namespace qssr
