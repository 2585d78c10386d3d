#include "qssr/ratfun.hpp"

#include <stdexcept>

namespace qssr {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.table(), Rat(1))) {}

RationalFunction RationalFunction::constant(SymTab table, const Rat& value) {
  return RationalFunction(Polynomial::constant(std::move(table), value));
}

bool RationalFunction::is_polynomial() const {
  return den_.is_constant() && den_.constant_value() == 1;
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(den_.table(), Rat(1));
    return;
  }
  if (num_.total_degree() <= kGcdDegreeCap && den_.total_degree() <= kGcdDegreeCap) {
    Polynomial g = poly_gcd(num_, den_, kGcdDegreeCap);
    if (!g.is_constant()) {
      Polynomial qn, qd;
      if (exact_divide(num_, g, &qn) && exact_divide(den_, g, &qd)) {
        num_ = qn;
        den_ = qd;
      }
    }
  }
  Rat c = den_.content();
  den_ = den_ / c;
  num_ = num_ / c;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (den_ == other.den_) return RationalFunction(num_ + other.num_, den_);
  return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
  return *this + (-other);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  if (other.is_zero()) throw std::invalid_argument("division by zero rational function");
  return RationalFunction(num_ * other.den_, den_ * other.num_);
}

bool RationalFunction::equals(const RationalFunction& other) const {
  return (num_ * other.den_ - other.num_ * den_).is_zero();
}

Rat RationalFunction::evaluate(const std::vector<Rat>& point) const {
  Rat d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::substitute(int var, const RationalFunction& value) const {
  std::map<int, RationalFunction> m;
  m.emplace(var, value);
  return substitute_many(m);
}

RationalFunction RationalFunction::substitute_many(const std::map<int, RationalFunction>& values) const {
  RationalFunction n = substitute_rf(num_, values);
  RationalFunction d = substitute_rf(den_, values);
  return n / d;
}

RationalFunction RationalFunction::substitute_rationals(const std::map<int, Rat>& values) const {
  std::map<int, Rat> m = values;
  Polynomial n = num_.substitute_rationals(m);
  Polynomial d = den_.substitute_rationals(m);
  if (d.is_zero()) throw std::domain_error("denominator vanishes under substitution");
  return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::lifted(const SymTab& bigger) const {
  RationalFunction out = *this;
  out.num_ = out.num_.lifted(bigger);
  out.den_ = out.den_.lifted(bigger);
  return out;
}

RationalFunction RationalFunction::derivative(int var) const {
  // (n/d)' = (n'd - nd')/d^2
  Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(std::move(n), den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction substitute_rf(const Polynomial& p, const std::map<int, RationalFunction>& values) {
  RationalFunction out{Polynomial(p.table())};
  for (const auto& t : p.terms()) {
    Term base = t;
    RationalFunction factor = RationalFunction::constant(p.table(), Rat(1));
    for (const auto& [var, value] : values) {
      int e = base.exp[var];
      if (e == 0) continue;
      base.exp[var] = 0;
      for (int k = 0; k < e; ++k) factor *= value;
    }
    out += factor * RationalFunction(Polynomial::from_terms(p.table(), {base}));
  }
  return out;
}

}  // namespace qssr
