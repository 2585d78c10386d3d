#include "qssr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qssr {

int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

int grevlex_cmp(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // larger in the last slot loses
  }
  return 0;
}

static void check_same_table(const SymTab& a, const SymTab& b) {
  if (a && b && a != b && !(a->size() == b->size() && a->is_prefix_of(*b)))
    throw std::invalid_argument("polynomials over different symbol tables");
}

Polynomial Polynomial::constant(SymTab table, const Rat& value) {
  Polynomial p(std::move(table));
  if (value != 0) p.terms_.push_back({Mono(p.table_->size(), 0), value});
  return p;
}

Polynomial Polynomial::variable(SymTab table, int index, int power) {
  if (index < 0 || index >= table->size()) throw std::invalid_argument("variable index out of range");
  Polynomial p(std::move(table));
  Mono m(p.table_->size(), 0);
  m[index] = power;
  if (power != 0)
    p.terms_.push_back({std::move(m), Rat(1)});
  else
    p.terms_.push_back({std::move(m), Rat(1)});
  return p;
}

Polynomial Polynomial::from_terms(SymTab table, std::vector<Term> terms) {
  Polynomial p(std::move(table));
  for (auto& t : terms)
    if (static_cast<int>(t.exp.size()) != p.table_->size())
      throw std::invalid_argument("term exponent vector of wrong length");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.exp, b.exp) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_[0].coeff;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.exp));
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

int Polynomial::degree_in_set(const std::vector<int>& vars) const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int v : vars) s += t.exp[v];
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::depends_on(int var) const {
  for (const auto& t : terms_)
    if (t.exp[var] != 0) return true;
  return false;
}

std::vector<int> Polynomial::support() const {
  std::vector<int> out;
  if (!table_) return out;
  for (int v = 0; v < table_->size(); ++v)
    if (depends_on(v)) out.push_back(v);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_table(table_, other.table_);
  Polynomial out(table_ ? table_ : other.table_);
  // merge of two grevlex-descending term lists
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = grevlex_cmp(terms_[i].exp, other.terms_[j].exp);
    if (c > 0)
      out.terms_.push_back(terms_[i++]);
    else if (c < 0)
      out.terms_.push_back(other.terms_[j++]);
    else {
      Rat s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) out.terms_.push_back({terms_[i].exp, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_table(table_, other.table_);
  Polynomial out(table_ ? table_ : other.table_);
  if (terms_.empty() || other.terms_.empty()) return out;
  std::map<Mono, Rat> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[mono_mul(a.exp, b.exp)] += a.coeff * b.coeff;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.exp, b.exp) > 0; });
  return out;
}

Polynomial Polynomial::operator*(const Rat& scalar) const {
  if (scalar == 0) return Polynomial(table_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= scalar;
  return p;
}

Polynomial Polynomial::operator/(const Rat& scalar) const {
  if (scalar == 0) throw std::invalid_argument("division by zero scalar");
  return *this * (Rat(1) / scalar);
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != other.terms_[i].exp || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = Polynomial::constant(table_, Rat(1));
  Polynomial base = *this;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  if (!table_ || var < 0 || var >= table_->size()) throw std::invalid_argument("unknown indeterminate");
  Polynomial out(table_);
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d = t;
    d.coeff *= t.exp[var];
    d.exp[var] -= 1;
    out.terms_.push_back(std::move(d));
  }
  // differentiation preserves grevlex order between surviving terms? Not in
  // general across degrees, so re-normalize.
  out.normalize();
  return out;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (table_ && static_cast<int>(point.size()) != table_->size())
    throw std::invalid_argument("evaluation point of wrong length");
  Rat total(0);
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] != 0) v *= rat_pow(point[i], static_cast<unsigned>(t.exp[i]));
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  std::map<int, Polynomial> m;
  m.emplace(var, value);
  return substitute_many(m);
}

Polynomial Polynomial::substitute_many(const std::map<int, Polynomial>& values) const {
  if (values.empty() || !table_) return *this;
  Polynomial out(table_);
  for (const auto& t : terms_) {
    Term base = t;
    Polynomial factor = Polynomial::constant(table_, Rat(1));
    bool touched = false;
    for (const auto& [var, value] : values) {
      int e = base.exp[var];
      if (e == 0) continue;
      base.exp[var] = 0;
      factor *= value.pow(static_cast<unsigned>(e));
      touched = true;
    }
    Polynomial piece = Polynomial::from_terms(table_, {base});
    out += touched ? piece * factor : piece;
  }
  return out;
}

Polynomial Polynomial::substitute_rationals(const std::map<int, Rat>& values) const {
  std::map<int, Polynomial> m;
  for (const auto& [var, value] : values) m.emplace(var, Polynomial::constant(table_, value));
  return substitute_many(m);
}

Polynomial Polynomial::lifted(const SymTab& bigger) const {
  if (!table_) return Polynomial(bigger);
  if (table_ == bigger) return *this;
  if (!table_->is_prefix_of(*bigger)) throw std::invalid_argument("lift target does not extend table");
  Polynomial out(bigger);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.exp.resize(bigger->size(), 0);
  return out;
}

Polynomial Polynomial::projected(const SymTab& smaller) const {
  if (!table_) return Polynomial(smaller);
  if (!smaller->is_prefix_of(*table_)) throw std::invalid_argument("projection target is not a prefix");
  Polynomial out(smaller);
  out.terms_ = terms_;
  for (auto& t : out.terms_) {
    for (int i = smaller->size(); i < table_->size(); ++i)
      if (t.exp[i] != 0) throw std::invalid_argument("projection would drop a used variable");
    t.exp.resize(smaller->size());
  }
  return out;
}

std::map<std::vector<int>, Polynomial> Polynomial::collect_on(const std::vector<int>& vars) const {
  std::map<std::vector<int>, Polynomial> out;
  for (const auto& t : terms_) {
    std::vector<int> key(vars.size());
    Term rest = t;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      key[k] = t.exp[vars[k]];
      rest.exp[vars[k]] = 0;
    }
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, Polynomial(table_)).first;
    it->second += Polynomial::from_terms(table_, {rest});
  }
  return out;
}

Rat Polynomial::content() const {
  if (terms_.empty()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(t.coeff)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(t.coeff));
  }
  Rat c(num_gcd, den_lcm);
  if (terms_[0].coeff < 0) c = -c;  // positive leading coefficient convention
  return c;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  return *this / content();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_[0];
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rat mag = negative ? Rat(-t.coeff) : t.coeff;
    std::string piece;
    bool has_vars = mono_degree(t.exp) > 0;
    if (!has_vars || mag != 1) piece = rat_to_string(mag);
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!piece.empty()) piece += "*";
      piece += table_->name(static_cast<int>(i));
      if (t.exp[i] > 1) piece += "^" + std::to_string(t.exp[i]);
    }
    if (first) {
      out += negative ? "-" + piece : piece;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

Polynomial operator*(const Rat& scalar, const Polynomial& p) { return p * scalar; }

bool exact_divide(const Polynomial& p, const Polynomial& d, Polynomial* quotient) {
  if (d.is_zero()) return false;
  Polynomial q(p.table() ? p.table() : d.table());
  Polynomial r = p;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    const Term& ld = d.leading_term();
    if (!mono_divides(ld.exp, lr.exp)) return false;
    Polynomial t = Polynomial::from_terms(r.table(), {{mono_div(lr.exp, ld.exp), lr.coeff / ld.coeff}});
    q += t;
    r -= t * d;
  }
  if (quotient) *quotient = q;
  return true;
}

namespace {

// Univariate view in `var`: degree -> polynomial coefficient.
std::map<int, Polynomial> coeffs_in(const Polynomial& p, int var) {
  std::map<int, Polynomial> out;
  auto grouped = p.collect_on({var});
  for (auto& [key, coeff] : grouped) out.emplace(key[0], std::move(coeff));
  return out;
}

Polynomial lead_coeff_in(const Polynomial& p, int var, int* degree) {
  auto cs = coeffs_in(p, var);
  *degree = cs.rbegin()->first;
  return cs.rbegin()->second;
}

Polynomial from_var_coeffs(const SymTab& table, int var, const std::map<int, Polynomial>& cs) {
  Polynomial out(table);
  for (const auto& [deg, coeff] : cs) out += coeff * Polynomial::variable(table, var, deg);
  return out;
}

// Pseudo-remainder of f by g in `var`.
Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, int var) {
  int dg = 0;
  Polynomial lcg = lead_coeff_in(g, var, &dg);
  Polynomial r = f;
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < dg) break;
    int d0 = 0;
    Polynomial lcr = lead_coeff_in(r, var, &d0);
    Polynomial shift = Polynomial::variable(r.table(), var, dr - dg);
    r = r * lcg - g * lcr * shift;
  }
  return r;
}

Polynomial content_in(const Polynomial& p, int var, int cap);

Polynomial gcd_inner(Polynomial a, Polynomial b, int cap) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  auto one = Polynomial::constant(a.table(), Rat(1));
  if (a.is_constant() || b.is_constant()) return one;
  if (cap >= 0 && (a.total_degree() > cap || b.total_degree() > cap ||
                   a.terms().size() > 400 || b.terms().size() > 400))
    return one;
  // main variable: highest index occurring in both
  int var = -1;
  for (int v = a.table()->size(); v-- > 0;) {
    if (a.depends_on(v) && b.depends_on(v)) {
      var = v;
      break;
    }
  }
  if (var < 0) return one;
  Polynomial ca = content_in(a, var, cap);
  Polynomial cb = content_in(b, var, cap);
  Polynomial pa, pb;
  if (!exact_divide(a, ca, &pa) || !exact_divide(b, cb, &pb)) return one;
  Polynomial c = gcd_inner(ca, cb, cap);
  Polynomial r0 = pa.degree_in(var) >= pb.degree_in(var) ? pa : pb;
  Polynomial r1 = pa.degree_in(var) >= pb.degree_in(var) ? pb : pa;
  while (true) {
    Polynomial r = pseudo_rem(r0, r1, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return c;  // gcd free of var beyond content
    Polynomial cr = content_in(r, var, cap);
    Polynomial pr;
    if (!exact_divide(r, cr, &pr)) return one;
    r0 = r1;
    r1 = pr;
    if (cap >= 0 && r1.terms().size() > 800) return one;
  }
  Polynomial g1;
  Polynomial cg = content_in(r1, var, cap);
  if (!exact_divide(r1, cg, &g1)) return one;
  return (c * g1).primitive_part();
}

Polynomial content_in(const Polynomial& p, int var, int cap) {
  Polynomial g(p.table());
  for (auto& [deg, coeff] : coeffs_in(p, var)) {
    g = gcd_inner(g, coeff, cap);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g.is_zero() ? Polynomial::constant(p.table(), Rat(1)) : g;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, int total_degree_cap) {
  if (a.is_zero() && b.is_zero()) return a;
  Polynomial g = gcd_inner(a.primitive_part(), b.primitive_part(), total_degree_cap);
  return g.primitive_part();
}

}  // namespace qssr
