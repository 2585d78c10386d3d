#include <cassert>
#include <iostream>

#include "qssr/groebner.hpp"
#include "qssr/matrix.hpp"
#include "qssr/parse.hpp"
#include "qssr/ratfun.hpp"
#include "qssr/series.hpp"

using namespace qssr;

int main() {
  auto tb = std::make_shared<SymbolTable>();
  tb->add("s", SymbolKind::State);
  tb->add("c", SymbolKind::State);
  tb->add("e0", SymbolKind::Parameter);
  tb->add("k1", SymbolKind::Parameter);
  tb->add("km1", SymbolKind::Parameter);
  tb->add("k2", SymbolKind::Parameter);
  SymTab table = tb;

  Polynomial h1 = parse_polynomial(table, "-k1*e0*s + (k1*s + km1)*c");
  Polynomial h2 = parse_polynomial(table, "k1*e0*s - (k1*s + km1 + k2)*c");
  assert(parse_polynomial(table, h1.to_string()) == h1);
  assert((h1 + h2).to_string() == "-k2*c");

  OdeSystem mm(table, {0, 1}, {h1, h2});
  Polynomial lc = lie_derivative(Polynomial::variable(table, 1), mm);
  assert(lc == h2);

  // d/ds of k1*e0*s
  Polynomial p = parse_polynomial(table, "k1*e0*s");
  assert(p.derivative(0) == parse_polynomial(table, "k1*e0"));

  // 1x1 inverse
  RfMatrix d2 = jacobian({h2}, {1});
  RfMatrix inv = d2.inverse();
  assert((inv * d2 - RfMatrix::identity(1, table)).is_zero());

  // groebner: {x^2, x*y} over lex stays put
  auto t2 = std::make_shared<SymbolTable>();
  t2->add("x", SymbolKind::State);
  t2->add("y", SymbolKind::State);
  SymTab tab2 = t2;
  Polynomial x2 = parse_polynomial(tab2, "x^2");
  Polynomial xy = parse_polynomial(tab2, "x*y");
  GbResult gb = groebner({x2, xy}, MonomialOrder::lex());
  assert(gb.status == GbStatus::Ok);
  assert(gb.basis.generators.size() == 2);

  // radical: x in sqrt(x^2), y not in sqrt(x)
  Polynomial x = parse_polynomial(tab2, "x");
  Polynomial y = parse_polynomial(tab2, "y");
  assert(radical_membership(x, {x2}));
  assert(!radical_membership(y, {x}));

  // epsilon expansion of MM in the e0 direction at e0 = 0
  EpsilonSeries es = epsilon_expand(mm, {{2, Rat(0)}}, {{2, Rat(1)}}, 1);
  assert(es.h0()[0] == parse_polynomial(table, "(k1*s + km1)*c"));
  assert(es.h1()[0] == parse_polynomial(table, "-k1*s"));
  assert(!es.truncated);

  std::cout << "smoke ok\n";
  return 0;
}
