#include "qssr/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "qssr/errors.hpp"

namespace qssr {

MonomialOrder MonomialOrder::block_elimination(int table_size, const std::vector<int>& eliminated) {
  MonomialOrder order;
  order.kind = Kind::Block;
  order.first_block.assign(static_cast<std::size_t>(table_size), 0);
  for (int v : eliminated) order.first_block.at(static_cast<std::size_t>(v)) = 1;
  return order;
}

namespace {

int lex_cmp(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int grevlex_cmp_masked(const Mono& a, const Mono& b, const std::vector<std::uint8_t>& mask,
                       std::uint8_t which) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask[i] == which) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (mask[i] != which) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
  switch (kind) {
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::Grevlex:
      return grevlex_cmp(a, b);
    case Kind::Block: {
      int c = grevlex_cmp_masked(a, b, first_block, 1);
      if (c != 0) return c;
      return grevlex_cmp_masked(a, b, first_block, 0);
    }
  }
  return 0;
}

namespace {

struct GTerm {
  Mono m;
  Rat c;
};

struct GPoly {
  std::vector<GTerm> t;  // descending in the engine order
  int sugar = 0;
};

struct Budget {
  std::uint64_t max_steps;
  double max_seconds;
  std::uint64_t steps = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool exceeded = false;

  bool tick() {
    if (exceeded) return false;
    ++steps;
    if (steps > max_steps) exceeded = true;
    if ((steps & 0xff) == 0) {
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed > max_seconds) exceeded = true;
    }
    return !exceeded;
  }
};

GPoly to_gpoly(const Polynomial& p, const MonomialOrder& order) {
  GPoly g;
  g.t.reserve(p.terms().size());
  for (const auto& t : p.terms()) g.t.push_back({t.exp, t.coeff});
  std::sort(g.t.begin(), g.t.end(),
            [&](const GTerm& a, const GTerm& b) { return order.cmp(a.m, b.m) > 0; });
  g.sugar = p.total_degree();
  return g;
}

Polynomial from_gpoly(const SymTab& table, const GPoly& g) {
  std::vector<Term> terms;
  terms.reserve(g.t.size());
  for (const auto& t : g.t) terms.push_back({t.m, t.c});
  return Polynomial::from_terms(table, std::move(terms));
}

void make_primitive(GPoly& p) {
  if (p.t.empty()) return;
  Int num_gcd(0), den_lcm(1);
  for (const auto& t : p.t) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(t.c)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(t.c));
  }
  Rat content(num_gcd, den_lcm);
  if (p.t.front().c < 0) content = -content;
  if (content == 1) return;
  for (auto& t : p.t) t.c /= content;
}

// p -= c * x^shift * g, keeping the engine order.
void sub_mul(GPoly& p, const Rat& c, const Mono& shift, const GPoly& g, const MonomialOrder& order) {
  std::vector<GTerm> out;
  out.reserve(p.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < p.t.size() && j < g.t.size()) {
    Mono gm = mono_mul(g.t[j].m, shift);
    int cv = order.cmp(p.t[i].m, gm);
    if (cv > 0)
      out.push_back(p.t[i++]);
    else if (cv < 0) {
      out.push_back({std::move(gm), -c * g.t[j].c});
      ++j;
    } else {
      Rat s = p.t[i].c - c * g.t[j].c;
      if (s != 0) out.push_back({p.t[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < p.t.size(); ++i) out.push_back(p.t[i]);
  for (; j < g.t.size(); ++j) out.push_back({mono_mul(g.t[j].m, shift), -c * g.t[j].c});
  p.t = std::move(out);
}

// Full normal form against the (live) basis elements. Deterministic reducer
// choice: first live generator whose leading monomial divides.
GPoly reduce_full(GPoly p, const std::vector<GPoly>& basis, const std::vector<char>& live,
                  const MonomialOrder& order, Budget* budget) {
  GPoly result;
  result.sugar = p.sugar;
  while (!p.t.empty()) {
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!live[k]) continue;
      const GPoly& g = basis[k];
      if (!mono_divides(g.t.front().m, p.t.front().m)) continue;
      if (!budget->tick()) return result;  // partial; caller checks budget
      Mono shift = mono_div(p.t.front().m, g.t.front().m);
      Rat c = p.t.front().c / g.t.front().c;
      int shifted_sugar = g.sugar + mono_degree(shift);
      p.sugar = std::max(p.sugar, shifted_sugar);
      sub_mul(p, c, shift, g, order);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.t.push_back(p.t.front());
      p.t.erase(p.t.begin());
    }
  }
  result.sugar = std::max(result.sugar, p.sugar);
  return result;
}

struct Pair {
  int i, j;
  Mono lcm;
  int sugar;
};

bool pair_less(const Pair& a, const Pair& b, const MonomialOrder& order) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = order.cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Gebauer-Moeller update: prune the candidate pairs with the new generator,
// apply the coprimality criterion, and drop superseded old pairs.
void update_pairs(std::vector<Pair>* pairs, const std::vector<GPoly>& basis,
                  const std::vector<char>& live, int h) {
  const Mono& lth = basis[h].t.front().m;
  std::vector<Pair> fresh;
  for (int i = 0; i < h; ++i) {
    if (!live[i]) continue;
    Pair p;
    p.i = i;
    p.j = h;
    p.lcm = mono_lcm(basis[i].t.front().m, lth);
    int deg_lcm = mono_degree(p.lcm);
    p.sugar = std::max(basis[i].sugar + deg_lcm - mono_degree(basis[i].t.front().m),
                       basis[h].sugar + deg_lcm - mono_degree(lth));
    fresh.push_back(std::move(p));
  }
  // B criterion on old pairs
  std::vector<Pair> kept_old;
  kept_old.reserve(pairs->size());
  for (auto& p : *pairs) {
    bool drop = mono_divides(lth, p.lcm) &&
                mono_lcm(basis[p.i].t.front().m, lth) != p.lcm &&
                mono_lcm(basis[p.j].t.front().m, lth) != p.lcm;
    if (!drop) kept_old.push_back(std::move(p));
  }
  // M criterion: keep only minimal lcms among the fresh pairs
  std::vector<char> keep(fresh.size(), 1);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[a] || !keep[b]) continue;
      if (fresh[b].lcm != fresh[a].lcm && mono_divides(fresh[b].lcm, fresh[a].lcm)) keep[a] = 0;
    }
  // F criterion: among equal lcms keep one representative
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = a + 1; b < fresh.size(); ++b)
      if (keep[a] && keep[b] && fresh[a].lcm == fresh[b].lcm) keep[b] = 0;
  // coprime criterion
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    const Mono& li = basis[fresh[a].i].t.front().m;
    if (mono_mul(li, lth) == fresh[a].lcm) keep[a] = 0;
  }
  *pairs = std::move(kept_old);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) pairs->push_back(std::move(fresh[a]));
}

GPoly s_polynomial(const GPoly& a, const GPoly& b, const Pair& pr, const MonomialOrder& order) {
  GPoly s = a;
  Mono shift_a = mono_div(pr.lcm, a.t.front().m);
  if (mono_degree(shift_a) != 0) {
    for (auto& t : s.t) t.m = mono_mul(t.m, shift_a);
  }
  Rat c = a.t.front().c / b.t.front().c;
  Mono shift_b = mono_div(pr.lcm, b.t.front().m);
  s.sugar = pr.sugar;
  sub_mul(s, c, shift_b, b, order);
  return s;
}

}  // namespace

GbResult groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                  const GbConfig& config) {
  if (gens.empty()) throw std::invalid_argument("groebner needs at least one generator");
  SymTab table = gens.front().table();
  for (const auto& g : gens)
    if (g.table() != table) throw std::invalid_argument("generators over different tables");
  if (order.kind == MonomialOrder::Kind::Block &&
      static_cast<int>(order.first_block.size()) != table->size())
    throw std::invalid_argument("block order mask has wrong length");

  Budget budget{config.max_steps, config.max_seconds};
  std::vector<GPoly> basis;
  std::vector<char> live;
  std::vector<Pair> pairs;

  auto add_generator = [&](GPoly g) {
    make_primitive(g);
    basis.push_back(std::move(g));
    live.push_back(1);
    int h = static_cast<int>(basis.size()) - 1;
    // house-keeping: retire older generators whose lead is now reducible
    for (int i = 0; i < h; ++i)
      if (live[i] && mono_divides(basis[h].t.front().m, basis[i].t.front().m)) live[i] = 0;
    update_pairs(&pairs, basis, live, h);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    GPoly gp = reduce_full(to_gpoly(g, order), basis, live, order, &budget);
    if (!gp.t.empty()) add_generator(std::move(gp));
  }
  if (basis.empty()) {
    // all generators were zero: the zero ideal's reduced basis is empty
    GbResult r;
    r.basis.order = order;
    return r;
  }

  while (!pairs.empty() && !budget.exceeded) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(pairs[k], pairs[best], order)) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (!live[pr.i] || !live[pr.j]) continue;
    GPoly s = s_polynomial(basis[pr.i], basis[pr.j], pr, order);
    GPoly r = reduce_full(std::move(s), basis, live, order, &budget);
    if (budget.exceeded) break;
    if (!r.t.empty()) add_generator(std::move(r));
  }

  GbResult result;
  result.steps = budget.steps;
  result.basis.order = order;
  if (budget.exceeded) {
    result.status = GbStatus::Infeasible;
    result.note = "budget exceeded after " + std::to_string(budget.steps) + " reduction steps";
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (live[k]) result.basis.generators.push_back(from_gpoly(table, basis[k]));
    result.basis.reduced = false;
    return result;
  }

  // Interreduce: minimal leads survive, then tail-reduce each against the rest.
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!live[k]) continue;
    for (std::size_t m = 0; m < basis.size(); ++m) {
      if (m == k || !live[m]) continue;
      if (mono_divides(basis[m].t.front().m, basis[k].t.front().m)) {
        live[k] = 0;
        break;
      }
    }
  }
  Budget final_budget{config.max_steps, config.max_seconds};
  std::vector<GPoly> reduced;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!live[k]) continue;
    std::vector<char> others = live;
    others[k] = 0;
    GPoly r = reduce_full(basis[k], basis, others, order, &final_budget);
    make_primitive(r);
    if (!r.t.empty()) reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const GPoly& a, const GPoly& b) { return order.cmp(a.t.front().m, b.t.front().m) < 0; });
  for (auto& g : reduced) {
    Rat lead = g.t.front().c;
    for (auto& t : g.t) t.c /= lead;  // monic generators
    result.basis.generators.push_back(from_gpoly(table, g));
  }
  result.basis.reduced = true;
  return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (basis.generators.empty()) return p;
  const MonomialOrder& order = basis.order;
  std::vector<GPoly> gb;
  std::vector<char> live;
  for (const auto& g : basis.generators) {
    gb.push_back(to_gpoly(g, order));
    live.push_back(1);
  }
  Budget budget{std::numeric_limits<std::uint64_t>::max(), 1e18};
  GPoly r = reduce_full(to_gpoly(p, order), gb, live, order, &budget);
  return from_gpoly(p.table(), r);
}

namespace {

bool basis_is_unit_ideal(const GroebnerBasis& basis) {
  for (const auto& g : basis.generators)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

}  // namespace

bool radical_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                        const GbConfig& config) {
  if (gens.empty()) throw std::invalid_argument("radical membership needs generators");
  if (p.is_zero()) return true;
  SymTab base = gens.front().table();
  std::string tname;
  SymTab ext = extend_table(base, "_rab_t", SymbolKind::Auxiliary, &tname);
  int t = ext->size() - 1;
  std::vector<Polynomial> work;
  for (const auto& g : gens) work.push_back(g.lifted(ext));
  work.push_back(Polynomial::constant(ext, Rat(1)) -
                 Polynomial::variable(ext, t) * p.lifted(ext));
  GbResult r = groebner(work, MonomialOrder::grevlex(), config);
  if (r.status == GbStatus::Infeasible)
    throw InfeasibleError("radical membership: " + r.note);
  return basis_is_unit_ideal(r.basis);
}

EliminateResult eliminate(const std::vector<Polynomial>& gens, const std::vector<int>& keep,
                          const GbConfig& config) {
  if (gens.empty()) throw std::invalid_argument("eliminate needs generators");
  SymTab table = gens.front().table();
  std::vector<char> kept(table->size(), 0);
  for (int v : keep) kept.at(static_cast<std::size_t>(v)) = 1;
  std::vector<int> eliminated;
  for (int v = 0; v < table->size(); ++v)
    if (!kept[v]) eliminated.push_back(v);
  EliminateResult out;
  if (eliminated.empty()) {
    GbResult r = groebner(gens, MonomialOrder::grevlex(), config);
    out.status = r.status;
    out.steps = r.steps;
    out.generators = r.basis.generators;
    return out;
  }
  MonomialOrder order = MonomialOrder::block_elimination(table->size(), eliminated);
  GbResult r = groebner(gens, order, config);
  out.status = r.status;
  out.steps = r.steps;
  if (r.status == GbStatus::Infeasible) return out;
  for (const auto& g : r.basis.generators) {
    bool clean = true;
    for (int v : eliminated)
      if (g.depends_on(v)) {
        clean = false;
        break;
      }
    if (clean) out.generators.push_back(g);
  }
  return out;
}

EliminateResult saturate(const std::vector<Polynomial>& gens, const Polynomial& g,
                         const GbConfig& config) {
  if (gens.empty()) throw std::invalid_argument("saturate needs generators");
  SymTab base = gens.front().table();
  SymTab ext = extend_table(base, "_sat_t", SymbolKind::Auxiliary);
  int t = ext->size() - 1;
  std::vector<Polynomial> work;
  for (const auto& f : gens) work.push_back(f.lifted(ext));
  work.push_back(Polynomial::constant(ext, Rat(1)) -
                 Polynomial::variable(ext, t) * g.lifted(ext));
  std::vector<int> keep;
  for (int v = 0; v < base->size(); ++v) keep.push_back(v);
  EliminateResult r = eliminate(work, keep, config);
  for (auto& p : r.generators) p = p.projected(base);
  return r;
}

EliminateResult ideal_intersection(const std::vector<Polynomial>& a,
                                   const std::vector<Polynomial>& b, const GbConfig& config) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ideal intersection needs generators");
  SymTab base = a.front().table();
  SymTab ext = extend_table(base, "_mix_t", SymbolKind::Auxiliary);
  int t = ext->size() - 1;
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, Rat(1)) - tv;
  std::vector<Polynomial> work;
  for (const auto& f : a) work.push_back(tv * f.lifted(ext));
  for (const auto& g : b) work.push_back(one_minus_t * g.lifted(ext));
  std::vector<int> keep;
  for (int v = 0; v < base->size(); ++v) keep.push_back(v);
  EliminateResult r = eliminate(work, keep, config);
  for (auto& p : r.generators) p = p.projected(base);
  return r;
}

}  // namespace qssr
