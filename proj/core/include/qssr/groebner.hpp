#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qssr/polynomial.hpp"

namespace qssr {

/// Total order on monomials compatible with multiplication. Block orders put
/// every monomial containing a first-block (eliminated) variable above any
/// monomial free of them, which is what makes elimination ideals drop out of
/// a Groebner basis.
struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };

  Kind kind = Kind::Grevlex;
  std::vector<std::uint8_t> first_block;  // Block only; 1 marks an eliminated variable

  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }
  static MonomialOrder block_elimination(int table_size, const std::vector<int>& eliminated);

  /// >0 when a > b, 0 when equal, <0 otherwise.
  int cmp(const Mono& a, const Mono& b) const;
  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
};

struct GbConfig {
  std::uint64_t max_steps = 1'000'000;  // individual reduction steps
  double max_seconds = 120.0;
};

enum class GbStatus { Ok, Infeasible };

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // reduced: monic, pairwise irreducible, sorted
  MonomialOrder order;
  bool reduced = true;
};

struct GbResult {
  GbStatus status = GbStatus::Ok;
  GroebnerBasis basis;
  std::uint64_t steps = 0;
  std::string note;
};

/// Buchberger with Gebauer-Moeller pair elimination and sugar-degree
/// selection. Exceeding the budget is an outcome (`Infeasible`), not a crash;
/// the partial basis is returned for diagnostics.
GbResult groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                  const GbConfig& config = {});

/// Remainder of the division of p by the basis; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

/// Rabinowitsch test: p vanishes on the complex variety of <gens> iff
/// 1 lies in <gens, 1 - t*p> for a fresh t. Throws InfeasibleError on budget
/// exhaustion.
bool radical_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                        const GbConfig& config = {});

struct EliminateResult {
  GbStatus status = GbStatus::Ok;
  std::vector<Polynomial> generators;
  std::uint64_t steps = 0;
};

/// Generators of <gens> intersected with the subring on `keep`.
EliminateResult eliminate(const std::vector<Polynomial>& gens, const std::vector<int>& keep,
                          const GbConfig& config = {});

/// Saturation <gens> : g^inf via elimination of the Rabinowitsch variable.
EliminateResult saturate(const std::vector<Polynomial>& gens, const Polynomial& g,
                         const GbConfig& config = {});

/// Intersection of two ideals over one table (t-trick).
EliminateResult ideal_intersection(const std::vector<Polynomial>& a,
                                   const std::vector<Polynomial>& b, const GbConfig& config = {});

}  // namespace qssr
