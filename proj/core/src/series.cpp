#include "qssr/series.hpp"

#include <stdexcept>

namespace qssr {

EpsilonSeries epsilon_expand(const OdeSystem& odes, const ParamAssignment& pstar,
                             const ParamAssignment& rho, int order) {
  if (order < 1) throw std::invalid_argument("epsilon expansion order must be at least 1");
  const SymTab& base = odes.table();
  for (const auto& kv : pstar)
    if (base->kind(kv.first) != SymbolKind::Parameter)
      throw std::invalid_argument("expansion point entry is not a parameter");
  for (const auto& kv : rho)
    if (base->kind(kv.first) != SymbolKind::Parameter)
      throw std::invalid_argument("direction entry is not a parameter");

  SymTab ext = extend_table(base, "_eps", SymbolKind::Auxiliary);
  int eps = ext->size() - 1;
  Polynomial eps_var = Polynomial::variable(ext, eps);

  std::map<int, Polynomial> subst;
  auto touched = [&](int v) { return pstar.count(v) || rho.count(v); };
  for (int v = 0; v < base->size(); ++v) {
    if (base->kind(v) != SymbolKind::Parameter || !touched(v)) continue;
    Polynomial value = pstar.count(v) ? Polynomial::constant(ext, pstar.at(v))
                                      : Polynomial::variable(ext, v);
    if (rho.count(v) && rho.at(v) != 0)
      value += eps_var * Polynomial::constant(ext, rho.at(v));
    subst.emplace(v, std::move(value));
  }

  EpsilonSeries series;
  series.table = base;
  series.order = order;
  series.coeffs.assign(static_cast<std::size_t>(order) + 1,
                       std::vector<Polynomial>(odes.field().size(), Polynomial(base)));
  for (std::size_t i = 0; i < odes.field().size(); ++i) {
    Polynomial expanded = odes.field()[i].lifted(ext).substitute_many(subst);
    for (auto& [key, coeff] : expanded.collect_on({eps})) {
      int power = key[0];
      if (power > order) {
        series.truncated = true;
        continue;
      }
      series.coeffs[static_cast<std::size_t>(power)][i] = coeff.projected(base);
    }
  }
  return series;
}

OdeSystem series_layer_system(const OdeSystem& odes, const EpsilonSeries& series, int power) {
  return OdeSystem(odes.table(), odes.states(), series.coeffs.at(static_cast<std::size_t>(power)));
}

}  // namespace qssr
