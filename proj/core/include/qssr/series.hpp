#pragma once

#include "qssr/ode_system.hpp"

namespace qssr {

/// Power-series collection of h(x, pi* + eps*rho) in eps. Coefficients live
/// over the base table; reconstruction is exact whenever `truncated` is false.
struct EpsilonSeries {
  SymTab table;
  int order = 0;
  bool truncated = false;
  std::vector<std::vector<Polynomial>> coeffs;  // [eps power][state component]

  const std::vector<Polynomial>& h0() const { return coeffs.at(0); }
  const std::vector<Polynomial>& h1() const { return coeffs.at(1); }
};

/// Substitutes pi = pi* + eps*rho and collects by powers of eps. Parameters
/// absent from both maps stay symbolic; entries must name parameters.
EpsilonSeries epsilon_expand(const OdeSystem& odes, const ParamAssignment& pstar,
                             const ParamAssignment& rho, int order);

/// OdeSystem whose field is one coefficient layer (handy for reusing the
/// reduction machinery on h0).
OdeSystem series_layer_system(const OdeSystem& odes, const EpsilonSeries& series, int power);

}  // namespace qssr
