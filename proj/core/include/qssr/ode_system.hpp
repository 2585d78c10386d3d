#pragma once

#include <map>
#include <vector>

#include "qssr/polynomial.hpp"

namespace qssr {

/// Parameter assignment by table index; parameters absent from the map stay
/// symbolic (the "generic positive" entries of the examples).
using ParamAssignment = std::map<int, Rat>;
/// Parameter substitution allowing parameter-to-expression pins (k = k').
using ParamSubstitution = std::map<int, Polynomial>;

/// Designated QSS species: a nonempty proper subset of the states.
struct QssSplit {
  std::vector<int> qss;  // table indices, strictly increasing
};

/// Polynomial vector field x' = h(x, pi) with a designated state/parameter
/// split. Values are immutable after construction.
class OdeSystem {
 public:
  OdeSystem() = default;
  OdeSystem(SymTab table, std::vector<int> states, std::vector<Polynomial> field);

  const SymTab& table() const { return table_; }
  const std::vector<int>& states() const { return states_; }
  const std::vector<Polynomial>& field() const { return field_; }
  int dimension() const { return static_cast<int>(states_.size()); }

  int state_position(int table_index) const;  // -1 when not a dynamic state
  std::vector<int> parameters() const;

  const Polynomial& component(int table_index) const;

  OdeSystem substitute_params(const ParamAssignment& values) const;
  OdeSystem substitute_params(const ParamSubstitution& values) const;

  /// Splits states into retained x^[1] and QSS x^[2] blocks (table order).
  void split_blocks(const QssSplit& split, std::vector<int>* x1, std::vector<int>* x2) const;
  std::vector<Polynomial> h1(const QssSplit& split) const;
  std::vector<Polynomial> h2(const QssSplit& split) const;

  void validate_split(const QssSplit& split) const;

 private:
  SymTab table_;
  std::vector<int> states_;
  std::vector<Polynomial> field_;
};

/// Lie derivative L_h(theta) = D(theta) . h, derivatives with respect to the
/// states only.
Polynomial lie_derivative(const Polynomial& theta, const OdeSystem& odes);

}  // namespace qssr
