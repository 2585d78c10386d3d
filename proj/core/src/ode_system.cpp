#include "qssr/ode_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace qssr {

OdeSystem::OdeSystem(SymTab table, std::vector<int> states, std::vector<Polynomial> field)
    : table_(std::move(table)), states_(std::move(states)), field_(std::move(field)) {
  if (states_.size() != field_.size())
    throw std::invalid_argument("state/field length mismatch");
  for (std::size_t i = 1; i < states_.size(); ++i)
    if (states_[i] <= states_[i - 1]) throw std::invalid_argument("states must be strictly increasing");
}

int OdeSystem::state_position(int table_index) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), table_index);
  if (it == states_.end() || *it != table_index) return -1;
  return static_cast<int>(it - states_.begin());
}

std::vector<int> OdeSystem::parameters() const {
  return table_->indices_of_kind(SymbolKind::Parameter);
}

const Polynomial& OdeSystem::component(int table_index) const {
  int pos = state_position(table_index);
  if (pos < 0) throw std::invalid_argument("not a dynamic state");
  return field_[static_cast<std::size_t>(pos)];
}

OdeSystem OdeSystem::substitute_params(const ParamAssignment& values) const {
  ParamSubstitution subst;
  for (const auto& [v, r] : values) subst.emplace(v, Polynomial::constant(table_, r));
  return substitute_params(subst);
}

OdeSystem OdeSystem::substitute_params(const ParamSubstitution& values) const {
  for (const auto& [v, p] : values)
    if (table_->kind(v) != SymbolKind::Parameter)
      throw std::invalid_argument("substitution target is not a parameter");
  std::map<int, Polynomial> m(values.begin(), values.end());
  std::vector<Polynomial> field;
  field.reserve(field_.size());
  for (const auto& f : field_) field.push_back(f.substitute_many(m));
  return OdeSystem(table_, states_, std::move(field));
}

void OdeSystem::split_blocks(const QssSplit& split, std::vector<int>* x1, std::vector<int>* x2) const {
  validate_split(split);
  x1->clear();
  x2->clear();
  for (int s : states_) {
    if (std::binary_search(split.qss.begin(), split.qss.end(), s))
      x2->push_back(s);
    else
      x1->push_back(s);
  }
}

std::vector<Polynomial> OdeSystem::h1(const QssSplit& split) const {
  std::vector<int> x1, x2;
  split_blocks(split, &x1, &x2);
  std::vector<Polynomial> out;
  for (int s : x1) out.push_back(component(s));
  return out;
}

std::vector<Polynomial> OdeSystem::h2(const QssSplit& split) const {
  std::vector<int> x1, x2;
  split_blocks(split, &x1, &x2);
  std::vector<Polynomial> out;
  for (int s : x2) out.push_back(component(s));
  return out;
}

void OdeSystem::validate_split(const QssSplit& split) const {
  if (split.qss.empty()) throw std::invalid_argument("QSS species set is empty");
  if (split.qss.size() >= states_.size())
    throw std::invalid_argument("QSS species must be a proper subset of the states");
  for (std::size_t i = 0; i < split.qss.size(); ++i) {
    if (i > 0 && split.qss[i] <= split.qss[i - 1])
      throw std::invalid_argument("QSS species must be strictly increasing");
    if (state_position(split.qss[i]) < 0)
      throw std::invalid_argument("QSS species '" + table_->name(split.qss[i]) + "' is not a state");
  }
}

Polynomial lie_derivative(const Polynomial& theta, const OdeSystem& odes) {
  if (theta.table() != odes.table())
    throw std::invalid_argument("Lie derivative over mismatched tables");
  Polynomial out(odes.table());
  for (std::size_t i = 0; i < odes.states().size(); ++i)
    out += theta.derivative(odes.states()[i]) * odes.field()[i];
  return out;
}

}  // namespace qssr
