#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qssr/ode_system.hpp"

namespace qssr {

struct Reaction {
  std::vector<std::pair<int, int>> reactants;  // (species table index, stoichiometry)
  std::vector<std::pair<int, int>> products;
  int rate_forward = -1;   // parameter table index
  int rate_backward = -1;  // -1: irreversible
};

struct ReactionNetwork {
  SymTab table;
  std::vector<int> species;  // table indices, order of appearance
  std::vector<Reaction> reactions;
};

/// weights . x = total along every trajectory; total is a parameter index or
/// -1 when the law was computed rather than declared.
struct ConservationLaw {
  std::vector<std::pair<int, int>> weights;  // (species table index, integer weight)
  int total = -1;
};

/// Parses the reaction DSL ("a A + b B -> c C @ k" / "... <-> ... @ kf, kr"),
/// registering species and rate parameters in a fresh table.
ReactionNetwork parse_network(const std::string& text);

/// Mass-action right-hand sides, one polynomial per species.
OdeSystem mass_action_odes(const ReactionNetwork& net);

/// Integer basis of the left null space of the stoichiometric matrix.
std::vector<ConservationLaw> conservation_laws(const ReactionNetwork& net);

/// Eliminates `eliminate[i]` using laws[i]; each eliminated species needs
/// weight +-1 in its law and the law must be a first integral of `odes`.
/// Substituted expressions are reported through `substitutions` when given.
OdeSystem apply_conservation(const OdeSystem& odes, const std::vector<ConservationLaw>& laws,
                             const std::vector<int>& eliminate,
                             std::vector<std::pair<int, Polynomial>>* substitutions = nullptr);

/// A parsed model file: species/parameters/reactions|odes/conserve sections.
struct Model {
  SymTab table;
  std::vector<int> species;
  std::vector<int> parameters;
  ParamAssignment defaults;
  std::optional<ReactionNetwork> network;   // reactions mode
  std::vector<Polynomial> raw_odes;         // odes mode (one per species)
  std::vector<ConservationLaw> laws;        // declared conserve: lines
  std::vector<int> law_eliminates;          // chosen species per law
  bool orthant_invariance_checked = false;  // standing assumption, not verified
};

Model parse_model(const std::string& text);
Model load_model(const std::string& path);

/// Full ODE system of the model; with `fold_conservation` the declared laws
/// are substituted in (the paper's lower-dimensional systems).
OdeSystem model_odes(const Model& model, bool fold_conservation = true,
                     std::vector<std::pair<int, Polynomial>>* substitutions = nullptr);

}  // namespace qssr
