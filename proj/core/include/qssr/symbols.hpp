#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qssr {

enum class SymbolKind { State, Parameter, Auxiliary };

/// Shared table of indeterminates. Polynomials index into a table by
/// position, so the order is fixed once a computation starts; operations
/// that need fresh symbols (Rabinowitsch t, the gamma block of the affine
/// subspace search, epsilon) build an extended copy and lift operands.
class SymbolTable {
 public:
  SymbolTable() = default;

  int add(const std::string& name, SymbolKind kind);
  int index_of(const std::string& name) const;  // -1 when absent
  int require(const std::string& name) const;   // throws when absent

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  SymbolKind kind(int index) const { return kinds_.at(index); }

  std::vector<int> indices_of_kind(SymbolKind kind) const;

  /// True when `other` extends this table (same prefix of names/kinds).
  bool is_prefix_of(const SymbolTable& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<SymbolKind> kinds_;
  std::map<std::string, int> index_;
};

using SymTab = std::shared_ptr<const SymbolTable>;

/// Returns a new table extending `base` by one auxiliary symbol whose name
/// does not clash with existing ones (candidate, candidate_1, ...).
SymTab extend_table(const SymTab& base, const std::string& candidate, SymbolKind kind,
                    std::string* actual_name = nullptr);

}  // namespace qssr
