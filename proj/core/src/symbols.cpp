#include "qssr/symbols.hpp"

#include <stdexcept>

namespace qssr {

int SymbolTable::add(const std::string& name, SymbolKind kind) {
  if (index_.count(name)) throw std::invalid_argument("duplicate symbol '" + name + "'");
  int index = static_cast<int>(names_.size());
  names_.push_back(name);
  kinds_.push_back(kind);
  index_[name] = index;
  return index;
}

int SymbolTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int SymbolTable::require(const std::string& name) const {
  int index = index_of(name);
  if (index < 0) throw std::invalid_argument("unknown symbol '" + name + "'");
  return index;
}

std::vector<int> SymbolTable::indices_of_kind(SymbolKind kind) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (kinds_[i] == kind) out.push_back(i);
  return out;
}

bool SymbolTable::is_prefix_of(const SymbolTable& other) const {
  if (size() > other.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (names_[i] != other.names_[i] || kinds_[i] != other.kinds_[i]) return false;
  return true;
}

SymTab extend_table(const SymTab& base, const std::string& candidate, SymbolKind kind,
                    std::string* actual_name) {
  auto table = std::make_shared<SymbolTable>();
  for (int i = 0; i < base->size(); ++i) table->add(base->name(i), base->kind(i));
  std::string name = candidate;
  int suffix = 0;
  while (table->index_of(name) >= 0) name = candidate + "_" + std::to_string(++suffix);
  table->add(name, kind);
  if (actual_name) *actual_name = name;
  return table;
}

}  // namespace qssr
