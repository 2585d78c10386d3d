#include "qssr/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qssr/parse.hpp"

namespace qssr {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// side := term ('+' term)* | empty ; term := [uint] name
std::vector<std::pair<std::string, int>> parse_side(const std::string& text, int line) {
  std::vector<std::pair<std::string, int>> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string chunk;
  std::vector<std::string> pieces;
  {
    std::string acc;
    for (char c : t) {
      if (c == '+') {
        pieces.push_back(acc);
        acc.clear();
      } else {
        acc += c;
      }
    }
    pieces.push_back(acc);
  }
  for (auto& piece : pieces) {
    auto toks = split_tokens(piece);
    if (toks.empty()) throw ParseError("empty reactant/product term", line, 1);
    int count = 1;
    std::size_t k = 0;
    if (std::isdigit(static_cast<unsigned char>(toks[0][0]))) {
      count = std::stoi(toks[0]);
      if (count <= 0) throw ParseError("stoichiometry must be positive", line, 1);
      k = 1;
      if (toks.size() == 1) throw ParseError("stoichiometry without species", line, 1);
    }
    if (toks.size() != k + 1 || !is_name(toks[k]))
      throw ParseError("malformed species term '" + trim(piece) + "'", line, 1);
    out.emplace_back(toks[k], count);
  }
  return out;
}

using Resolver = std::function<int(const std::string& name, bool is_rate, int line)>;

Reaction parse_reaction_line(const std::string& raw, int line, const Resolver& resolve,
                             std::set<std::string>* used_rates) {
  auto at = raw.find('@');
  if (at == std::string::npos) throw ParseError("reaction line missing '@ rate'", line, 1);
  std::string scheme = raw.substr(0, at);
  std::string rates = trim(raw.substr(at + 1));

  bool reversible = false;
  std::size_t arrow = scheme.find("<->");
  std::size_t arrow_len = 3;
  if (arrow != std::string::npos) {
    reversible = true;
  } else {
    arrow = scheme.find("->");
    arrow_len = 2;
    if (arrow == std::string::npos) throw ParseError("reaction line missing arrow", line, 1);
  }

  Reaction r;
  auto accumulate = [&](const std::string& side, std::vector<std::pair<int, int>>* out) {
    for (auto& [name, count] : parse_side(side, line)) {
      int idx = resolve(name, false, line);
      bool merged = false;
      for (auto& e : *out)
        if (e.first == idx) {
          e.second += count;
          merged = true;
        }
      if (!merged) out->emplace_back(idx, count);
    }
  };
  accumulate(scheme.substr(0, arrow), &r.reactants);
  accumulate(scheme.substr(arrow + arrow_len), &r.products);

  auto rate_names = split_tokens(rates);
  std::size_t expected = reversible ? 2 : 1;
  if (rate_names.size() != expected)
    throw ParseError(reversible ? "reversible reaction needs two rate symbols"
                                : "irreversible reaction needs one rate symbol",
                     line, 1);
  for (auto& name : rate_names) {
    if (!is_name(name)) throw ParseError("malformed rate symbol '" + name + "'", line, 1);
    if (!used_rates->insert(name).second)
      throw ParseError("duplicate rate symbol '" + name + "'", line, 1);
  }
  r.rate_forward = resolve(rate_names[0], true, line);
  if (reversible) r.rate_backward = resolve(rate_names[1], true, line);
  return r;
}

}  // namespace

ReactionNetwork parse_network(const std::string& text) {
  auto table = std::make_shared<SymbolTable>();
  ReactionNetwork net;
  std::set<std::string> used_rates;
  Resolver resolve = [&](const std::string& name, bool is_rate, int line) -> int {
    int idx = table->index_of(name);
    if (idx >= 0) {
      SymbolKind expect = is_rate ? SymbolKind::Parameter : SymbolKind::State;
      if (table->kind(idx) != expect)
        throw ParseError("symbol '" + name + "' used both as species and rate", line, 1);
      return idx;
    }
    idx = table->add(name, is_rate ? SymbolKind::Parameter : SymbolKind::State);
    if (!is_rate) net.species.push_back(idx);
    return idx;
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    net.reactions.push_back(parse_reaction_line(body, lineno, resolve, &used_rates));
  }
  net.table = table;
  return net;
}

OdeSystem mass_action_odes(const ReactionNetwork& net) {
  const SymTab& table = net.table;
  std::vector<Polynomial> field(net.species.size(), Polynomial(table));
  auto species_pos = [&](int idx) {
    return static_cast<std::size_t>(
        std::find(net.species.begin(), net.species.end(), idx) - net.species.begin());
  };
  auto rate_monomial = [&](int rate, const std::vector<std::pair<int, int>>& side) {
    Polynomial m = Polynomial::variable(table, rate);
    for (auto& [sp, count] : side) m *= Polynomial::variable(table, sp).pow(static_cast<unsigned>(count));
    return m;
  };
  for (const auto& r : net.reactions) {
    Polynomial forward = rate_monomial(r.rate_forward, r.reactants);
    Polynomial backward(table);
    if (r.rate_backward >= 0) backward = rate_monomial(r.rate_backward, r.products);
    auto add = [&](const std::vector<std::pair<int, int>>& side, int sign) {
      for (auto& [sp, count] : side) {
        Polynomial delta = (forward - backward) * Rat(sign * count);
        field[species_pos(sp)] += delta;
      }
    };
    add(r.reactants, -1);
    add(r.products, +1);
  }
  return OdeSystem(table, net.species, std::move(field));
}

std::vector<ConservationLaw> conservation_laws(const ReactionNetwork& net) {
  int ns = static_cast<int>(net.species.size());
  int nr = static_cast<int>(net.reactions.size());
  auto species_pos = [&](int idx) {
    return static_cast<int>(std::find(net.species.begin(), net.species.end(), idx) -
                            net.species.begin());
  };
  // rows: reactions; columns: species; entries: net stoichiometric change
  std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(ns, Rat(0)));
  for (int r = 0; r < nr; ++r) {
    for (auto& [sp, count] : net.reactions[r].reactants) m[r][species_pos(sp)] -= count;
    for (auto& [sp, count] : net.reactions[r].products) m[r][species_pos(sp)] += count;
  }
  // row-reduce, then read the kernel off the free columns
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < ns && rank < nr; ++col) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    Rat lead = m[rank][col];
    for (int c = 0; c < ns; ++c) m[rank][c] /= lead;
    for (int r = 0; r < nr; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < ns; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<ConservationLaw> out;
  std::vector<char> is_pivot(ns, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int free_col = 0; free_col < ns; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> w(ns, Rat(0));
    w[free_col] = 1;
    for (int k = 0; k < rank; ++k) w[pivot_col[k]] = -m[k][free_col];
    Int den_lcm(1), num_gcd(0);
    for (auto& x : w) {
      den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
      if (x != 0) num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(x)));
    }
    ConservationLaw law;
    Rat scale = Rat(den_lcm) / Rat(num_gcd == 0 ? Int(1) : num_gcd);
    // sign: first nonzero weight positive
    for (auto& x : w)
      if (x != 0) {
        if (x < 0) scale = -scale;
        break;
      }
    for (int c = 0; c < ns; ++c) {
      Rat v = w[c] * scale;
      if (v != 0) law.weights.emplace_back(net.species[c], v.convert_to<int>());
    }
    out.push_back(std::move(law));
  }
  return out;
}

OdeSystem apply_conservation(const OdeSystem& odes, const std::vector<ConservationLaw>& laws,
                             const std::vector<int>& eliminate,
                             std::vector<std::pair<int, Polynomial>>* substitutions) {
  if (laws.size() != eliminate.size())
    throw std::invalid_argument("one eliminated species per conservation law");
  const SymTab& table = odes.table();
  std::map<int, Polynomial> replacement;
  for (std::size_t k = 0; k < laws.size(); ++k) {
    const ConservationLaw& law = laws[k];
    if (law.total < 0) throw std::invalid_argument("conservation law has no total parameter");
    Polynomial combo(table);
    for (auto& [sp, w] : law.weights) combo += Polynomial::variable(table, sp) * Rat(w);
    if (!lie_derivative(combo, odes).substitute_many(replacement).is_zero() &&
        !lie_derivative(combo, odes).is_zero())
      throw std::invalid_argument("declared conservation law is not a first integral");
    int e = eliminate[k];
    int we = 0;
    for (auto& [sp, w] : law.weights)
      if (sp == e) we = w;
    if (we != 1 && we != -1)
      throw std::invalid_argument("species '" + table->name(e) +
                                  "' does not carry unit weight in its law");
    if (replacement.count(e)) throw std::invalid_argument("species eliminated twice");
    Polynomial expr = Polynomial::variable(table, law.total);
    for (auto& [sp, w] : law.weights)
      if (sp != e) expr -= Polynomial::variable(table, sp) * Rat(w);
    expr = expr / Rat(we);
    expr = expr.substitute_many(replacement);  // fold earlier eliminations in
    replacement.emplace(e, std::move(expr));
  }
  std::vector<int> states;
  std::vector<Polynomial> field;
  for (std::size_t i = 0; i < odes.states().size(); ++i) {
    int s = odes.states()[i];
    if (replacement.count(s)) continue;
    states.push_back(s);
    field.push_back(odes.field()[i].substitute_many(replacement));
  }
  if (substitutions) {
    substitutions->clear();
    for (auto& [sp, expr] : replacement) substitutions->emplace_back(sp, expr);
  }
  return OdeSystem(table, std::move(states), std::move(field));
}

namespace {

ConservationLaw parse_conserve_line(const SymTab& table, const std::string& text, int line) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("conserve line needs '= total'", line, 1);
  std::string lhs = text.substr(0, eq);
  std::string rhs = trim(text.substr(eq + 1));
  if (!is_name(rhs)) throw ParseError("conserve total must be a parameter name", line, 1);
  ConservationLaw law;
  int total = table->index_of(rhs);
  if (total < 0 || table->kind(total) != SymbolKind::Parameter)
    throw ParseError("unknown total parameter '" + rhs + "'", line, 1);
  law.total = total;
  // lhs := [+-] [int] name ([+-] [int] name)*
  int sign = 1;
  std::string token;
  std::vector<std::string> raw;
  for (char c : lhs) {
    if (c == '+' || c == '-') {
      if (!trim(token).empty()) raw.push_back((sign < 0 ? "-" : "") + trim(token));
      token.clear();
      sign = c == '-' ? -1 : 1;
    } else {
      token += c;
    }
  }
  if (!trim(token).empty()) raw.push_back((sign < 0 ? "-" : "") + trim(token));
  for (auto& piece : raw) {
    int s = 1;
    std::string body = piece;
    if (!body.empty() && body[0] == '-') {
      s = -1;
      body = body.substr(1);
    }
    auto toks = split_tokens(body);
    int count = 1;
    std::size_t k = 0;
    if (!toks.empty() && std::isdigit(static_cast<unsigned char>(toks[0][0]))) {
      count = std::stoi(toks[0]);
      k = 1;
    }
    if (toks.size() != k + 1 || !is_name(toks[k]))
      throw ParseError("malformed conserve term '" + piece + "'", line, 1);
    int sp = table->index_of(toks[k]);
    if (sp < 0 || table->kind(sp) != SymbolKind::State)
      throw ParseError("unknown species '" + toks[k] + "' in conserve line", line, 1);
    law.weights.emplace_back(sp, s * count);
  }
  if (law.weights.empty()) throw ParseError("empty conserve line", line, 1);
  return law;
}

}  // namespace

Model parse_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string section;
  std::vector<std::pair<int, std::string>> species_lines, param_lines, reaction_lines, ode_lines,
      conserve_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    static const std::vector<std::string> kSections = {"species", "parameters", "reactions",
                                                       "odes", "conserve"};
    bool matched = false;
    for (const auto& name : kSections) {
      if (body.rfind(name + ":", 0) == 0) {
        section = name;
        std::string rest = trim(body.substr(name.size() + 1));
        if (!rest.empty()) {
          if (section == "species") species_lines.emplace_back(lineno, rest);
          if (section == "parameters") param_lines.emplace_back(lineno, rest);
          if (section == "reactions") reaction_lines.emplace_back(lineno, rest);
          if (section == "odes") ode_lines.emplace_back(lineno, rest);
          if (section == "conserve") conserve_lines.emplace_back(lineno, rest);
        }
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (section == "species")
      species_lines.emplace_back(lineno, body);
    else if (section == "parameters")
      param_lines.emplace_back(lineno, body);
    else if (section == "reactions")
      reaction_lines.emplace_back(lineno, body);
    else if (section == "odes")
      ode_lines.emplace_back(lineno, body);
    else if (section == "conserve")
      conserve_lines.emplace_back(lineno, body);
    else
      throw ParseError("content outside any section", lineno, 1);
  }

  if (species_lines.empty()) throw ParseError("model file needs a species: section", 1, 1);
  if (reaction_lines.empty() == ode_lines.empty())
    throw ParseError("model file needs exactly one of reactions:/odes:", 1, 1);

  Model model;
  auto table = std::make_shared<SymbolTable>();
  for (auto& [ln, body] : species_lines)
    for (auto& name : split_tokens(body)) {
      if (!is_name(name)) throw ParseError("malformed species name '" + name + "'", ln, 1);
      model.species.push_back(table->add(name, SymbolKind::State));
    }
  for (auto& [ln, body] : param_lines) {
    std::string squeezed;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c)) || squeezed.empty() ||
          (squeezed.back() != '=' && c != '\0'))
        squeezed += c;
    for (auto& tok : split_tokens(body)) {
      auto eq = tok.find('=');
      std::string name = eq == std::string::npos ? tok : tok.substr(0, eq);
      if (!is_name(name)) throw ParseError("malformed parameter '" + tok + "'", ln, 1);
      int idx = table->add(name, SymbolKind::Parameter);
      model.parameters.push_back(idx);
      if (eq != std::string::npos) model.defaults[idx] = parse_rational(tok.substr(eq + 1));
    }
  }
  model.table = table;

  if (!reaction_lines.empty()) {
    ReactionNetwork net;
    net.table = model.table;
    net.species = model.species;
    std::set<std::string> used_rates;
    Resolver resolve = [&](const std::string& name, bool is_rate, int ln) -> int {
      int idx = model.table->index_of(name);
      if (idx < 0) throw ParseError("unknown symbol '" + name + "'", ln, 1);
      SymbolKind expect = is_rate ? SymbolKind::Parameter : SymbolKind::State;
      if (model.table->kind(idx) != expect)
        throw ParseError("symbol '" + name + "' has the wrong kind here", ln, 1);
      return idx;
    };
    for (auto& [ln, body] : reaction_lines)
      net.reactions.push_back(parse_reaction_line(body, ln, resolve, &used_rates));
    model.network = std::move(net);
  } else {
    std::map<int, Polynomial> by_species;
    for (auto& [ln, body] : ode_lines) {
      auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError("ode line needs '='", ln, 1);
      std::string lhs = trim(body.substr(0, eq));
      if (lhs.size() < 2 || lhs.back() != '\'')
        throw ParseError("ode left side must be species'", ln, 1);
      std::string name = trim(lhs.substr(0, lhs.size() - 1));
      int sp = model.table->index_of(name);
      if (sp < 0 || model.table->kind(sp) != SymbolKind::State)
        throw ParseError("unknown species '" + name + "' on ode left side", ln, 1);
      if (by_species.count(sp)) throw ParseError("duplicate ode for '" + name + "'", ln, 1);
      by_species.emplace(sp, parse_polynomial(model.table, body.substr(eq + 1), ln));
    }
    for (int sp : model.species) {
      auto it = by_species.find(sp);
      if (it == by_species.end())
        throw ParseError("species '" + model.table->name(sp) + "' has no ode", 1, 1);
      model.raw_odes.push_back(it->second);
    }
  }

  for (auto& [ln, body] : conserve_lines) {
    ConservationLaw law = parse_conserve_line(model.table, body, ln);
    int chosen = -1;
    for (auto& [sp, w] : law.weights) {
      bool used = std::find(model.law_eliminates.begin(), model.law_eliminates.end(), sp) !=
                  model.law_eliminates.end();
      if ((w == 1 || w == -1) && !used) {
        chosen = sp;
        break;
      }
    }
    if (chosen < 0) throw ParseError("conserve line has no usable unit-weight species", ln, 1);
    model.laws.push_back(std::move(law));
    model.law_eliminates.push_back(chosen);
  }
  return model;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

OdeSystem model_odes(const Model& model, bool fold_conservation,
                     std::vector<std::pair<int, Polynomial>>* substitutions) {
  OdeSystem odes = model.network ? mass_action_odes(*model.network)
                                 : OdeSystem(model.table, model.species, model.raw_odes);
  if (fold_conservation && !model.laws.empty())
    odes = apply_conservation(odes, model.laws, model.law_eliminates, substitutions);
  return odes;
}

}  // namespace qssr
