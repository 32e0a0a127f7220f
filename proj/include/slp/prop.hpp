/*
 * Copyright 2026 The slp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*!
  \file prop.hpp
  \brief Propositional evaluation, truth tables, validity and entailment by
         exhaustive enumeration of valuations.

  Propositional atoms are nullary relations. Valuations are enumerated in
  lexicographic order over the atoms sorted by name, each atom running
  through Top, Both, Bot, the first atom varying slowest. Countermodels are
  always the first failing valuation in that order.
*/

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slp/evaluate.hpp"
#include "slp/format.hpp"
#include "slp/syntax.hpp"

namespace slp {

using Valuation = std::map<std::string, TruthValue>;

/// Formulas with more atoms than this are refused unless the caller opts in.
inline constexpr std::size_t kDefaultMaxAtoms = 12;

struct EnumerationLimits {
  std::size_t max_atoms = kDefaultMaxAtoms;
  bool unlimited = false;
};

namespace detail {

struct PropEnv {
  const Valuation& valuation;

  TruthValue relation(const Formula& f) const {
    if (!f.terms().empty())
      throw EvalError("relation '" + f.name() + "' is not a propositional atom");
    auto it = valuation.find(f.name());
    if (it == valuation.end()) throw EvalError("atom '" + f.name() + "' is unbound");
    return it->second;
  }

  TruthValue equality(const Term&, const Term&) const {
    throw EvalError("equality is not propositional");
  }

  template <class Body>
  TruthValue quantify(Op, const std::string& var, Body&&) const {
    throw EvalError("quantifier over '" + var + "' encountered in a propositional formula");
  }
};

inline void check_propositional(const Formula& f) {
  for_each_subformula(f, [](const Formula& g) {
    if (is_quantifier(g.op()))
      throw EvalError("quantifier over '" + g.name() + "' encountered in a propositional formula");
    if (g.op() == Op::Equality) throw EvalError("equality is not propositional");
    if (g.op() == Op::Relation && !g.terms().empty())
      throw EvalError("relation '" + g.name() + "' is not a propositional atom");
  });
}

inline void check_atom_count(std::size_t n, const EnumerationLimits& limits) {
  if (!limits.unlimited && n > limits.max_atoms)
    throw BudgetError(std::to_string(n) + " atoms exceed the enumeration limit of " +
                      std::to_string(limits.max_atoms));
}

}  // namespace detail

inline TruthValue eval_prop(const Formula& f, const Valuation& v) {
  detail::PropEnv env{v};
  return evaluate(f, env);
}

/// Odometer over the 3^n valuations of a fixed atom list, in enumeration
/// order.
class ValuationCounter {
 public:
  explicit ValuationCounter(std::vector<std::string> atoms)
      : atoms_(std::move(atoms)), digits_(atoms_.size(), 0) {
    for (const auto& a : atoms_) current_[a] = TruthValue::Top;
  }

  const Valuation& current() const noexcept { return current_; }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }

  /// Advances to the next valuation; false after the last one.
  bool next() {
    for (std::size_t i = atoms_.size(); i-- > 0;) {
      if (++digits_[i] < 3) {
        current_[atoms_[i]] = from_enumeration_index(digits_[i]);
        return true;
      }
      digits_[i] = 0;
      current_[atoms_[i]] = TruthValue::Top;
    }
    return false;
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<unsigned> digits_;
  Valuation current_;
};

/// Calls `fn(valuation)` for each valuation of `atoms`; stops early when `fn`
/// returns false.
template <class Fn>
void for_each_valuation(std::vector<std::string> atoms, Fn&& fn) {
  ValuationCounter counter(std::move(atoms));
  do {
    if (!fn(counter.current())) return;
  } while (counter.next());
}

inline std::vector<std::string> sorted_atoms(std::span<const Formula> formulas) {
  std::set<std::string> names;
  for (const auto& f : formulas) names.merge(atoms_of(f));
  return {names.begin(), names.end()};
}

struct TruthTableRow {
  Valuation valuation;
  TruthValue value;
};

struct TruthTable {
  std::vector<std::string> atoms;
  Formula formula;
  std::vector<TruthTableRow> rows;
};

inline TruthTable truth_table(const Formula& f, const EnumerationLimits& limits = {}) {
  detail::check_propositional(f);
  TruthTable table{sorted_atoms(std::span(&f, 1)), f, {}};
  detail::check_atom_count(table.atoms.size(), limits);
  for_each_valuation(table.atoms, [&](const Valuation& v) {
    table.rows.push_back({v, eval_prop(f, v)});
    return true;
  });
  return table;
}

/// Header of atom names and the formula, then one row per valuation.
inline std::string format_truth_table(const TruthTable& t) {
  std::string out;
  auto cell = [&](char c, std::size_t width) {
    out += c;
    out.append(width - 1, ' ');
    out += ' ';
  };
  for (const auto& a : t.atoms) out += a + ' ';
  out += "| " + format_formula(t.formula) + '\n';
  for (const auto& row : t.rows) {
    for (const auto& a : t.atoms) cell(to_char(row.valuation.at(a)), a.size());
    out += "| ";
    out += to_char(row.value);
    out += '\n';
  }
  return out;
}

/// Verdict of a validity or entailment check. `countermodel` is empty when
/// the check succeeded.
struct PropVerdict {
  std::optional<Valuation> countermodel;

  bool holds() const noexcept { return !countermodel.has_value(); }
  explicit operator bool() const noexcept { return holds(); }
};

inline PropVerdict entails_prop(std::span<const Formula> premises, const Formula& conclusion,
                                const EnumerationLimits& limits = {}) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  for (const auto& f : all) detail::check_propositional(f);
  auto atoms = sorted_atoms(all);
  detail::check_atom_count(atoms.size(), limits);

  PropVerdict verdict;
  for_each_valuation(std::move(atoms), [&](const Valuation& v) {
    for (const auto& p : premises)
      if (!designated(eval_prop(p, v))) return true;
    if (designated(eval_prop(conclusion, v))) return true;
    verdict.countermodel = v;
    return false;
  });
  return verdict;
}

inline PropVerdict entails_prop(std::initializer_list<Formula> premises, const Formula& conclusion,
                                const EnumerationLimits& limits = {}) {
  return entails_prop(std::span(premises.begin(), premises.size()), conclusion, limits);
}

/// Valid iff designated under every valuation. A countermodel is a valuation
/// at which the formula is Bot.
inline PropVerdict is_tautology(const Formula& f, const EnumerationLimits& limits = {}) {
  return entails_prop(std::span<const Formula>{}, f, limits);
}

/// True iff `f` and `g` take the same value under every valuation of their
/// combined atoms.
inline bool equivalent_prop(const Formula& f, const Formula& g,
                            const EnumerationLimits& limits = {}) {
  detail::check_propositional(f);
  detail::check_propositional(g);
  const Formula both[] = {f, g};
  auto atoms = sorted_atoms(both);
  detail::check_atom_count(atoms.size(), limits);
  bool same = true;
  for_each_valuation(std::move(atoms), [&](const Valuation& v) {
    same = eval_prop(f, v) == eval_prop(g, v);
    return same;
  });
  return same;
}

/// "p=P, q=F"
inline std::string format_valuation(const Valuation& v) {
  std::string out;
  for (const auto& [atom, value] : v) {
    if (!out.empty()) out += ", ";
    out += atom + '=' + to_char(value);
  }
  return out;
}

/// Parses "p=T,q=P" (whitespace allowed around items).
inline Valuation parse_valuation(std::string_view text) {
  Valuation v;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (!trim(text).empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw FormatError("assignment '" + std::string(item) + "' is not of the form atom=T|P|F");
    auto name = trim(item.substr(0, eq));
    if (name.empty()) throw FormatError("assignment '" + std::string(item) + "' lacks an atom");
    v[std::string(name)] = parse_truth_value(trim(item.substr(eq + 1)));
  }
  return v;
}

}  // namespace slp
