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
  \file model.hpp
  \brief Finite three-valued models, the truth function of first-order
         formulas, satisfaction, and bounded search for countermodels.

  A model fixes a nonempty domain, an element for every constant, and for
  every n-ary relation a table from n-tuples of elements to truth values.
  Satisfaction designates (value above Bot) under every assignment of the
  formula's free variables. Entailment T |= U holds on a model when
  "M satisfies T" implies "M satisfies U", each side quantifying over
  assignments on its own.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slp/evaluate.hpp"
#include "slp/syntax.hpp"

namespace slp {

using Element = std::size_t;

/// Variable bindings to element indices. Only the variables in play are
/// stored.
using Assignment = std::map<std::string, Element>;

class Model {
 public:
  struct Table {
    std::size_t arity = 0;
    std::vector<TruthValue> values;  // k^arity cells, tuples in lexicographic order
  };

  explicit Model(std::vector<std::string> domain) : domain_(std::move(domain)) {
    if (domain_.empty()) throw DomainError("model domain must be nonempty");
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if (!index_.emplace(domain_[i], i).second)
        throw DomainError("duplicate domain element '" + domain_[i] + "'");
  }

  /// Domain {e1, ..., ek}.
  static Model with_size(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
    return Model(std::move(names));
  }

  std::size_t size() const noexcept { return domain_.size(); }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  const std::string& element_name(Element e) const { return domain_.at(e); }

  Element element(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("'" + name + "' is not a domain element");
    return it->second;
  }

  void set_constant(const std::string& name, Element e) {
    if (e >= size()) throw DomainError("constant '" + name + "' mapped outside the domain");
    if (tables_.contains(name)) throw DomainError("symbol '" + name + "' is already a relation");
    constants_[name] = e;
  }

  void add_relation(const std::string& name, std::size_t arity,
                    TruthValue fill = TruthValue::Bot) {
    if (constants_.contains(name)) throw DomainError("symbol '" + name + "' is already a constant");
    tables_[name] = Table{arity, std::vector<TruthValue>(cells(arity), fill)};
  }

  void set(const std::string& name, std::span<const Element> args, TruthValue v) {
    auto& t = table(name);
    t.values[cell(t, args)] = v;
  }

  void set(const std::string& name, std::initializer_list<Element> args, TruthValue v) {
    set(name, std::span(args.begin(), args.size()), v);
  }

  TruthValue get(const std::string& name, std::span<const Element> args) const {
    const auto& t = table(name);
    return t.values[cell(t, args)];
  }

  TruthValue get(const std::string& name, std::initializer_list<Element> args) const {
    return get(name, std::span(args.begin(), args.size()));
  }

  const std::map<std::string, Element>& constants() const noexcept { return constants_; }
  const std::map<std::string, Table>& tables() const noexcept { return tables_; }
  std::map<std::string, Table>& tables() noexcept { return tables_; }

  Element constant(const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) throw UnknownSymbolError("unknown constant symbol '" + name + "'");
    return it->second;
  }

  const Table& table(const std::string& name) const {
    auto it = tables_.find(name);
    if (it == tables_.end()) throw UnknownSymbolError("unknown relation symbol '" + name + "'");
    return it->second;
  }

  Signature signature() const {
    Signature sig;
    for (const auto& [c, e] : constants_) sig.add_constant(c);
    for (const auto& [r, t] : tables_) sig.add_relation(r, t.arity);
    return sig;
  }

  std::size_t cells(std::size_t arity) const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) n *= size();
    return n;
  }

  /// Decodes cell index `i` of an `arity`-ary table into its argument tuple.
  std::vector<Element> tuple_at(std::size_t arity, std::size_t i) const {
    std::vector<Element> args(arity);
    for (std::size_t k = arity; k-- > 0; i /= size()) args[k] = i % size();
    return args;
  }

  friend bool operator==(const Model& a, const Model& b) {
    return a.domain_ == b.domain_ && a.constants_ == b.constants_ &&
           std::equal(a.tables_.begin(), a.tables_.end(), b.tables_.begin(), b.tables_.end(),
                      [](const auto& x, const auto& y) {
                        return x.first == y.first && x.second.arity == y.second.arity &&
                               x.second.values == y.second.values;
                      });
  }

 private:
  Table& table(const std::string& name) {
    auto it = tables_.find(name);
    if (it == tables_.end()) throw UnknownSymbolError("unknown relation symbol '" + name + "'");
    return it->second;
  }

  std::size_t cell(const Table& t, std::span<const Element> args) const {
    if (args.size() != t.arity)
      throw ArityError("relation applied to " + std::to_string(args.size()) +
                       " argument(s), expected " + std::to_string(t.arity));
    std::size_t i = 0;
    for (auto e : args) {
      if (e >= size()) throw DomainError("element index out of range");
      i = i * size() + e;
    }
    return i;
  }

  std::vector<std::string> domain_;
  std::map<std::string, Element> index_;
  std::map<std::string, Element> constants_;
  std::map<std::string, Table> tables_;
};

/// The element a term denotes.
inline Element val(const Term& t, const Model& m, const Assignment& a) {
  if (!t.is_variable()) return m.constant(t.name);
  auto it = a.find(t.name);
  if (it == a.end()) throw EvalError("variable '" + t.name + "' is unbound");
  return it->second;
}

namespace detail {

struct FoEnv {
  const Model& model;
  Assignment assignment;
  std::vector<Element> args;

  TruthValue relation(const Formula& f) {
    const auto& table = model.table(f.name());
    if (table.arity != f.terms().size())
      throw ArityError("relation '" + f.name() + "' has arity " + std::to_string(table.arity) +
                       " but is applied to " + std::to_string(f.terms().size()) + " argument(s)");
    std::size_t i = 0;
    for (const auto& t : f.terms()) i = i * model.size() + val(t, model, assignment);
    return table.values[i];
  }

  TruthValue equality(const Term& a, const Term& b) {
    return val(a, model, assignment) == val(b, model, assignment) ? TruthValue::Top
                                                                  : TruthValue::Bot;
  }

  template <class Body>
  TruthValue quantify(Op op, const std::string& var, Body&& body) {
    auto saved = assignment.find(var) == assignment.end()
                     ? std::optional<Element>{}
                     : std::optional<Element>{assignment[var]};
    TruthValue acc = op == Op::Forall ? TruthValue::Top : TruthValue::Bot;
    for (Element e = 0; e < model.size(); ++e) {
      assignment[var] = e;
      const TruthValue v = body();
      acc = op == Op::Forall ? conj(acc, v) : disj(acc, v);
    }
    if (saved)
      assignment[var] = *saved;
    else
      assignment.erase(var);
    return acc;
  }
};

}  // namespace detail

/// Truth value of `f` in `m` under `a`.
inline TruthValue true_fo(const Formula& f, const Model& m, const Assignment& a = {}) {
  detail::FoEnv env{m, a, {}};
  return evaluate(f, env);
}

/// No relation table contains Both.
inline bool model_consistent(const Model& m) {
  for (const auto& [name, t] : m.tables())
    for (auto v : t.values)
      if (v == TruthValue::Both) return false;
  return true;
}

/// Calls `fn(assignment)` for every assignment of `vars` to elements of `m`,
/// in lexicographic order; stops early when `fn` returns false.
template <class Fn>
void for_each_assignment(const Model& m, const std::set<std::string>& vars, Fn&& fn) {
  std::vector<std::string> names(vars.begin(), vars.end());
  Assignment a;
  for (const auto& v : names) a[v] = 0;
  while (true) {
    if (!fn(static_cast<const Assignment&>(a))) return;
    std::size_t i = names.size();
    while (i-- > 0) {
      if (++a[names[i]] < m.size()) break;
      a[names[i]] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

/// The first formula of `theory` (by position) and assignment at which the
/// model fails to designate it.
struct SatisfactionFailure {
  std::size_t index;
  Assignment assignment;
};

inline std::optional<SatisfactionFailure> first_failure(const Model& m,
                                                         std::span<const Formula> theory) {
  for (std::size_t i = 0; i < theory.size(); ++i) {
    std::optional<SatisfactionFailure> failure;
    for_each_assignment(m, free_vars(theory[i]), [&](const Assignment& a) {
      if (designated(true_fo(theory[i], m, a))) return true;
      failure = SatisfactionFailure{i, a};
      return false;
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

/// Every formula designated under every assignment of its free variables.
inline bool satisfies(const Model& m, std::span<const Formula> theory) {
  return !first_failure(m, theory).has_value();
}

inline bool satisfies(const Model& m, std::initializer_list<Formula> theory) {
  return satisfies(m, std::span(theory.begin(), theory.size()));
}

/// Limit on the number of models an enumeration may visit.
struct ModelBudget {
  std::uint64_t max_models = 1'000'000;
  bool unlimited = false;
};

namespace detail {
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}
inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}
}  // namespace detail

/// Truth values a relation cell may take during enumeration.
enum class CellValues : std::uint8_t { ThreeValued, Classical };

/// Number of models with domain size k: values^(sum of k^arity) * k^constants.
/// Saturates at the maximum of uint64.
inline std::uint64_t model_count(const Signature& sig, std::size_t k,
                                 CellValues values = CellValues::ThreeValued) {
  const std::uint64_t per_cell = values == CellValues::ThreeValued ? 3 : 2;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < sig.constants().size(); ++i) count = detail::saturating_mul(count, k);
  for (const auto& [name, arity] : sig.relations()) {
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < arity; ++i) cells = detail::saturating_mul(cells, k);
    for (std::uint64_t c = 0; c < cells; ++c) {
      count = detail::saturating_mul(count, per_cell);
      if (count == std::numeric_limits<std::uint64_t>::max()) return count;
    }
  }
  return count;
}

/// Stream over all models of `sig` with domain {e1..ek}.
///
/// Order is lexicographic over constant interpretations (constants sorted by
/// name, elements in domain order) followed by relation cells (relations
/// sorted by name, tuples in lexicographic order, values Top, Both, Bot).
/// Domain elements are not quotiented by isomorphism.
class ModelEnumerator {
 public:
  ModelEnumerator(const Signature& sig, std::size_t k,
                  CellValues values = CellValues::ThreeValued)
      : model_(Model::with_size(k)), values_(values) {
    if (k < 1) throw DomainError("domain size must be at least 1");
    for (const auto& c : sig.constants()) {
      model_.set_constant(c, 0);
      constants_.push_back(c);
    }
    for (const auto& [name, arity] : sig.relations()) {
      model_.add_relation(name, arity, TruthValue::Top);
      auto& t = model_.tables().at(name);
      for (auto& v : t.values) cells_.push_back(&v);
    }
    digits_.assign(constants_.size() + cells_.size(), 0);
  }

  ModelEnumerator(const ModelEnumerator&) = delete;
  ModelEnumerator& operator=(const ModelEnumerator&) = delete;

  /// Produces the next model into `out`; false when exhausted.
  bool next(Model& out) {
    if (done_) return false;
    if (started_ && !advance()) {
      done_ = true;
      return false;
    }
    started_ = true;
    out = model_;
    return true;
  }

 private:
  TruthValue cell_value(unsigned d) const {
    if (values_ == CellValues::Classical) return d == 0 ? TruthValue::Top : TruthValue::Bot;
    return from_enumeration_index(d);
  }

  bool advance() {
    const unsigned cell_radix = values_ == CellValues::ThreeValued ? 3 : 2;
    for (std::size_t i = digits_.size(); i-- > 0;) {
      const bool is_constant = i < constants_.size();
      const unsigned radix = is_constant ? static_cast<unsigned>(model_.size()) : cell_radix;
      digits_[i] = (digits_[i] + 1) % radix;
      if (is_constant)
        model_.set_constant(constants_[i], digits_[i]);
      else
        *cells_[i - constants_.size()] = cell_value(digits_[i]);
      if (digits_[i] != 0) return true;
    }
    return false;
  }

  Model model_;
  CellValues values_;
  std::vector<std::string> constants_;
  std::vector<TruthValue*> cells_;
  std::vector<unsigned> digits_;
  bool started_ = false;
  bool done_ = false;
};

namespace detail {
inline void check_budget(std::uint64_t count, const ModelBudget& budget) {
  if (!budget.unlimited && count > budget.max_models)
    throw BudgetError("enumeration would visit " +
                      (count == std::numeric_limits<std::uint64_t>::max()
                           ? std::string("more than 2^64")
                           : std::to_string(count)) +
                      " models, over the budget of " + std::to_string(budget.max_models));
}
}  // namespace detail

/// Checks the budget, then calls `fn(model)` for every model of size k;
/// stops early when `fn` returns false.
template <class Fn>
void enumerate_models(const Signature& sig, std::size_t k, Fn&& fn, const ModelBudget& budget = {},
                      CellValues values = CellValues::ThreeValued) {
  detail::check_budget(model_count(sig, k, values), budget);
  ModelEnumerator it(sig, k, values);
  Model m = Model::with_size(k);
  while (it.next(m))
    if (!fn(static_cast<const Model&>(m))) return;
}

/// Outcome of a bounded countermodel search. Without a countermodel the
/// verdict only says none exists up to `max_size`; it is not a proof.
struct BoundedVerdict {
  std::optional<Model> countermodel;
  std::size_t max_size = 0;
  std::uint64_t models_checked = 0;

  bool found_countermodel() const noexcept { return countermodel.has_value(); }
};

/// Total models over sizes 1..k.
inline std::uint64_t model_count_up_to(const Signature& sig, std::size_t k,
                                       CellValues values = CellValues::ThreeValued) {
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= k; ++s) total = detail::saturating_add(total, model_count(sig, s, values));
  return total;
}

/// Scans sizes 1..max_size for the first model satisfying every premise but
/// not the conclusion.
inline BoundedVerdict entails_bounded(std::span<const Formula> premises, const Formula& conclusion,
                                      const Signature& sig, std::size_t max_size,
                                      const ModelBudget& budget = {}) {
  if (max_size < 1) throw DomainError("maximum domain size must be at least 1");
  for (const auto& p : premises) check_signature(p, sig);
  check_signature(conclusion, sig);
  detail::check_budget(model_count_up_to(sig, max_size), budget);

  BoundedVerdict verdict;
  verdict.max_size = max_size;
  const std::span<const Formula> goal(&conclusion, 1);
  for (std::size_t k = 1; k <= max_size && !verdict.countermodel; ++k) {
    enumerate_models(
        sig, k,
        [&](const Model& m) {
          ++verdict.models_checked;
          if (satisfies(m, premises) && !satisfies(m, goal)) {
            verdict.countermodel = m;
            return false;
          }
          return true;
        },
        ModelBudget{0, true});
  }
  return verdict;
}

inline BoundedVerdict entails_bounded(std::initializer_list<Formula> premises,
                                      const Formula& conclusion, const Signature& sig,
                                      std::size_t max_size, const ModelBudget& budget = {}) {
  return entails_bounded(std::span(premises.begin(), premises.size()), conclusion, sig, max_size,
                         budget);
}

}  // namespace slp
