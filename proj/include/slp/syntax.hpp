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
  \file syntax.hpp
  \brief Signatures, terms and immutable formula trees.

  The primitive basis is {constant, relation, equality, ~, &, =>, forall}.
  Or, ->, <->, <=>, exists and the status operators are kept as nodes of
  their own so that printing is faithful; `desugar` removes them.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slp/error.hpp"
#include "slp/truth.hpp"

namespace slp {

/// Constant symbols and relation symbols with arities. No function symbols.
class Signature {
 public:
  Signature() = default;

  void add_constant(const std::string& name) {
    if (relations_.contains(name))
      throw DomainError("symbol '" + name + "' is already a relation");
    constants_.insert(name);
  }

  void add_relation(const std::string& name, std::size_t arity) {
    if (constants_.contains(name))
      throw DomainError("symbol '" + name + "' is already a constant");
    auto [it, inserted] = relations_.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw ArityError("relation '" + name + "' declared with arity " + std::to_string(it->second) +
                       " and " + std::to_string(arity));
  }

  bool has_constant(const std::string& name) const { return constants_.contains(name); }
  bool has_relation(const std::string& name) const { return relations_.contains(name); }

  std::optional<std::size_t> arity(const std::string& name) const {
    auto it = relations_.find(name);
    if (it == relations_.end()) return std::nullopt;
    return it->second;
  }

  const std::set<std::string>& constants() const noexcept { return constants_; }
  const std::map<std::string, std::size_t>& relations() const noexcept { return relations_; }

  bool empty() const noexcept { return constants_.empty() && relations_.empty(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::set<std::string> constants_;
  std::map<std::string, std::size_t> relations_;
};

struct Term {
  enum class Kind : std::uint8_t { Variable, Constant };
  Kind kind = Kind::Variable;
  std::string name;

  static Term variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }

  bool is_variable() const noexcept { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class Op : std::uint8_t {
  Constant,
  Relation,
  Equality,
  Not,
  And,
  StrongImp,
  Forall,
  // derived
  Or,
  WeakImp,
  WeakIff,
  StrongIff,
  Exists,
  Status
};

constexpr bool is_primitive(Op op) noexcept { return op <= Op::Forall; }
constexpr bool is_binary(Op op) noexcept {
  return op == Op::And || op == Op::StrongImp || op == Op::Or || op == Op::WeakImp ||
         op == Op::WeakIff || op == Op::StrongIff;
}
constexpr bool is_quantifier(Op op) noexcept { return op == Op::Forall || op == Op::Exists; }

class Formula;

namespace detail {
struct Node;
}

/// Immutable formula tree with value semantics. Copies share structure.
class Formula {
 public:
  /// A default-constructed formula is the constant Top.
  Formula();

  Op op() const noexcept;
  TruthValue value() const noexcept;              // Constant
  const std::string& name() const noexcept;       // Relation symbol or bound variable
  const std::vector<Term>& terms() const noexcept;  // Relation arguments, or the two sides of Equality
  StatusTest test() const noexcept;               // Status
  const Formula& lhs() const noexcept;            // Not/Status/quantifier body, binary left side
  const Formula& rhs() const noexcept;            // binary right side
  const Formula& body() const noexcept { return lhs(); }

  std::size_t size() const noexcept;  // number of nodes
  std::size_t depth() const noexcept;  // atoms have depth 0

  friend bool operator==(const Formula& a, const Formula& b);

  // Construction.
  static Formula constant(TruthValue v);
  static Formula relation(std::string name, std::vector<Term> args = {});
  static Formula equality(Term a, Term b);
  static Formula unary(Op op, Formula a);
  static Formula binary(Op op, Formula a, Formula b);
  static Formula quantifier(Op op, std::string var, Formula body);
  static Formula status(Formula a, StatusTest which);

 private:
  explicit Formula(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

namespace detail {
struct Node {
  Op op = Op::Constant;
  TruthValue value = TruthValue::Top;
  StatusTest test = StatusTest::Consistent;
  std::string name;
  std::vector<Term> terms;
  Formula lhs;
  Formula rhs;
  std::size_t size = 1;
  std::size_t depth = 0;
};

}  // namespace detail

inline Formula::Formula() : node_(nullptr) {}

inline Op Formula::op() const noexcept { return node_ ? node_->op : Op::Constant; }
inline TruthValue Formula::value() const noexcept {
  return node_ ? node_->value : TruthValue::Top;
}
inline const std::string& Formula::name() const noexcept {
  static const std::string empty;
  return node_ ? node_->name : empty;
}
inline const std::vector<Term>& Formula::terms() const noexcept {
  static const std::vector<Term> empty;
  return node_ ? node_->terms : empty;
}
inline StatusTest Formula::test() const noexcept {
  return node_ ? node_->test : StatusTest::Consistent;
}
inline const Formula& Formula::lhs() const noexcept {
  static const Formula top;
  return node_ ? node_->lhs : top;
}
inline const Formula& Formula::rhs() const noexcept {
  static const Formula top;
  return node_ ? node_->rhs : top;
}
inline std::size_t Formula::size() const noexcept { return node_ ? node_->size : 1; }
inline std::size_t Formula::depth() const noexcept { return node_ ? node_->depth : 0; }

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.size() != b.size()) return false;
  switch (a.op()) {
    case Op::Constant: return a.value() == b.value();
    case Op::Relation:
    case Op::Equality: return a.name() == b.name() && a.terms() == b.terms();
    case Op::Not: return a.lhs() == b.lhs();
    case Op::Status: return a.test() == b.test() && a.lhs() == b.lhs();
    case Op::Forall:
    case Op::Exists: return a.name() == b.name() && a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

inline Formula Formula::constant(TruthValue v) {
  auto n = std::make_shared<detail::Node>();
  n->op = Op::Constant;
  n->value = v;
  return Formula(std::move(n));
}

inline Formula Formula::relation(std::string name, std::vector<Term> args) {
  auto n = std::make_shared<detail::Node>();
  n->op = Op::Relation;
  n->name = std::move(name);
  n->terms = std::move(args);
  return Formula(std::move(n));
}

inline Formula Formula::equality(Term a, Term b) {
  auto n = std::make_shared<detail::Node>();
  n->op = Op::Equality;
  n->terms = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

inline Formula Formula::unary(Op op, Formula a) {
  if (op != Op::Not) throw DomainError("not a unary connective");
  auto n = std::make_shared<detail::Node>();
  n->op = op;
  n->size = a.size() + 1;
  n->depth = a.depth() + 1;
  n->lhs = std::move(a);
  return Formula(std::move(n));
}

inline Formula Formula::binary(Op op, Formula a, Formula b) {
  if (!is_binary(op)) throw DomainError("not a binary connective");
  auto n = std::make_shared<detail::Node>();
  n->op = op;
  n->size = a.size() + b.size() + 1;
  n->depth = std::max(a.depth(), b.depth()) + 1;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Formula(std::move(n));
}

inline Formula Formula::quantifier(Op op, std::string var, Formula body) {
  if (!is_quantifier(op)) throw DomainError("not a quantifier");
  auto n = std::make_shared<detail::Node>();
  n->op = op;
  n->name = std::move(var);
  n->size = body.size() + 1;
  n->depth = body.depth() + 1;
  n->lhs = std::move(body);
  return Formula(std::move(n));
}

inline Formula Formula::status(Formula a, StatusTest which) {
  auto n = std::make_shared<detail::Node>();
  n->op = Op::Status;
  n->test = which;
  n->size = a.size() + 1;
  n->depth = a.depth() + 1;
  n->lhs = std::move(a);
  return Formula(std::move(n));
}

// Builders named after the truth-value connectives they denote.

inline Formula constant(TruthValue v) { return Formula::constant(v); }
inline Formula atom(std::string name) { return Formula::relation(std::move(name)); }
inline Formula relation(std::string name, std::vector<Term> args) {
  return Formula::relation(std::move(name), std::move(args));
}
inline Formula equality(Term a, Term b) { return Formula::equality(std::move(a), std::move(b)); }
inline Formula neg(Formula a) { return Formula::unary(Op::Not, std::move(a)); }
inline Formula conj(Formula a, Formula b) {
  return Formula::binary(Op::And, std::move(a), std::move(b));
}
inline Formula disj(Formula a, Formula b) {
  return Formula::binary(Op::Or, std::move(a), std::move(b));
}
inline Formula weak_imp(Formula a, Formula b) {
  return Formula::binary(Op::WeakImp, std::move(a), std::move(b));
}
inline Formula weak_iff(Formula a, Formula b) {
  return Formula::binary(Op::WeakIff, std::move(a), std::move(b));
}
inline Formula strong_imp(Formula a, Formula b) {
  return Formula::binary(Op::StrongImp, std::move(a), std::move(b));
}
inline Formula strong_iff(Formula a, Formula b) {
  return Formula::binary(Op::StrongIff, std::move(a), std::move(b));
}
inline Formula forall(std::string var, Formula body) {
  return Formula::quantifier(Op::Forall, std::move(var), std::move(body));
}
inline Formula exists(std::string var, Formula body) {
  return Formula::quantifier(Op::Exists, std::move(var), std::move(body));
}
inline Formula status(Formula a, StatusTest which) { return Formula::status(std::move(a), which); }

/// Pre-order traversal.
inline void for_each_subformula(const Formula& f, const std::function<void(const Formula&)>& fn) {
  fn(f);
  switch (f.op()) {
    case Op::Constant:
    case Op::Relation:
    case Op::Equality: return;
    case Op::Not:
    case Op::Status:
    case Op::Forall:
    case Op::Exists: for_each_subformula(f.lhs(), fn); return;
    default:
      for_each_subformula(f.lhs(), fn);
      for_each_subformula(f.rhs(), fn);
  }
}

namespace detail {
inline void collect_free(const Formula& f, std::set<std::string>& bound,
                         std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Constant: return;
    case Op::Relation:
    case Op::Equality:
      for (const auto& t : f.terms())
        if (t.is_variable() && !bound.contains(t.name)) out.insert(t.name);
      return;
    case Op::Forall:
    case Op::Exists: {
      bool fresh = bound.insert(f.name()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.name());
      return;
    }
    case Op::Not:
    case Op::Status: collect_free(f.lhs(), bound, out); return;
    default:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
  }
}
}  // namespace detail

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  detail::collect_free(f, bound, out);
  return out;
}

/// Every variable name occurring in `f`, free or bound.
inline std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  for_each_subformula(f, [&](const Formula& g) {
    if (is_quantifier(g.op())) out.insert(g.name());
    if (g.op() == Op::Relation || g.op() == Op::Equality)
      for (const auto& t : g.terms())
        if (t.is_variable()) out.insert(t.name);
  });
  return out;
}

/// Names of nullary relations (propositional atoms), sorted.
inline std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  for_each_subformula(f, [&](const Formula& g) {
    if (g.op() == Op::Relation && g.terms().empty()) out.insert(g.name());
  });
  return out;
}

/// Relation symbols with their arities as used in `f`.
inline void collect_relations(const Formula& f, Signature& sig) {
  for_each_subformula(f, [&](const Formula& g) {
    if (g.op() == Op::Relation) sig.add_relation(g.name(), g.terms().size());
  });
}

inline bool contains_constant(const Formula& f, TruthValue v) {
  bool found = false;
  for_each_subformula(f, [&](const Formula& g) {
    if (g.op() == Op::Constant && g.value() == v) found = true;
  });
  return found;
}

inline bool is_desugared(const Formula& f) {
  bool ok = true;
  for_each_subformula(f, [&](const Formula& g) { ok = ok && is_primitive(g.op()); });
  return ok;
}

/// The formula a status operator abbreviates, in terms of => and <=>.
inline Formula status_definition(const Formula& p, StatusTest which) {
  const auto top = constant(TruthValue::Top);
  const auto both = constant(TruthValue::Both);
  const auto bot = constant(TruthValue::Bot);
  switch (which) {
    case StatusTest::IsTop: return strong_imp(top, p);
    case StatusTest::IsBoth: return strong_iff(p, both);
    case StatusTest::IsBot: return strong_imp(p, bot);
    case StatusTest::NotFalse: return strong_imp(both, p);
    case StatusTest::Consistent: break;
  }
  return strong_imp(p, status(p, StatusTest::IsTop));
}

/// Rewrites every derived node into the primitive basis.
inline Formula desugar(const Formula& f) {
  switch (f.op()) {
    case Op::Constant:
    case Op::Relation:
    case Op::Equality: return f;
    case Op::Not: return neg(desugar(f.lhs()));
    case Op::And: return conj(desugar(f.lhs()), desugar(f.rhs()));
    case Op::StrongImp: return strong_imp(desugar(f.lhs()), desugar(f.rhs()));
    case Op::Forall: return forall(f.name(), desugar(f.body()));
    case Op::Or: return neg(conj(neg(desugar(f.lhs())), neg(desugar(f.rhs()))));
    case Op::WeakImp: return desugar(disj(neg(f.lhs()), f.rhs()));
    case Op::WeakIff:
      return desugar(conj(weak_imp(f.lhs(), f.rhs()), weak_imp(f.rhs(), f.lhs())));
    case Op::StrongIff: {
      auto a = desugar(f.lhs());
      auto b = desugar(f.rhs());
      return conj(strong_imp(a, b), strong_imp(b, a));
    }
    case Op::Exists: return neg(forall(f.name(), neg(desugar(f.body()))));
    case Op::Status: return desugar(status_definition(f.lhs(), f.test()));
  }
  return f;
}

namespace detail {
inline std::string fresh_variable(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t i = 1;; ++i) {
    auto candidate = base + "_" + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}
}  // namespace detail

/// Simultaneous capture-avoiding substitution of terms for free variables.
inline Formula substitute(const Formula& f, const std::map<std::string, Term>& sub) {
  if (sub.empty()) return f;
  auto map_term = [&](const Term& t) {
    if (!t.is_variable()) return t;
    auto it = sub.find(t.name);
    return it == sub.end() ? t : it->second;
  };
  switch (f.op()) {
    case Op::Constant: return f;
    case Op::Relation: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(map_term(t));
      return relation(f.name(), std::move(args));
    }
    case Op::Equality: return equality(map_term(f.terms()[0]), map_term(f.terms()[1]));
    case Op::Not: return neg(substitute(f.lhs(), sub));
    case Op::Status: return status(substitute(f.lhs(), sub), f.test());
    case Op::Forall:
    case Op::Exists: {
      auto inner = sub;
      inner.erase(f.name());
      if (inner.empty()) return f;
      auto body_free = free_vars(f.body());
      bool captures = false;
      for (const auto& [var, term] : inner)
        if (body_free.contains(var) && term.is_variable() && term.name == f.name()) captures = true;
      if (!captures) return Formula::quantifier(f.op(), f.name(), substitute(f.body(), inner));
      std::set<std::string> avoid = all_vars(f.body());
      for (const auto& [var, term] : inner) {
        avoid.insert(var);
        if (term.is_variable()) avoid.insert(term.name);
      }
      auto renamed = detail::fresh_variable(f.name(), avoid);
      inner[f.name()] = Term::variable(renamed);
      return Formula::quantifier(f.op(), renamed, substitute(f.body(), inner));
    }
    default:
      return Formula::binary(f.op(), substitute(f.lhs(), sub), substitute(f.rhs(), sub));
  }
}

/// Checks relation arities and constant symbols against `sig`.
inline void check_signature(const Formula& f, const Signature& sig) {
  for_each_subformula(f, [&](const Formula& g) {
    if (g.op() != Op::Relation && g.op() != Op::Equality) return;
    if (g.op() == Op::Relation) {
      auto ar = sig.arity(g.name());
      if (!ar) throw UnknownSymbolError("unknown relation symbol '" + g.name() + "'");
      if (*ar != g.terms().size())
        throw ArityError("relation '" + g.name() + "' has arity " + std::to_string(*ar) +
                         " but is applied to " + std::to_string(g.terms().size()) + " argument(s)");
    }
    for (const auto& t : g.terms())
      if (!t.is_variable() && !sig.has_constant(t.name))
        throw UnknownSymbolError("unknown constant symbol '" + t.name + "'");
  });
}

}  // namespace slp
