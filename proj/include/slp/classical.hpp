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
  \file classical.hpp
  \brief Two-valued semantics on consistent models, translation of strong
         implication into material implication, the consistency axiom
         schema, and embeddings of classical theories.
*/

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slp/format.hpp"
#include "slp/model.hpp"
#include "slp/syntax.hpp"

namespace slp {

/// Maps => to ->, <=> to <->, and status operators to the classical reading
/// of their definitions; every other node is kept. BOTH has no classical
/// counterpart and is rejected, as are the status operators whose
/// definitions mention it (^p, ^nf).
inline Formula translate_to_classical(const Formula& f) {
  switch (f.op()) {
    case Op::Constant:
      if (f.value() == TruthValue::Both)
        throw DomainError("the constant BOTH has no classical translation");
      return f;
    case Op::Relation:
    case Op::Equality: return f;
    case Op::Not: return neg(translate_to_classical(f.lhs()));
    case Op::Status: return translate_to_classical(status_definition(f.lhs(), f.test()));
    case Op::StrongImp:
      return weak_imp(translate_to_classical(f.lhs()), translate_to_classical(f.rhs()));
    case Op::StrongIff:
      return weak_iff(translate_to_classical(f.lhs()), translate_to_classical(f.rhs()));
    case Op::Forall:
    case Op::Exists:
      return Formula::quantifier(f.op(), f.name(), translate_to_classical(f.body()));
    default:
      return Formula::binary(f.op(), translate_to_classical(f.lhs()),
                             translate_to_classical(f.rhs()));
  }
}

namespace detail {

inline bool classical_value(const Formula& f, const Model& m, Assignment& a) {
  switch (f.op()) {
    case Op::Constant:
      if (f.value() == TruthValue::Both)
        throw EvalError("the constant BOTH has no classical value");
      return f.value() == TruthValue::Top;
    case Op::Relation: {
      std::vector<Element> args;
      for (const auto& t : f.terms()) args.push_back(val(t, m, a));
      return m.get(f.name(), args) == TruthValue::Top;
    }
    case Op::Equality: return val(f.terms()[0], m, a) == val(f.terms()[1], m, a);
    case Op::Not: return !classical_value(f.lhs(), m, a);
    case Op::Status:
      return classical_value(translate_to_classical(f), m, a);
    case Op::Forall:
    case Op::Exists: {
      auto saved = a.find(f.name()) == a.end() ? std::optional<Element>{}
                                               : std::optional<Element>{a[f.name()]};
      const bool universal = f.op() == Op::Forall;
      bool result = universal;
      for (Element e = 0; e < m.size() && result == universal; ++e) {
        a[f.name()] = e;
        result = classical_value(f.body(), m, a);
      }
      if (saved)
        a[f.name()] = *saved;
      else
        a.erase(f.name());
      return result;
    }
    default: break;
  }
  const bool x = classical_value(f.lhs(), m, a);
  const bool y = classical_value(f.rhs(), m, a);
  switch (f.op()) {
    case Op::And: return x && y;
    case Op::Or: return x || y;
    case Op::WeakImp:
    case Op::StrongImp: return !x || y;
    default: return x == y;  // <-> and <=>
  }
}

}  // namespace detail

/// Two-valued evaluation. Strong and weak connectives coincide classically.
/// Defined only on consistent models.
inline bool classical_eval(const Formula& f, const Model& m, const Assignment& a = {}) {
  if (!model_consistent(m))
    throw EvalError("classical evaluation needs a consistent model (a relation takes value P)");
  Assignment scratch = a;
  return detail::classical_value(f, m, scratch);
}

/// Every formula true under every assignment of its free variables.
inline bool classically_satisfies(const Model& m, std::span<const Formula> theory) {
  for (const auto& f : theory) {
    bool ok = true;
    for_each_assignment(m, free_vars(f), [&](const Assignment& a) {
      ok = classical_eval(f, m, a);
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

/// First consistent model of size 1..max_size classically satisfying
/// `theory`, if any.
inline std::optional<Model> find_classical_model(std::span<const Formula> theory,
                                                 const Signature& sig, std::size_t max_size,
                                                 const ModelBudget& budget = {}) {
  for (const auto& f : theory) check_signature(f, sig);
  detail::check_budget(model_count_up_to(sig, max_size, CellValues::Classical), budget);
  std::optional<Model> found;
  for (std::size_t k = 1; k <= max_size && !found; ++k)
    enumerate_models(
        sig, k,
        [&](const Model& m) {
          if (classically_satisfies(m, theory)) found = m;
          return !found;
        },
        ModelBudget{0, true}, CellValues::Classical);
  return found;
}

/// Bound variable names for an n-ary relation in the schema: x for unary,
/// x1..xn otherwise.
inline std::vector<std::string> schema_variables(std::size_t arity) {
  if (arity == 1) return {"x"};
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= arity; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

/// One universally closed R(x1..xn)^c per relation of `sig`, in name order.
inline std::vector<Formula> consistency_schema(const Signature& sig) {
  std::vector<Formula> out;
  for (const auto& [name, arity] : sig.relations()) {
    const auto vars = schema_variables(arity);
    std::vector<Term> args;
    for (const auto& v : vars) args.push_back(Term::variable(v));
    Formula f = status(relation(name, std::move(args)), StatusTest::Consistent);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = forall(*it, f);
    out.push_back(f);
  }
  return out;
}

struct SchemaReport {
  std::uint64_t models_checked = 0;
  std::uint64_t consistent_models = 0;
  std::uint64_t schema_models = 0;
  std::uint64_t inconsistent_schema_models = 0;  // satisfy the schema but contain P
  std::uint64_t consistent_non_schema_models = 0;  // consistent but fail the schema

  bool holds() const noexcept {
    return inconsistent_schema_models == 0 && consistent_non_schema_models == 0;
  }
};

/// Checks, over every model of size 1..max_size, that satisfying the
/// consistency schema coincides with being a consistent model.
inline SchemaReport schema_forces_consistency(const Signature& sig, std::size_t max_size,
                                              const ModelBudget& budget = {}) {
  detail::check_budget(model_count_up_to(sig, max_size), budget);
  const auto schema = consistency_schema(sig);
  SchemaReport r;
  for (std::size_t k = 1; k <= max_size; ++k)
    enumerate_models(
        sig, k,
        [&](const Model& m) {
          ++r.models_checked;
          const bool consistent = model_consistent(m);
          const bool in_schema = satisfies(m, schema);
          r.consistent_models += consistent;
          r.schema_models += in_schema;
          r.inconsistent_schema_models += in_schema && !consistent;
          r.consistent_non_schema_models += consistent && !in_schema;
          return true;
        },
        ModelBudget{0, true});
  return r;
}

/// A formula with named parameters, e.g. rho_R(x1, x2) or kappa(x).
struct Interpretation {
  std::vector<std::string> params;
  Formula formula;
};

/// Interprets each classical relation R by a formula rho_R and the classical
/// domain by a class formula kappa.
///
/// A parameter need not occur free in its formula (kappa may be TRUE), but
/// every free variable must be a parameter.
struct Embedding {
  std::map<std::string, Interpretation> rho;
  Interpretation kappa;

  void validate() const {
    auto check = [](const std::string& what, const Interpretation& i) {
      std::set<std::string> params(i.params.begin(), i.params.end());
      if (params.size() != i.params.size())
        throw FormatError(what + " has duplicate parameters");
      for (const auto& v : free_vars(i.formula))
        if (!params.contains(v))
          throw FormatError(what + " has free variable '" + v + "' that is not a parameter");
    };
    for (const auto& [name, i] : rho) check("rho for '" + name + "'", i);
    if (kappa.params.size() != 1) throw FormatError("kappa must have exactly one parameter");
    check("kappa", kappa);
  }

  /// Classical signature: the relations rho interprets.
  Signature source_signature() const {
    Signature sig;
    for (const auto& [name, i] : rho) sig.add_relation(name, i.params.size());
    return sig;
  }
};

namespace detail {

inline Formula instantiate(const Interpretation& i, const std::vector<Term>& args) {
  std::map<std::string, Term> sub;
  for (std::size_t k = 0; k < i.params.size(); ++k) sub.emplace(i.params[k], args[k]);
  return substitute(i.formula, sub);
}

inline Formula embed(const Formula& f, const Embedding& e) {
  switch (f.op()) {
    case Op::Relation: {
      auto it = e.rho.find(f.name());
      if (it == e.rho.end())
        throw UnknownSymbolError("embedding has no interpretation for relation '" + f.name() + "'");
      if (it->second.params.size() != f.terms().size())
        throw ArityError("relation '" + f.name() + "' is interpreted with arity " +
                         std::to_string(it->second.params.size()) + " but applied to " +
                         std::to_string(f.terms().size()) + " argument(s)");
      return instantiate(it->second, f.terms());
    }
    case Op::Not: return neg(embed(f.lhs(), e));
    case Op::And: return conj(embed(f.lhs(), e), embed(f.rhs(), e));
    case Op::Forall:
      return forall(f.name(),
                    strong_imp(instantiate(e.kappa, {Term::variable(f.name())}), embed(f.body(), e)));
    case Op::Constant: return f;  // TRUE and FALSE
    default: break;
  }
  throw DomainError("cannot translate '" + format_formula(f) + "': not a classical formula");
}

inline void check_classical_syntax(const Formula& f) {
  for_each_subformula(f, [](const Formula& g) {
    switch (g.op()) {
      case Op::Constant:
        if (g.value() == TruthValue::Both)
          throw DomainError("BOTH does not occur in classical formulas");
        break;
      case Op::Relation:
        for (const auto& t : g.terms())
          if (!t.is_variable())
            throw DomainError("constant symbol '" + t.name +
                              "' not allowed in an embedded classical formula");
        break;
      case Op::Equality: throw DomainError("equality is not supported by embeddings");
      case Op::StrongImp:
      case Op::StrongIff:
      case Op::Status:
        throw DomainError("'" + format_formula(g) + "' is not a classical formula");
      default: break;
    }
  });
}

}  // namespace detail

/// Translates a classical formula: R(x..) becomes rho_R(x..), ~ and & are
/// kept, and forall x. phi becomes forall x. (kappa(x) => tr(phi)). Derived
/// classical connectives (|, ->, <->, exists) are desugared into ~, &, forall
/// first.
inline Formula embed_translate(const Formula& phi, const Embedding& e) {
  detail::check_classical_syntax(phi);
  return detail::embed(desugar(phi), e);
}

struct EmbeddingCheck {
  enum class Kind : std::uint8_t { Consistency, Theorem };
  Kind kind;
  Formula sentence;
  Formula translated;  // tr(phi)^c for consistency checks, tr(phi) for theorems
  bool passed;
};

struct EmbeddingReport {
  std::vector<EmbeddingCheck> checks;

  bool all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

/// On a single target model: each sentence must have a consistent
/// translation, each theorem a designated translation. This samples the
/// embedding conditions; it does not certify an embedding.
inline EmbeddingReport check_embedding(const Embedding& e, std::span<const Formula> sentences,
                                       const Model& target, std::span<const Formula> theorems) {
  e.validate();
  const Signature sig = target.signature();
  auto in_target = [&](const Formula& f, const std::string& what) {
    try {
      check_signature(f, sig);
    } catch (const Error& err) {
      throw FormatError("signature mismatch in " + what + ": " + err.what());
    }
  };
  for (const auto& [name, i] : e.rho) in_target(i.formula, "rho for '" + name + "'");
  in_target(e.kappa.formula, "kappa");

  EmbeddingReport report;
  for (const auto& phi : sentences) {
    auto f = status(embed_translate(phi, e), StatusTest::Consistent);
    report.checks.push_back(
        {EmbeddingCheck::Kind::Consistency, phi, f, satisfies(target, std::span(&f, 1))});
  }
  for (const auto& phi : theorems) {
    auto f = embed_translate(phi, e);
    report.checks.push_back(
        {EmbeddingCheck::Kind::Theorem, phi, f, satisfies(target, std::span(&f, 1))});
  }
  return report;
}

}  // namespace slp
