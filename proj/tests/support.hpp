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

// Shared helpers for the test suites: random formula generators and oracle
// evaluators that do not go through the library's evaluator.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slp/slp.hpp"

namespace slp::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Oracle on the half-scale: 0 = F, 1 = P, 2 = T (twice the numeric value).
namespace oracle {

inline int half(TruthValue v) {
  switch (v) {
    case TruthValue::Top: return 2;
    case TruthValue::Both: return 1;
    case TruthValue::Bot: return 0;
  }
  throw std::logic_error("bad truth value");
}

inline TruthValue from_half(int h) {
  if (h == 2) return TruthValue::Top;
  if (h == 1) return TruthValue::Both;
  if (h == 0) return TruthValue::Bot;
  throw std::logic_error("bad half value");
}

inline int neg(int a) { return 2 - a; }
inline int conj(int a, int b) { return std::min(a, b); }
inline int disj(int a, int b) { return std::max(a, b); }
inline int simp(int a, int b) { return a <= b ? 2 : 0; }

// Status operators written out column by column rather than by definition.
inline int status(int a, StatusTest t) {
  static const int top[3] = {0, 0, 2};  // indexed by half value F, P, T
  static const int both[3] = {0, 2, 0};
  static const int bot[3] = {2, 0, 0};
  static const int nf[3] = {0, 2, 2};
  static const int con[3] = {2, 0, 2};
  switch (t) {
    case StatusTest::IsTop: return top[a];
    case StatusTest::IsBoth: return both[a];
    case StatusTest::IsBot: return bot[a];
    case StatusTest::NotFalse: return nf[a];
    case StatusTest::Consistent: return con[a];
  }
  throw std::logic_error("bad status");
}

/// Three-valued value of a formula on a model (propositional atoms are
/// nullary relations). Domain elements are 0..size-1.
struct Evaluator {
  const Model* model = nullptr;
  const std::map<std::string, TruthValue>* valuation = nullptr;

  std::size_t term(const Term& t, const std::map<std::string, std::size_t>& a) const {
    if (t.is_variable()) return a.at(t.name);
    return model->constant(t.name);
  }

  int operator()(const Formula& f, std::map<std::string, std::size_t>& a) const {
    switch (f.op()) {
      case Op::Constant: return half(f.value());
      case Op::Relation: {
        if (valuation) return half(valuation->at(f.name()));
        std::vector<std::size_t> args;
        for (const auto& t : f.terms()) args.push_back(term(t, a));
        return half(model->get(f.name(), args));
      }
      case Op::Equality: return term(f.terms()[0], a) == term(f.terms()[1], a) ? 2 : 0;
      case Op::Not: return neg((*this)(f.lhs(), a));
      case Op::And: return conj((*this)(f.lhs(), a), (*this)(f.rhs(), a));
      case Op::Or: return disj((*this)(f.lhs(), a), (*this)(f.rhs(), a));
      case Op::StrongImp: return simp((*this)(f.lhs(), a), (*this)(f.rhs(), a));
      case Op::StrongIff: {
        const int x = (*this)(f.lhs(), a), y = (*this)(f.rhs(), a);
        return x == y ? 2 : 0;
      }
      case Op::WeakImp: return disj(neg((*this)(f.lhs(), a)), (*this)(f.rhs(), a));
      case Op::WeakIff: {
        const int x = (*this)(f.lhs(), a), y = (*this)(f.rhs(), a);
        return conj(disj(neg(x), y), disj(neg(y), x));
      }
      case Op::Status: return status((*this)(f.lhs(), a), f.test());
      case Op::Forall:
      case Op::Exists: {
        const bool all = f.op() == Op::Forall;
        int acc = all ? 2 : 0;
        auto saved = a.find(f.name()) == a.end() ? std::optional<std::size_t>{}
                                                 : std::optional<std::size_t>{a[f.name()]};
        for (std::size_t e = 0; e < model->size(); ++e) {
          a[f.name()] = e;
          const int v = (*this)(f.body(), a);
          acc = all ? conj(acc, v) : disj(acc, v);
        }
        if (saved)
          a[f.name()] = *saved;
        else
          a.erase(f.name());
        return acc;
      }
    }
    throw std::logic_error("bad op");
  }
};

inline TruthValue prop_value(const Formula& f, const std::map<std::string, TruthValue>& v) {
  Evaluator ev{nullptr, &v};
  std::map<std::string, std::size_t> a;
  return from_half(ev(f, a));
}

inline TruthValue fo_value(const Formula& f, const Model& m,
                           std::map<std::string, std::size_t> a = {}) {
  Evaluator ev{&m, nullptr};
  return from_half(ev(f, a));
}

/// Two-valued evaluation of the classical connectives over booleans.
inline bool classical_prop(const Formula& f, const std::map<std::string, bool>& v) {
  switch (f.op()) {
    case Op::Constant:
      if (f.value() == TruthValue::Both) throw std::logic_error("BOTH is not classical");
      return f.value() == TruthValue::Top;
    case Op::Relation: return v.at(f.name());
    case Op::Not: return !classical_prop(f.lhs(), v);
    case Op::And: return classical_prop(f.lhs(), v) && classical_prop(f.rhs(), v);
    case Op::Or: return classical_prop(f.lhs(), v) || classical_prop(f.rhs(), v);
    case Op::WeakImp:
    case Op::StrongImp: return !classical_prop(f.lhs(), v) || classical_prop(f.rhs(), v);
    case Op::WeakIff:
    case Op::StrongIff: return classical_prop(f.lhs(), v) == classical_prop(f.rhs(), v);
    default: throw std::logic_error("not a classical propositional formula");
  }
}

}  // namespace oracle

/// Every valuation of `atoms` (sorted), in the enumeration order T, P, F with
/// the last atom varying fastest.
inline std::vector<std::map<std::string, TruthValue>> all_valuations(std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  std::vector<std::map<std::string, TruthValue>> out;
  std::size_t n = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) n *= 3;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::string, TruthValue> v;
    std::size_t rest = i;
    for (std::size_t k = atoms.size(); k-- > 0;) {
      const std::size_t d = rest % 3;
      rest /= 3;
      v[atoms[k]] = d == 0 ? TruthValue::Top : d == 1 ? TruthValue::Both : TruthValue::Bot;
    }
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::string> atom_list(const Formula& f) {
  auto s = atoms_of(f);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Random formulas

enum class Conn { Not, And, Or, WeakImp, WeakIff, StrongImp, StrongIff };

/// Random propositional formula over `atoms` using `conns`; leaves may also be
/// the constants listed in `constants`.
inline Formula random_prop(Rng& rng, std::size_t depth, const std::vector<std::string>& atoms,
                           const std::vector<Conn>& conns,
                           const std::vector<TruthValue>& constants = {}) {
  const std::size_t leaves = atoms.size() + constants.size();
  if (depth == 0 || pick(rng, 4) == 0) {
    const std::size_t i = pick(rng, leaves);
    if (i < atoms.size()) return atom(atoms[i]);
    return constant(constants[i - atoms.size()]);
  }
  const Conn c = conns[pick(rng, conns.size())];
  auto sub = [&] { return random_prop(rng, depth - 1, atoms, conns, constants); };
  switch (c) {
    case Conn::Not: return neg(sub());
    case Conn::And: return conj(sub(), sub());
    case Conn::Or: return disj(sub(), sub());
    case Conn::WeakImp: return weak_imp(sub(), sub());
    case Conn::WeakIff: return weak_iff(sub(), sub());
    case Conn::StrongImp: return strong_imp(sub(), sub());
    case Conn::StrongIff: return strong_iff(sub(), sub());
  }
  throw std::logic_error("bad connective");
}

/// Signature used by the parser round-trip property: constants c, d;
/// nullary p, q, r; unary R; binary S.
inline Signature roundtrip_signature() {
  Signature sig;
  sig.add_constant("c");
  sig.add_constant("d");
  sig.add_relation("p", 0);
  sig.add_relation("q", 0);
  sig.add_relation("r", 0);
  sig.add_relation("R", 1);
  sig.add_relation("S", 2);
  return sig;
}

/// Options for first-order random formulas.
struct FoShape {
  std::vector<std::string> variables{"x", "y", "z"};
  std::vector<std::string> constants;       // constant symbols usable as terms
  std::map<std::string, std::size_t> relations;
  std::vector<TruthValue> truth_constants{TruthValue::Top, TruthValue::Both, TruthValue::Bot};
  bool equality = true;
  bool derived = true;  // Or, ->, <->, <=>, exists, status
};

inline Term random_term(Rng& rng, const FoShape& s) {
  const std::size_t n = s.variables.size() + s.constants.size();
  const std::size_t i = pick(rng, n);
  if (i < s.variables.size()) return Term::variable(s.variables[i]);
  return Term::constant(s.constants[i - s.variables.size()]);
}

inline Formula random_atomic(Rng& rng, const FoShape& s) {
  std::vector<std::pair<std::string, std::size_t>> rels(s.relations.begin(), s.relations.end());
  const std::size_t kinds = rels.size() + (s.equality ? 1 : 0) + (s.truth_constants.empty() ? 0 : 1);
  std::size_t k = pick(rng, kinds);
  if (k < rels.size()) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < rels[k].second; ++i) args.push_back(random_term(rng, s));
    return relation(rels[k].first, std::move(args));
  }
  k -= rels.size();
  if (s.equality && k == 0) return equality(random_term(rng, s), random_term(rng, s));
  return constant(s.truth_constants[pick(rng, s.truth_constants.size())]);
}

inline Formula random_fo(Rng& rng, std::size_t depth, const FoShape& s) {
  if (depth == 0 || pick(rng, 5) == 0) return random_atomic(rng, s);
  const std::size_t kinds = s.derived ? 12 : 4;
  auto sub = [&] { return random_fo(rng, depth - 1, s); };
  auto var = [&] { return s.variables[pick(rng, s.variables.size())]; };
  switch (pick(rng, kinds)) {
    case 0: return neg(sub());
    case 1: return conj(sub(), sub());
    case 2: return strong_imp(sub(), sub());
    case 3: return forall(var(), sub());
    case 4: return disj(sub(), sub());
    case 5: return weak_imp(sub(), sub());
    case 6: return weak_iff(sub(), sub());
    case 7: return strong_iff(sub(), sub());
    case 8: return exists(var(), sub());
    case 9:
    case 10:
    case 11: return status(sub(), kAllStatusTests[pick(rng, kAllStatusTests.size())]);
  }
  throw std::logic_error("unreachable");
}

inline FoShape roundtrip_shape() {
  FoShape s;
  s.constants = {"c", "d"};
  s.relations = {{"p", 0}, {"q", 0}, {"r", 0}, {"R", 1}, {"S", 2}};
  return s;
}

/// Every assignment of `vars` into a domain of `size` elements.
inline std::vector<std::map<std::string, std::size_t>> all_assignments(const std::set<std::string>& vars,
                                                                       std::size_t size) {
  std::vector<std::map<std::string, std::size_t>> out{{}};
  for (const auto& v : vars) {
    std::vector<std::map<std::string, std::size_t>> next;
    for (const auto& a : out)
      for (std::size_t e = 0; e < size; ++e) {
        auto b = a;
        b[v] = e;
        next.push_back(b);
      }
    out = std::move(next);
  }
  return out;
}

/// All models of a signature with domain size k, built by counting rather
/// than through the library enumerator.
inline std::vector<Model> brute_models(const Signature& sig, std::size_t k) {
  std::vector<Model> out;
  Model base = Model::with_size(k);
  std::vector<std::pair<std::string, std::vector<Element>>> cells;
  for (const auto& [name, arity] : sig.relations()) {
    base.add_relation(name, arity);
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) n *= k;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Element> t(arity);
      std::size_t rest = i;
      for (std::size_t j = arity; j-- > 0;) {
        t[j] = rest % k;
        rest /= k;
      }
      cells.emplace_back(name, t);
    }
  }
  std::vector<std::string> consts(sig.constants().begin(), sig.constants().end());
  std::size_t total = 1;
  for (std::size_t i = 0; i < consts.size(); ++i) total *= k;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= 3;
  for (std::size_t i = 0; i < total; ++i) {
    Model m = base;
    std::size_t rest = i;
    for (std::size_t j = cells.size(); j-- > 0;) {
      const std::size_t d = rest % 3;
      rest /= 3;
      m.set(cells[j].first, cells[j].second,
            d == 0 ? TruthValue::Top : d == 1 ? TruthValue::Both : TruthValue::Bot);
    }
    for (std::size_t j = consts.size(); j-- > 0;) {
      m.set_constant(consts[j], rest % k);
      rest /= k;
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// A model of `sig` with domain size k and uniformly random cells.
inline Model random_model(Rng& rng, const Signature& sig, std::size_t k) {
  Model m = Model::with_size(k);
  for (const auto& c : sig.constants()) m.set_constant(c, pick(rng, k));
  for (const auto& [name, arity] : sig.relations()) {
    m.add_relation(name, arity);
    for (std::size_t i = 0; i < m.cells(arity); ++i)
      m.set(name, m.tuple_at(arity, i), from_enumeration_index(pick(rng, 3)));
  }
  return m;
}

}  // namespace slp::testing
