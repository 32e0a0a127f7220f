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

#pragma once

#include <concepts>

#include "slp/syntax.hpp"
#include "slp/truth.hpp"

namespace slp {

/// What `evaluate` needs from its environment: atom lookup, term equality,
/// and iteration over the domain for a bound variable. `quantify` calls
/// `body` once per element with `var` bound and returns the fold of the
/// results (minimum for forall, maximum for exists).
template <class Env>
concept EvaluationEnv = requires(Env& env, const Formula& f, const Term& t, const std::string& v,
                                 TruthValue (*body)()) {
  { env.relation(f) } -> std::same_as<TruthValue>;
  { env.equality(t, t) } -> std::same_as<TruthValue>;
  { env.quantify(Op::Forall, v, body) } -> std::same_as<TruthValue>;
};

/// Compositional three-valued evaluation. Derived connectives are evaluated
/// with their truth functions directly; this agrees with evaluating the
/// desugared formula.
template <EvaluationEnv Env>
TruthValue evaluate(const Formula& f, Env& env) {
  switch (f.op()) {
    case Op::Constant: return f.value();
    case Op::Relation: return env.relation(f);
    case Op::Equality: return env.equality(f.terms()[0], f.terms()[1]);
    case Op::Not: return neg(evaluate(f.lhs(), env));
    case Op::Status: return status(evaluate(f.lhs(), env), f.test());
    case Op::Forall:
    case Op::Exists:
      return env.quantify(f.op(), f.name(), [&] { return evaluate(f.body(), env); });
    default: break;
  }
  const TruthValue a = evaluate(f.lhs(), env);
  const TruthValue b = evaluate(f.rhs(), env);
  switch (f.op()) {
    case Op::And: return conj(a, b);
    case Op::Or: return disj(a, b);
    case Op::WeakImp: return weak_imp(a, b);
    case Op::WeakIff: return weak_iff(a, b);
    case Op::StrongImp: return strong_imp(a, b);
    case Op::StrongIff: return strong_iff(a, b);
    default: break;
  }
  return a;  // unreachable
}

}  // namespace slp
