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
  \file format.hpp
  \brief Printing formulas in the concrete grammar with minimal parentheses.

  Precedence, tightest first:

      ^t ^p ^f ^nf ^c     postfix status
      ~                   prefix
      &                   left-associative
      |                   left-associative
      ->  =>              right-associative
      <-> <=>             right-associative

  `forall x.` and `exists x.` extend as far right as possible, so a
  quantifier is printed bare only when nothing follows it.
*/

#pragma once

#include <ostream>
#include <string>

#include "slp/syntax.hpp"

namespace slp {

namespace detail {

constexpr int kPrecIff = 1;
constexpr int kPrecImp = 2;
constexpr int kPrecOr = 3;
constexpr int kPrecAnd = 4;
constexpr int kPrecNot = 5;
constexpr int kPrecStatus = 6;
constexpr int kPrecAtom = 7;

constexpr int precedence(Op op) noexcept {
  switch (op) {
    case Op::Constant:
    case Op::Relation:
    case Op::Equality: return kPrecAtom;
    case Op::Status: return kPrecStatus;
    case Op::Not: return kPrecNot;
    case Op::And: return kPrecAnd;
    case Op::Or: return kPrecOr;
    case Op::WeakImp:
    case Op::StrongImp: return kPrecImp;
    case Op::WeakIff:
    case Op::StrongIff: return kPrecIff;
    case Op::Forall:
    case Op::Exists: return 0;
  }
  return 0;
}

constexpr const char* binary_symbol(Op op) noexcept {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::WeakImp: return " -> ";
    case Op::StrongImp: return " => ";
    case Op::WeakIff: return " <-> ";
    case Op::StrongIff: return " <=> ";
    default: return " ? ";
  }
}

constexpr bool left_associative(Op op) noexcept { return op == Op::And || op == Op::Or; }

inline const char* constant_name(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::Top: return "TRUE";
    case TruthValue::Both: return "BOTH";
    case TruthValue::Bot: break;
  }
  return "FALSE";
}

inline void write_terms(std::string& out, const std::vector<Term>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    out += ts[i].name;
  }
}

// `min_prec`: the weakest precedence allowed without parentheses here.
// `rightmost`: nothing is printed after this subformula.
inline void write_formula(std::string& out, const Formula& f, int min_prec, bool rightmost) {
  const int prec = precedence(f.op());
  const bool quantifier = is_quantifier(f.op());
  const bool parens = quantifier ? !rightmost : prec < min_prec;
  if (parens) {
    out += '(';
    write_formula(out, f, 0, true);
    out += ')';
    return;
  }
  switch (f.op()) {
    case Op::Constant: out += constant_name(f.value()); return;
    case Op::Relation:
      out += f.name();
      if (!f.terms().empty()) {
        out += '(';
        write_terms(out, f.terms());
        out += ')';
      }
      return;
    case Op::Equality:
      out += f.terms()[0].name;
      out += " = ";
      out += f.terms()[1].name;
      return;
    case Op::Status:
      write_formula(out, f.lhs(), kPrecStatus, false);
      out += '^';
      out += status_suffix(f.test());
      return;
    case Op::Not:
      out += '~';
      write_formula(out, f.lhs(), kPrecNot, rightmost);
      return;
    case Op::Forall:
    case Op::Exists:
      out += f.op() == Op::Forall ? "forall " : "exists ";
      out += f.name();
      out += ". ";
      write_formula(out, f.body(), 0, rightmost);
      return;
    default: {
      const bool left = left_associative(f.op());
      write_formula(out, f.lhs(), left ? prec : prec + 1, false);
      out += binary_symbol(f.op());
      write_formula(out, f.rhs(), left ? prec + 1 : prec, rightmost);
      return;
    }
  }
}

}  // namespace detail

inline std::string format_formula(const Formula& f) {
  std::string out;
  detail::write_formula(out, f, 0, true);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << format_formula(f);
}

}  // namespace slp
