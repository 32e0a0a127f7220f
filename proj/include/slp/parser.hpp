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
  \file parser.hpp
  \brief Recursive-descent parser for the formula grammar.

      formula  ::= imp (("<->" | "<=>") formula)?
      imp      ::= or  (("->"  | "=>")  imp)?
      or       ::= and ("|" and)*
      and      ::= unary ("&" unary)*
      unary    ::= "~" unary | ("forall" | "exists") IDENT "." formula | postfix
      postfix  ::= primary ("^t" | "^p" | "^f" | "^nf" | "^c")*
      primary  ::= "(" formula ")" | "TRUE" | "BOTH" | "FALSE"
                 | IDENT "(" term ("," term)* ")" | term "=" term | IDENT
      term     ::= IDENT

  Identifiers are `[A-Za-z_][A-Za-z0-9_]*`. A bare identifier in formula
  position is a nullary relation. In term position it is a constant when the
  signature declares it as one, otherwise a variable.
*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "slp/format.hpp"
#include "slp/syntax.hpp"

namespace slp {

namespace detail {

enum class Tok : std::uint8_t {
  End,
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Tilde,
  Amp,
  Bar,
  WeakImp,    // ->
  StrongImp,  // =>
  WeakIff,    // <->
  StrongIff,  // <=>
  Equals,     // =
  Caret       // ^suffix; text holds the suffix
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    auto take = [&](Tok k, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) advance();
      t.kind = k;
      return t;
    };
    switch (c) {
      case '(': return take(Tok::LParen, 1);
      case ')': return take(Tok::RParen, 1);
      case ',': return take(Tok::Comma, 1);
      case '.': return take(Tok::Dot, 1);
      case '~': return take(Tok::Tilde, 1);
      case '&': return take(Tok::Amp, 1);
      case '|': return take(Tok::Bar, 1);
      case '-':
        if (peek(1) == '>') return take(Tok::WeakImp, 2);
        break;
      case '=':
        if (peek(1) == '>') return take(Tok::StrongImp, 2);
        return take(Tok::Equals, 1);
      case '<':
        if (peek(1) == '-' && peek(2) == '>') return take(Tok::WeakIff, 3);
        if (peek(1) == '=' && peek(2) == '>') return take(Tok::StrongIff, 3);
        break;
      case '^': {
        advance();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
          advance();
        t.kind = Tok::Caret;
        t.text = std::string(src_.substr(start, pos_ - start));
        if (!status_from_suffix(t.text))
          throw ParseError("unknown status operator '^" + t.text + "'", t.line, t.column);
        return t;
      }
      default: break;
    }
    throw ParseError("unexpected character '" + printable(c) + "'", t.line, t.column);
  }

 private:
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  static std::string printable(char c) {
    if (static_cast<unsigned char>(c) >= 0x80) return "non-ASCII character";
    return std::string(1, c);
  }

  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;  // count code points, not UTF-8 continuation bytes
    }
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "TRUE" || s == "BOTH" || s == "FALSE";
}

class Parser {
 public:
  // With `infer` set, unknown relations are added to it; otherwise they must
  // already be in `sig`.
  Parser(std::string_view src, const Signature& sig, Signature* infer)
      : lexer_(src), sig_(sig), infer_(infer) {
    tok_ = lexer_.next();
  }

  Formula parse() {
    auto f = formula();
    if (tok_.kind != Tok::End) fail("unexpected " + describe(tok_));
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.column);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Ident: return "identifier '" + t.text + "'";
      case Tok::Caret: return "'^" + t.text + "'";
      case Tok::LParen: return "'('";
      case Tok::RParen: return "')'";
      case Tok::Comma: return "','";
      case Tok::Dot: return "'.'";
      case Tok::Tilde: return "'~'";
      case Tok::Amp: return "'&'";
      case Tok::Bar: return "'|'";
      case Tok::WeakImp: return "'->'";
      case Tok::StrongImp: return "'=>'";
      case Tok::WeakIff: return "'<->'";
      case Tok::StrongIff: return "'<=>'";
      case Tok::Equals: return "'='";
    }
    return "token";
  }

  Token consume() {
    Token t = std::move(tok_);
    tok_ = lexer_.next();
    return t;
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what + ", found " + describe(tok_));
    consume();
  }

  Formula formula() {
    auto lhs = implication();
    if (tok_.kind == Tok::WeakIff || tok_.kind == Tok::StrongIff) {
      const Op op = consume().kind == Tok::WeakIff ? Op::WeakIff : Op::StrongIff;
      return Formula::binary(op, std::move(lhs), formula());
    }
    return lhs;
  }

  Formula implication() {
    auto lhs = disjunction();
    if (tok_.kind == Tok::WeakImp || tok_.kind == Tok::StrongImp) {
      const Op op = consume().kind == Tok::WeakImp ? Op::WeakImp : Op::StrongImp;
      return Formula::binary(op, std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    auto lhs = conjunction();
    while (tok_.kind == Tok::Bar) {
      consume();
      lhs = disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    auto lhs = unary();
    while (tok_.kind == Tok::Amp) {
      consume();
      lhs = conj(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (tok_.kind == Tok::Tilde) {
      consume();
      return neg(unary());
    }
    if (tok_.kind == Tok::Ident && (tok_.text == "forall" || tok_.text == "exists")) {
      const Op op = consume().text == "forall" ? Op::Forall : Op::Exists;
      if (tok_.kind != Tok::Ident || is_keyword(tok_.text))
        fail("expected variable name, found " + describe(tok_));
      if (sig_.has_constant(tok_.text)) fail("cannot quantify over constant '" + tok_.text + "'");
      auto var = consume().text;
      expect(Tok::Dot, "'.'");
      return Formula::quantifier(op, std::move(var), formula());
    }
    return postfix();
  }

  Formula postfix() {
    auto f = primary();
    while (tok_.kind == Tok::Caret) f = status(std::move(f), *status_from_suffix(consume().text));
    return f;
  }

  Term term() {
    if (tok_.kind != Tok::Ident || is_keyword(tok_.text))
      fail("expected term, found " + describe(tok_));
    auto name = consume().text;
    if (sig_.has_constant(name)) return Term::constant(std::move(name));
    return Term::variable(std::move(name));
  }

  static std::string where(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
  }

  void check_relation(const Token& at, const std::string& name, std::size_t arity) {
    if (sig_.has_constant(name))
      throw ParseError("constant '" + name + "' used as a formula", at.line, at.column);
    auto declared = sig_.arity(name);
    if (!declared && infer_) declared = infer_->arity(name);
    if (!declared) {
      if (!infer_)
        throw UnknownSymbolError(where(at) + "unknown relation symbol '" + name + "'");
      infer_->add_relation(name, arity);
      return;
    }
    if (*declared != arity)
      throw ArityError(where(at) + "relation '" + name + "' has arity " + std::to_string(*declared) +
                       " but is applied to " + std::to_string(arity) + " argument(s)");
  }

  Formula primary() {
    if (tok_.kind == Tok::LParen) {
      consume();
      auto f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (tok_.kind != Tok::Ident) fail("expected formula, found " + describe(tok_));
    if (tok_.text == "TRUE") return consume(), constant(TruthValue::Top);
    if (tok_.text == "BOTH") return consume(), constant(TruthValue::Both);
    if (tok_.text == "FALSE") return consume(), constant(TruthValue::Bot);
    if (is_keyword(tok_.text)) fail("unexpected " + describe(tok_));

    Token head = consume();
    if (tok_.kind == Tok::LParen) {
      consume();
      std::vector<Term> args{term()};
      while (tok_.kind == Tok::Comma) {
        consume();
        args.push_back(term());
      }
      expect(Tok::RParen, "')' or ','");
      check_relation(head, head.text, args.size());
      return relation(std::move(head.text), std::move(args));
    }
    if (tok_.kind == Tok::Equals) {
      consume();
      Term lhs = sig_.has_constant(head.text) ? Term::constant(head.text)
                                              : Term::variable(head.text);
      return equality(std::move(lhs), term());
    }
    check_relation(head, head.text, 0);
    return atom(std::move(head.text));
  }

  Lexer lexer_;
  Token tok_;
  const Signature& sig_;
  Signature* infer_;
};

}  // namespace detail

/// Parses against a fixed signature: every relation must be declared with
/// the arity it is used at.
inline Formula parse_formula(std::string_view text, const Signature& sig) {
  return detail::Parser(text, sig, nullptr).parse();
}

/// Parses while extending `sig` with the relations the text uses. Constants
/// are taken from `sig` and never inferred.
inline Formula parse_formula_inferring(std::string_view text, Signature& sig) {
  Signature fixed;
  for (const auto& c : sig.constants()) fixed.add_constant(c);
  Signature inferred = sig;
  auto f = detail::Parser(text, fixed, &inferred).parse();
  sig = std::move(inferred);
  return f;
}

/// Parses with relations inferred from use and no constants. This is the
/// mode for propositional input.
inline Formula parse_formula(std::string_view text) {
  Signature sig;
  return parse_formula_inferring(text, sig);
}

}  // namespace slp
