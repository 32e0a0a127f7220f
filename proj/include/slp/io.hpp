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
  \file io.hpp
  \brief Reading and writing models, signatures, embeddings and theories.

  Model (JSON):

      {"domain": ["d", "e"],
       "constants": {"c": "d"},
       "relations": {"R": {"arity": 1, "default": "F",
                           "entries": [{"args": ["d"], "value": "P"}]}}}

  Unlisted tuples take "default" (itself defaulting to "F").

  Signature (JSON): {"constants": ["c"], "relations": {"R": 1}}

  Embedding (JSON):

      {"rho": {"R": "S(x) & ~S(x)",
               "E": {"params": ["a", "b"], "formula": "L(a, b)"}},
       "kappa": "K(x)",
       "signature": {...}}

  A rho given as a bare string takes its parameters from its free variables,
  which must be `x` (unary) or `x1..xn`. kappa as a bare string has its free
  variable as parameter, or `x` when it has none; the object form is
  {"param": "y", "formula": "..."}. The optional "signature" fixes the
  target language; without it relation arities are inferred.

  Theory (text): one formula per line; `#` starts a comment; a line
  `%const c, d` declares constant symbols. In a sentence list for embedding
  checks, a line starting with `|-` is also checked as a theorem.
*/

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "slp/classical.hpp"
#include "slp/model.hpp"
#include "slp/parser.hpp"

namespace slp {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(what + ": invalid JSON: " + e.what());
  }
}

namespace detail {

inline const json& require(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(what + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw FormatError(what + ": expected a string");
  return j.get<std::string>();
}

inline TruthValue as_truth_value(const json& j, const std::string& what) {
  auto s = as_string(j, what);
  if (s.size() != 1 || !truth_value_from_char(s[0]))
    throw FormatError(what + ": truth value must be \"T\", \"P\" or \"F\", got \"" + s + "\"");
  return *truth_value_from_char(s[0]);
}

}  // namespace detail

inline Model model_from_json(const json& j) {
  const std::string what = "model";
  const auto& dom = detail::require(j, "domain", what);
  if (!dom.is_array() || dom.empty()) throw FormatError("model: \"domain\" must be a nonempty list");
  std::vector<std::string> names;
  for (const auto& d : dom) names.push_back(detail::as_string(d, "model domain element"));
  Model m = [&] {
    try {
      return Model(names);
    } catch (const DomainError& e) {
      throw FormatError(std::string("model: ") + e.what());
    }
  }();
  auto element = [&](const json& e, const std::string& ctx) {
    auto name = detail::as_string(e, ctx);
    try {
      return m.element(name);
    } catch (const DomainError&) {
      throw FormatError(ctx + ": '" + name + "' is not a domain element");
    }
  };

  if (j.contains("constants")) {
    const auto& cs = j.at("constants");
    if (!cs.is_object()) throw FormatError("model: \"constants\" must be an object");
    for (const auto& [c, e] : cs.items()) m.set_constant(c, element(e, "model constant '" + c + "'"));
  }
  if (j.contains("relations")) {
    const auto& rs = j.at("relations");
    if (!rs.is_object()) throw FormatError("model: \"relations\" must be an object");
    for (const auto& [r, spec] : rs.items()) {
      const std::string ctx = "model relation '" + r + "'";
      const auto& ar = detail::require(spec, "arity", ctx);
      if (!ar.is_number_integer() || ar.get<long long>() < 0)
        throw FormatError(ctx + ": \"arity\" must be a nonnegative integer");
      const auto arity = ar.get<std::size_t>();
      const TruthValue fill =
          spec.contains("default") ? detail::as_truth_value(spec.at("default"), ctx)
                                   : TruthValue::Bot;
      if (m.constants().contains(r)) throw FormatError(ctx + ": name is already a constant");
      m.add_relation(r, arity, fill);
      std::set<std::vector<Element>> seen;
      if (!spec.contains("entries")) continue;
      if (!spec.at("entries").is_array()) throw FormatError(ctx + ": \"entries\" must be a list");
      for (const auto& entry : spec.at("entries")) {
        const auto& args = detail::require(entry, "args", ctx + " entry");
        if (!args.is_array() || args.size() != arity)
          throw FormatError(ctx + ": entry needs " + std::to_string(arity) + " argument(s)");
        std::vector<Element> tuple;
        for (const auto& a : args) tuple.push_back(element(a, ctx + " entry"));
        if (!seen.insert(tuple).second) throw FormatError(ctx + ": duplicate entry");
        m.set(r, tuple, detail::as_truth_value(detail::require(entry, "value", ctx), ctx));
      }
    }
  }
  return m;
}

/// Serializes with default "F" and one entry per non-F cell in tuple order.
inline json model_to_json(const Model& m) {
  json j;
  j["domain"] = m.domain();
  j["constants"] = json::object();
  for (const auto& [c, e] : m.constants()) j["constants"][c] = m.element_name(e);
  j["relations"] = json::object();
  for (const auto& [name, t] : m.tables()) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      if (t.values[i] == TruthValue::Bot) continue;
      json args = json::array();
      for (auto e : m.tuple_at(t.arity, i)) args.push_back(m.element_name(e));
      entries.push_back({{"args", args}, {"value", std::string(1, to_char(t.values[i]))}});
    }
    j["relations"][name] = {{"arity", t.arity}, {"default", "F"}, {"entries", entries}};
  }
  return j;
}

inline Model load_model(const std::string& path) {
  return model_from_json(parse_json(read_file(path), path));
}

inline Signature signature_from_json(const json& j) {
  Signature sig;
  if (!j.is_object()) throw FormatError("signature: expected an object");
  if (j.contains("constants")) {
    if (!j.at("constants").is_array())
      throw FormatError("signature: \"constants\" must be a list");
    for (const auto& c : j.at("constants")) sig.add_constant(detail::as_string(c, "signature constant"));
  }
  if (j.contains("relations")) {
    if (!j.at("relations").is_object())
      throw FormatError("signature: \"relations\" must be an object");
    for (const auto& [r, a] : j.at("relations").items()) {
      if (!a.is_number_integer() || a.get<long long>() < 0)
        throw FormatError("signature: arity of '" + r + "' must be a nonnegative integer");
      try {
        sig.add_relation(r, a.get<std::size_t>());
      } catch (const DomainError& e) {
        throw FormatError(std::string("signature: ") + e.what());
      }
    }
  }
  return sig;
}

inline json signature_to_json(const Signature& sig) {
  json j;
  j["constants"] = json::array();
  for (const auto& c : sig.constants()) j["constants"].push_back(c);
  j["relations"] = json::object();
  for (const auto& [r, a] : sig.relations()) j["relations"][r] = a;
  return j;
}

inline Signature load_signature(const std::string& path) {
  return signature_from_json(parse_json(read_file(path), path));
}

namespace detail {

inline Formula parse_in(const std::string& text, const std::optional<Signature>& fixed,
                        Signature& inferred, const std::string& what) {
  try {
    return fixed ? parse_formula(text, *fixed) : parse_formula_inferring(text, inferred);
  } catch (const Error& e) {
    throw FormatError(what + ": " + e.what());
  }
}

inline std::vector<std::string> string_form_params(const Formula& f, const std::string& what) {
  auto fv = free_vars(f);
  if (fv.empty()) return {};
  if (fv == std::set<std::string>{"x"}) return {"x"};
  std::vector<std::string> params;
  for (std::size_t i = 1; i <= fv.size(); ++i) {
    auto name = "x" + std::to_string(i);
    if (!fv.contains(name))
      throw FormatError(what + ": free variables must be x or x1..xn; use the object form "
                               "{\"params\": [...], \"formula\": ...} otherwise");
    params.push_back(name);
  }
  return params;
}

}  // namespace detail

inline Embedding embedding_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("embedding: expected an object");
  std::optional<Signature> fixed;
  if (j.contains("signature")) fixed = signature_from_json(j.at("signature"));
  Signature inferred;

  Embedding e;
  const auto& rho = detail::require(j, "rho", "embedding");
  if (!rho.is_object()) throw FormatError("embedding: \"rho\" must be an object");
  for (const auto& [name, spec] : rho.items()) {
    const std::string what = "embedding rho for '" + name + "'";
    Interpretation interp;
    if (spec.is_string()) {
      interp.formula = detail::parse_in(spec.get<std::string>(), fixed, inferred, what);
      interp.params = detail::string_form_params(interp.formula, what);
    } else {
      interp.formula = detail::parse_in(
          detail::as_string(detail::require(spec, "formula", what), what), fixed, inferred, what);
      const auto& ps = detail::require(spec, "params", what);
      if (!ps.is_array()) throw FormatError(what + ": \"params\" must be a list");
      for (const auto& p : ps) interp.params.push_back(detail::as_string(p, what));
    }
    e.rho.emplace(name, std::move(interp));
  }

  const auto& kappa = detail::require(j, "kappa", "embedding");
  if (kappa.is_string()) {
    e.kappa.formula = detail::parse_in(kappa.get<std::string>(), fixed, inferred, "embedding kappa");
    auto fv = free_vars(e.kappa.formula);
    if (fv.size() > 1) throw FormatError("embedding kappa: more than one free variable");
    e.kappa.params = {fv.empty() ? std::string("x") : *fv.begin()};
  } else {
    e.kappa.formula = detail::parse_in(
        detail::as_string(detail::require(kappa, "formula", "embedding kappa"), "embedding kappa"),
        fixed, inferred, "embedding kappa");
    e.kappa.params = {
        detail::as_string(detail::require(kappa, "param", "embedding kappa"), "embedding kappa")};
  }
  e.validate();
  return e;
}

inline Embedding load_embedding(const std::string& path) {
  return embedding_from_json(parse_json(read_file(path), path));
}

struct TheoryLine {
  Formula formula;
  std::size_t line = 0;
  bool theorem = false;  // line started with "|-"
};

struct Theory {
  Signature signature;
  std::vector<TheoryLine> lines;

  std::vector<Formula> formulas() const {
    std::vector<Formula> out;
    for (const auto& l : lines) out.push_back(l.formula);
    return out;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// `fixed` set: parse strictly against it; otherwise infer relations.
inline Theory parse_theory_text(const std::string& text, const std::optional<Signature>& fixed,
                                bool allow_theorems) {
  struct Pending {
    std::string text;
    std::size_t line;
    bool theorem;
  };
  std::vector<Pending> pending;
  Theory t;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    auto hash = raw.find('#');
    auto line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    if (line.starts_with("%const")) {
      std::string rest = line.substr(6);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream names(rest);
      for (std::string c; names >> c;) {
        if (fixed && !fixed->has_constant(c))
          throw FormatError("line " + std::to_string(n) + ": constant '" + c +
                            "' is not in the model's signature");
        t.signature.add_constant(c);
      }
      continue;
    }
    bool theorem = false;
    if (allow_theorems && line.starts_with("|-")) {
      theorem = true;
      line = trim(line.substr(2));
    }
    pending.push_back({line, n, theorem});
  }
  if (fixed) t.signature = *fixed;
  for (const auto& p : pending) {
    try {
      auto f = fixed ? parse_formula(p.text, *fixed) : parse_formula_inferring(p.text, t.signature);
      t.lines.push_back({f, p.line, p.theorem});
    } catch (const ParseError& e) {
      throw ParseError(e.message(), p.line, e.column());
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(p.line) + ": " + e.what());
    }
  }
  return t;
}

}  // namespace detail

/// Relations are inferred from use; constants come from `%const` lines.
inline Theory parse_theory(const std::string& text) {
  return detail::parse_theory_text(text, std::nullopt, false);
}

/// Every formula must fit `sig`.
inline Theory parse_theory(const std::string& text, const Signature& sig) {
  return detail::parse_theory_text(text, sig, false);
}

/// Classical sentences over `sig`; `|-` lines are marked as theorems.
inline Theory parse_sentences(const std::string& text, const Signature& sig) {
  return detail::parse_theory_text(text, sig, true);
}

}  // namespace slp
