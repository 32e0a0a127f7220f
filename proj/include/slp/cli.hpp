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
  \file cli.hpp
  \brief The `slp` command line. Exit codes: 0 affirmative verdict or
         success, 1 negative verdict, 2 usage or input error.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slp/classical.hpp"
#include "slp/definability.hpp"
#include "slp/io.hpp"
#include "slp/prop.hpp"

namespace slp::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline json valuation_json(const Valuation& v) {
  json j = json::object();
  for (const auto& [a, val] : v) j[a] = std::string(1, to_char(val));
  return j;
}

inline json assignment_json(const Model& m, const Assignment& a) {
  json j = json::object();
  for (const auto& [var, e] : a) j[var] = m.element_name(e);
  return j;
}

inline std::string format_assignment(const Model& m, const Assignment& a) {
  std::string out;
  for (const auto& [var, e] : a) {
    if (!out.empty()) out += ", ";
    out += var + '=' + m.element_name(e);
  }
  return out;
}

struct Entailment {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// "P1; P2 |- C"
inline Entailment parse_entailment(const std::string& text) {
  auto turnstile = text.find("|-");
  if (turnstile == std::string::npos || text.find("|-", turnstile + 2) != std::string::npos)
    throw FormatError("entailment must contain exactly one '|-'");
  Signature sig;
  Entailment e;
  std::string lhs = text.substr(0, turnstile);
  std::size_t start = 0;
  while (start <= lhs.size()) {
    auto semi = lhs.find(';', start);
    auto piece = slp::detail::trim(lhs.substr(start, semi == std::string::npos ? std::string::npos
                                                                                : semi - start));
    if (!piece.empty()) e.premises.push_back(parse_formula_inferring(piece, sig));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  e.conclusion = parse_formula_inferring(text.substr(turnstile + 2), sig);
  return e;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Workbench for the paraconsistent logic LP and its strong extension", "slp"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", json_, "Structured JSON output");

    std::string formula, assign, entail, basis = "lp", table, model_file, theory_file, sig_file,
                                         embed_file, sentences_file;
    std::size_t arity = 1, max_size = 1;
    std::uint64_t budget = ModelBudget{}.max_models;
    bool no_limit = false;

    auto* eval = app.add_subcommand("eval", "Evaluate a propositional formula");
    eval->add_option("formula", formula, "Formula")->required();
    eval->add_option("--assign", assign, "Valuation, e.g. p=T,q=P");

    auto* tbl = app.add_subcommand("table", "Print the truth table of a formula");
    tbl->add_option("formula", formula, "Formula")->required();
    tbl->add_flag("--no-limit", no_limit, "Allow more than 12 atoms");

    auto* taut = app.add_subcommand("taut", "Check validity by enumerating valuations");
    taut->add_option("formula", formula, "Formula")->required();
    taut->add_flag("--no-limit", no_limit, "Allow more than 12 atoms");

    auto* ent = app.add_subcommand("entail", "Check \"P1; P2 |- C\" by enumerating valuations");
    ent->add_option("entailment", entail, "Premises and conclusion")->required();
    ent->add_flag("--no-limit", no_limit, "Allow more than 12 atoms");

    auto* clo = app.add_subcommand("closure", "Truth functions definable from a basis");
    clo->add_option("--basis", basis, "lp or lps")
        ->check(CLI::IsMember({"lp", "lps"}))
        ->capture_default_str();
    clo->add_option("--arity", arity, "Arity (1-3)")->check(CLI::Range(1, 3))->capture_default_str();

    auto* syn = app.add_subcommand("synth", "Synthesize a formula for a T/P/F table");
    syn->add_option("table", table, "Table of 3^n characters over T, P, F")->required();

    auto* par = app.add_subcommand("paradox", "Fixed points of the unary operator given by a formula in p");
    par->add_option("formula", formula, "Formula in the atom p")->required();

    auto* mdl = app.add_subcommand("model", "Finite model operations");
    mdl->require_subcommand(1);
    auto* mcheck = mdl->add_subcommand("check", "Does a model satisfy a theory?");
    mcheck->add_option("model", model_file, "Model file (JSON)")->required();
    mcheck->add_option("theory", theory_file, "Theory file")->required();
    auto* mcons = mdl->add_subcommand("consistent", "Is a model consistent?");
    mcons->add_option("model", model_file, "Model file (JSON)")->required();

    auto* foe = app.add_subcommand("fo-entail", "Bounded countermodel search");
    foe->add_option("theory", theory_file, "Theory file")->required();
    foe->add_option("conclusion", formula, "Conclusion")->required();
    foe->add_option("--max-size", max_size, "Largest domain size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    foe->add_option("--budget", budget, "Maximum number of models")->capture_default_str();
    foe->add_flag("--no-limit", no_limit, "Ignore the model budget");

    auto* sch = app.add_subcommand("schema", "Print the consistency axiom schema");
    sch->add_option("signature", sig_file, "Signature file (JSON)")->required();

    auto* emb = app.add_subcommand("embed", "Embeddings of classical theories");
    emb->require_subcommand(1);
    auto* etr = emb->add_subcommand("translate", "Translate a classical formula");
    etr->add_option("embedding", embed_file, "Embedding file (JSON)")->required();
    etr->add_option("formula", formula, "Classical formula")->required();
    auto* echk = emb->add_subcommand("check", "Check translated sentences on a model");
    echk->add_option("embedding", embed_file, "Embedding file (JSON)")->required();
    echk->add_option("model", model_file, "Model file (JSON)")->required();
    echk->add_option("sentences", sentences_file, "Sentence file")->required();

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }

    const EnumerationLimits limits{kDefaultMaxAtoms, no_limit};
    try {
      if (*eval) return cmd_eval(formula, assign);
      if (*tbl) return cmd_table(formula, limits);
      if (*taut) return cmd_taut(formula, limits);
      if (*ent) return cmd_entail(entail, limits);
      if (*clo) return cmd_closure(basis, arity);
      if (*syn) return cmd_synth(table);
      if (*par) return cmd_paradox(formula);
      if (*mcheck) return cmd_model_check(model_file, theory_file);
      if (*mcons) return cmd_model_consistent(model_file);
      if (*foe) return cmd_fo_entail(theory_file, formula, max_size, ModelBudget{budget, no_limit});
      if (*sch) return cmd_schema(sig_file);
      if (*etr) return cmd_embed_translate(embed_file, formula);
      if (*echk) return cmd_embed_check(embed_file, model_file, sentences_file);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const json::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kUsage;
  }

 private:
  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  int cmd_eval(const std::string& text, const std::string& assign) {
    const auto v = eval_prop(parse_formula(text), parse_valuation(assign));
    if (json_)
      emit({{"value", std::string(1, to_char(v))}});
    else
      out_ << to_char(v) << '\n';
    return kOk;
  }

  int cmd_table(const std::string& text, const EnumerationLimits& limits) {
    const auto t = truth_table(parse_formula(text), limits);
    if (json_) {
      json rows = json::array();
      for (const auto& r : t.rows)
        rows.push_back({{"valuation", valuation_json(r.valuation)},
                        {"value", std::string(1, to_char(r.value))}});
      emit({{"atoms", t.atoms}, {"formula", format_formula(t.formula)}, {"rows", rows}});
    } else {
      out_ << format_truth_table(t);
    }
    return kOk;
  }

  int report_prop(const PropVerdict& v, const char* yes) {
    if (json_) {
      json j = {{"verdict", v.holds() ? yes : "countermodel"}};
      if (!v.holds()) j["countermodel"] = valuation_json(*v.countermodel);
      emit(j);
    } else if (v.holds()) {
      out_ << yes << '\n';
    } else {
      out_ << "countermodel " << format_valuation(*v.countermodel) << '\n';
    }
    return v.holds() ? kOk : kNegative;
  }

  int cmd_taut(const std::string& text, const EnumerationLimits& limits) {
    return report_prop(is_tautology(parse_formula(text), limits), "valid");
  }

  int cmd_entail(const std::string& text, const EnumerationLimits& limits) {
    const auto e = parse_entailment(text);
    return report_prop(entails_prop(e.premises, e.conclusion, limits), "entailed");
  }

  int cmd_closure(const std::string& basis, std::size_t arity) {
    const auto fns = closure(basis == "lps" ? lps_basis() : lp_basis(), arity);
    if (json_) {
      json list = json::array();
      for (const auto& f : fns)
        list.push_back({{"table", f.function.to_string()}, {"witness", format_formula(f.witness)}});
      emit({{"basis", basis}, {"arity", arity}, {"count", fns.size()}, {"functions", list}});
    } else {
      for (const auto& f : fns)
        out_ << f.function.to_string() << ' ' << format_formula(f.witness) << '\n';
    }
    return kOk;
  }

  int cmd_synth(const std::string& table) {
    const auto fn = TruthFunction::parse(table);
    const auto f = synthesize(fn);
    if (function_of(f, standard_atoms(fn.arity())) != fn)
      throw Error("internal error: synthesized formula does not realize " + table);
    if (json_)
      emit({{"table", table}, {"formula", format_formula(f)}});
    else
      out_ << format_formula(f) << '\n';
    return kOk;
  }

  int cmd_paradox(const std::string& text) {
    const std::string p[] = {"p"};
    const auto g = function_of(parse_formula(text), p);
    const auto fps = fixed_points(g);
    std::string list;
    for (auto v : fps) {
      if (!list.empty()) list += ", ";
      list += to_char(v);
    }
    if (json_) {
      json values = json::array();
      for (auto v : fps) values.push_back(std::string(1, to_char(v)));
      emit({{"function", g.to_string()}, {"fixed_points", values}, {"vicious", fps.empty()}});
    } else {
      out_ << "function: " << g.to_string() << '\n'
           << "fixed points: " << (fps.empty() ? "none (vicious)" : list) << '\n';
    }
    return fps.empty() ? kNegative : kOk;
  }

  int cmd_model_check(const std::string& model_file, const std::string& theory_file) {
    const auto m = load_model(model_file);
    const auto theory = parse_theory(read_file(theory_file), m.signature());
    const auto formulas = theory.formulas();
    const auto failure = first_failure(m, formulas);
    if (json_) {
      json j = {{"verdict", failure ? "not satisfied" : "satisfied"}};
      if (failure) {
        j["formula"] = format_formula(formulas[failure->index]);
        j["line"] = theory.lines[failure->index].line;
        j["assignment"] = assignment_json(m, failure->assignment);
      }
      emit(j);
    } else if (!failure) {
      out_ << "satisfied\n";
    } else {
      out_ << "not satisfied: " << format_formula(formulas[failure->index]);
      if (!failure->assignment.empty())
        out_ << " under " << format_assignment(m, failure->assignment);
      out_ << '\n';
    }
    return failure ? kNegative : kOk;
  }

  int cmd_model_consistent(const std::string& model_file) {
    const bool ok = model_consistent(load_model(model_file));
    if (json_)
      emit({{"consistent", ok}});
    else
      out_ << (ok ? "consistent" : "inconsistent") << '\n';
    return ok ? kOk : kNegative;
  }

  int cmd_fo_entail(const std::string& theory_file, const std::string& conclusion_text,
                    std::size_t max_size, const ModelBudget& budget) {
    auto theory = parse_theory(read_file(theory_file));
    auto sig = theory.signature;
    const auto conclusion = parse_formula_inferring(conclusion_text, sig);
    const auto premises = theory.formulas();
    const auto v = entails_bounded(premises, conclusion, sig, max_size, budget);
    if (json_) {
      json j = {{"verdict", v.found_countermodel() ? "countermodel" : "no-counterexample"},
                {"max_size", max_size},
                {"models_checked", v.models_checked}};
      if (v.countermodel) j["countermodel"] = model_to_json(*v.countermodel);
      emit(j);
    } else if (v.countermodel) {
      out_ << "countermodel (domain size " << v.countermodel->size() << ")\n"
           << model_to_json(*v.countermodel).dump(2) << '\n';
    } else {
      out_ << "no counterexample up to size " << max_size << '\n';
    }
    return v.found_countermodel() ? kNegative : kOk;
  }

  int cmd_schema(const std::string& sig_file) {
    const auto schema = consistency_schema(load_signature(sig_file));
    if (json_) {
      json list = json::array();
      for (const auto& f : schema) list.push_back(format_formula(f));
      emit({{"schema", list}});
    } else {
      for (const auto& f : schema) out_ << format_formula(f) << '\n';
    }
    return kOk;
  }

  int cmd_embed_translate(const std::string& embed_file, const std::string& text) {
    const auto e = load_embedding(embed_file);
    const auto phi = parse_formula(text, e.source_signature());
    const auto tr = embed_translate(phi, e);
    if (json_)
      emit({{"formula", format_formula(phi)}, {"translation", format_formula(tr)}});
    else
      out_ << format_formula(tr) << '\n';
    return kOk;
  }

  int cmd_embed_check(const std::string& embed_file, const std::string& model_file,
                      const std::string& sentences_file) {
    const auto e = load_embedding(embed_file);
    const auto m = load_model(model_file);
    const auto parsed = parse_sentences(read_file(sentences_file), e.source_signature());
    std::vector<Formula> sentences, theorems;
    for (const auto& l : parsed.lines) {
      sentences.push_back(l.formula);
      if (l.theorem) theorems.push_back(l.formula);
    }
    const auto report = check_embedding(e, sentences, m, theorems);
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += !c.passed;
    auto kind = [](const EmbeddingCheck& c) {
      return c.kind == EmbeddingCheck::Kind::Consistency ? "consistency" : "theorem";
    };
    if (json_) {
      json list = json::array();
      for (const auto& c : report.checks)
        list.push_back({{"kind", kind(c)},
                        {"sentence", format_formula(c.sentence)},
                        {"translated", format_formula(c.translated)},
                        {"passed", c.passed}});
      emit({{"checks", list}, {"passed", report.all_passed()}});
    } else {
      for (const auto& c : report.checks)
        out_ << (c.passed ? "PASS " : "FAIL ") << kind(c) << ' ' << format_formula(c.sentence)
             << '\n';
      if (failed == 0)
        out_ << "all " << report.checks.size() << " checks passed\n";
      else
        out_ << failed << " of " << report.checks.size() << " checks failed\n";
    }
    return report.all_passed() ? kOk : kNegative;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
};

}  // namespace detail

/// Runs one command. `argv[0]` is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return detail::Runner(out, err).run(argc, argv);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"slp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace slp::cli
