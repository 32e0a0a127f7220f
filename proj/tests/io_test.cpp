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

#include <gtest/gtest.h>

#include "slp/io.hpp"
#include "slp/slp.hpp"

using namespace slp;

namespace {

constexpr TruthValue T = TruthValue::Top;
constexpr TruthValue P = TruthValue::Both;
constexpr TruthValue F = TruthValue::Bot;

const char* kModel = R"j({
  "domain": ["a", "b"],
  "constants": {"c": "a"},
  "relations": {
    "R": {"arity": 1, "default": "T", "entries": [{"args": ["b"], "value": "P"}]},
    "S": {"arity": 2, "entries": [{"args": ["a", "b"], "value": "T"}]},
    "q": {"arity": 0}
  }
})j";

}  // namespace

TEST(Io, ModelFromJson) {
  const auto m = model_from_json(json::parse(kModel));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.constant("c"), 0u);
  EXPECT_EQ(m.get("R", {0}), T);
  EXPECT_EQ(m.get("R", {1}), P);
  EXPECT_EQ(m.get("S", {0, 1}), T);
  EXPECT_EQ(m.get("S", {1, 0}), F);
  EXPECT_EQ(m.get("q", {}), F);
}

TEST(Io, ModelRoundTrip) {
  const auto m = model_from_json(json::parse(kModel));
  const auto j = model_to_json(m);
  EXPECT_EQ(j["relations"]["R"]["default"], "F");
  EXPECT_EQ(j["relations"]["R"]["entries"].size(), 2u);
  EXPECT_EQ(model_from_json(j), m);
}

TEST(Io, ModelErrors) {
  const std::vector<std::string> cases{
      R"j({})j",
      R"j({"domain": []})j",
      R"j({"domain": ["a", "a"]})j",
      R"j({"domain": ["a"], "constants": {"c": "z"}})j",
      R"j({"domain": ["a"], "relations": {"R": {"arity": -1}}})j",
      R"j({"domain": ["a"], "relations": {"R": {"arity": 1, "default": "X"}}})j",
      R"j({"domain": ["a"], "relations": {"R": {"arity": 1, "entries": [{"args": []}]}}})j",
      R"j({"domain": ["a"], "relations": {"R": {"arity": 1, "entries": [{"args": ["a"], "value": "T"}, {"args": ["a"], "value": "F"}]}}})j",
      R"j({"domain": ["a"], "constants": {"c": "a"}, "relations": {"c": {"arity": 0}}})j",
  };
  for (const auto& text : cases) {
    EXPECT_THROW(model_from_json(json::parse(text)), FormatError) << text;
  }
  EXPECT_THROW(parse_json("{", "x.json"), FormatError);
  EXPECT_THROW(read_file("/nonexistent/model.json"), FormatError);
}

TEST(Io, Signature) {
  const auto s = signature_from_json(json::parse(R"j({"constants": ["c"], "relations": {"R": 1, "P": 0}})j"));
  EXPECT_TRUE(s.has_constant("c"));
  EXPECT_EQ(s.arity("R"), 1u);
  EXPECT_EQ(signature_from_json(signature_to_json(s)), s);
  EXPECT_THROW(signature_from_json(json::parse(R"j({"relations": {"R": "x"}})j")), FormatError);
  EXPECT_THROW(signature_from_json(json::parse(R"j([1])j")), FormatError);
}

TEST(Io, Embedding) {
  const auto e = embedding_from_json(json::parse(R"j({
    "rho": {"In": "Mem(x1, x2)", "Set": {"params": ["y"], "formula": "Cls(y) & Cls(y)^c"}},
    "kappa": "Cls(x)"
  })j"));
  EXPECT_EQ(e.rho.at("In").params, (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(e.rho.at("Set").params, (std::vector<std::string>{"y"}));
  EXPECT_EQ(e.kappa.params, (std::vector<std::string>{"x"}));
  EXPECT_EQ(e.source_signature().arity("In"), 2u);

  const auto t = embedding_from_json(json::parse(R"j({"rho": {"R": "R(x)"}, "kappa": "TRUE"})j"));
  EXPECT_EQ(t.kappa.params.size(), 1u);

  auto bad = [](const char* text) { return embedding_from_json(json::parse(text)); };
  EXPECT_THROW(bad(R"j({"kappa": "TRUE"})j"), FormatError);
  EXPECT_THROW(bad(R"j({"rho": {"R": "R(x"}, "kappa": "TRUE"})j"), FormatError);
  EXPECT_THROW(bad(R"j({"rho": {"R": "S(y, z)"}, "kappa": "TRUE"})j"), FormatError);
  EXPECT_THROW(bad(R"j({"rho": {"R": "R(x)"}, "kappa": "K(x, y)"})j"), FormatError);
  EXPECT_THROW(bad(R"j({"rho": {"R": "R(x) & R(x, x)"}, "kappa": "TRUE"})j"), FormatError);
  EXPECT_THROW(
      bad(R"j({"signature": {"relations": {"K": 1}}, "rho": {"R": "R(x)"}, "kappa": "K(x)"})j"),
      FormatError);
}

TEST(Io, Theory) {
  const auto t = parse_theory(
      "# a comment\n"
      "%const c, d\n"
      "\n"
      "R(c)   # trailing comment\n"
      "forall x. R(x) => S(x, d)\n");
  ASSERT_EQ(t.lines.size(), 2u);
  EXPECT_EQ(t.lines[0].line, 4u);
  EXPECT_EQ(t.lines[1].line, 5u);
  EXPECT_TRUE(t.signature.has_constant("d"));
  EXPECT_EQ(t.signature.arity("S"), 2u);

  try {
    parse_theory("R(c)\nR(c) &");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_theory("R(x)\nR(x, y)"), FormatError);

  Signature s;
  s.add_relation("R", 1);
  EXPECT_THROW(parse_theory("Q(x)", s), FormatError);
  EXPECT_THROW(parse_theory("%const c\nR(c)", s), FormatError);

  const auto sent = parse_sentences("forall x. R(x)\n|- forall x. R(x) | ~R(x)\n", s);
  ASSERT_EQ(sent.lines.size(), 2u);
  EXPECT_FALSE(sent.lines[0].theorem);
  EXPECT_TRUE(sent.lines[1].theorem);
}
