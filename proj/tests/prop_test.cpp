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

#include "support.hpp"

using namespace slp;
using namespace slp::testing;

namespace {

constexpr TruthValue T = TruthValue::Top;
constexpr TruthValue P = TruthValue::Both;
constexpr TruthValue F = TruthValue::Bot;

Formula f(const char* text) { return parse_formula(text); }

// First valuation (in enumeration order) designating every premise but not
// the conclusion, computed by the oracle.
std::optional<Valuation> oracle_countermodel(const std::vector<Formula>& premises,
                                             const Formula& conclusion) {
  std::set<std::string> atoms = atoms_of(conclusion);
  for (const auto& p : premises) atoms.merge(atoms_of(p));
  for (const auto& v : all_valuations({atoms.begin(), atoms.end()})) {
    bool ok = true;
    for (const auto& p : premises) ok = ok && oracle::prop_value(p, v) != F;
    if (ok && oracle::prop_value(conclusion, v) == F) return v;
  }
  return std::nullopt;
}

bool classically_valid(const Formula& g) {
  const auto atoms = atom_list(g);
  for (std::size_t bits = 0; bits < (std::size_t{1} << atoms.size()); ++bits) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (bits >> i) & 1;
    if (!oracle::classical_prop(g, v)) return false;
  }
  return true;
}

}  // namespace

TEST(Prop, EvalExamples) {
  EXPECT_EQ(eval_prop(f("p => q"), {{"p", T}, {"q", P}}), F);
  EXPECT_EQ(eval_prop(f("p | ~p"), {{"p", P}}), P);
  EXPECT_EQ(eval_prop(f("p & BOTH"), {{"p", T}}), P);
  EXPECT_EQ(eval_prop(f("p^c"), {{"p", P}}), F);
}

TEST(Prop, EvalErrors) {
  EXPECT_THROW(eval_prop(f("p & q"), {{"p", T}}), EvalError);
  EXPECT_THROW(eval_prop(f("forall x. R(x)"), {}), EvalError);
  EXPECT_THROW(eval_prop(f("R(x)"), {{"R", T}}), EvalError);
  EXPECT_THROW(truth_table(f("forall x. R(x)")), EvalError);
}

TEST(Prop, TruthTableExamples) {
  const auto t = truth_table(f("~p"));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0].value, F);
  EXPECT_EQ(t.rows[1].value, P);
  EXPECT_EQ(t.rows[2].value, T);

  const auto c = truth_table(f("p ^c"));
  ASSERT_EQ(c.rows.size(), 3u);
  EXPECT_EQ(c.rows[0].valuation.at("p"), T);
  EXPECT_EQ(c.rows[0].value, T);
  EXPECT_EQ(c.rows[1].value, F);
  EXPECT_EQ(c.rows[2].value, T);

  const auto top = truth_table(f("TRUE"));
  ASSERT_EQ(top.rows.size(), 1u);
  EXPECT_TRUE(top.rows[0].valuation.empty());
  EXPECT_EQ(top.rows[0].value, T);
}

TEST(Prop, TruthTableOrderAndFormat) {
  const auto t = truth_table(f("q => p"));
  EXPECT_EQ(t.atoms, (std::vector<std::string>{"p", "q"}));
  const auto expected = all_valuations({"p", "q"});
  ASSERT_EQ(t.rows.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(t.rows[i].valuation, expected[i]);
  EXPECT_EQ(format_truth_table(t),
            "p q | q => p\n"
            "T T | T\n"
            "T P | T\n"
            "T F | T\n"
            "P T | F\n"
            "P P | T\n"
            "P F | T\n"
            "F T | F\n"
            "F P | F\n"
            "F F | T\n");
}

TEST(Prop, TautologyExamples) {
  EXPECT_TRUE(is_tautology(f("p | ~p")).holds());
  EXPECT_TRUE(is_tautology(f("(p => (q & q^f)) => p^f")).holds());
  const auto v = is_tautology(f("(p & ~p) => FALSE"));
  ASSERT_FALSE(v.holds());
  EXPECT_EQ(*v.countermodel, (Valuation{{"p", P}}));
}

TEST(Prop, EntailmentExamples) {
  EXPECT_TRUE(entails_prop({f("p => q"), f("p")}, f("q")).holds());
  const auto mp = entails_prop({f("p -> q"), f("p")}, f("q"));
  ASSERT_FALSE(mp.holds());
  EXPECT_EQ(*mp.countermodel, (Valuation{{"p", P}, {"q", F}}));
  EXPECT_TRUE(entails_prop({}, f("p | ~p")).holds());
  // Explosion fails in LP.
  EXPECT_FALSE(entails_prop({f("p"), f("~p")}, f("q")).holds());
}

TEST(Prop, EquivalenceExamples) {
  EXPECT_TRUE(equivalent_prop(f("p => q"), f("~q => ~p")));
  EXPECT_TRUE(equivalent_prop(f("p"), f("~~p")));
  EXPECT_FALSE(equivalent_prop(f("p -> q"), f("p => q")));
  EXPECT_NE(eval_prop(f("p -> q"), {{"p", P}, {"q", P}}), eval_prop(f("p => q"), {{"p", P}, {"q", P}}));
  EXPECT_TRUE(equivalent_prop(f("p & TRUE"), f("p | FALSE")));
  EXPECT_FALSE(equivalent_prop(f("p"), f("q")));
}

TEST(Prop, ValidityLaws) {
  EXPECT_TRUE(entails_prop({f("p => q"), f("p")}, f("q")).holds());
  EXPECT_TRUE(is_tautology(f("(p => q) => ((p => (q => r)) => (p => r))")).holds());
  EXPECT_TRUE(is_tautology(f("p^t => (q => p)")).holds());
  EXPECT_TRUE(is_tautology(f("(p => q) <=> (~q => ~p)")).holds());
  EXPECT_TRUE(is_tautology(f("((p^t => q) & (p^p => q) & (p^f => q)) => q")).holds());
  EXPECT_TRUE(is_tautology(f("(p => (q & q^f)) => p^f")).holds());
  // Unrestricted weakening fails.
  EXPECT_FALSE(is_tautology(f("p => (q => p)")).holds());
}

TEST(Prop, AtomLimit) {
  std::string text = "a0";
  for (int i = 1; i < 13; ++i) text += " | a" + std::to_string(i);
  EXPECT_THROW(is_tautology(f(text.c_str())), BudgetError);
  EXPECT_THROW(truth_table(f(text.c_str())), BudgetError);
  EXPECT_NO_THROW(is_tautology(f(text.c_str()), EnumerationLimits{12, true}));
}

TEST(Prop, Valuations) {
  EXPECT_EQ(parse_valuation("p=T, q=P"), (Valuation{{"p", T}, {"q", P}}));
  EXPECT_EQ(parse_valuation(""), Valuation{});
  EXPECT_THROW(parse_valuation("p=X"), Error);
  EXPECT_THROW(parse_valuation("p"), Error);
  EXPECT_EQ(format_valuation({{"p", P}, {"q", F}}), "p=P, q=F");
}

// Library verdicts agree with the oracle, including the choice of the first
// countermodel.
TEST(Property, EntailmentMatchesOracle) {
  Rng rng(5);
  const std::vector<Conn> all{Conn::Not, Conn::And, Conn::Or, Conn::WeakImp,
                              Conn::WeakIff, Conn::StrongImp, Conn::StrongIff};
  for (int i = 0; i < 400; ++i) {
    std::vector<Formula> premises;
    const std::size_t n = pick(rng, 3);
    for (std::size_t k = 0; k < n; ++k) premises.push_back(random_prop(rng, 3, {"p", "q", "r"}, all, {P}));
    const auto c = random_prop(rng, 3, {"p", "q", "r"}, all, {P});
    const auto got = entails_prop(premises, c);
    const auto want = oracle_countermodel(premises, c);
    ASSERT_EQ(got.countermodel.has_value(), want.has_value()) << format_formula(c);
    if (want) {
      // The library reports only the atoms that occur.
      EXPECT_EQ(*got.countermodel, *want) << format_formula(c);
    }
  }
}

TEST(Property, ClassicalTautologiesAreValid) {
  Rng rng(1000);
  const std::vector<Conn> classical{Conn::Not, Conn::And, Conn::Or, Conn::WeakImp, Conn::WeakIff};
  int classically_valid_count = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_prop(rng, 6, {"p", "q", "r", "s"}, classical);
    if (!classically_valid(g)) continue;
    ++classically_valid_count;
    EXPECT_TRUE(is_tautology(g).holds()) << format_formula(g);
  }
  EXPECT_GT(classically_valid_count, 0);
}

TEST(Property, MonotoneFragmentFixesBoth) {
  Rng rng(3);
  const std::vector<Conn> monotone{Conn::Not, Conn::And, Conn::Or};
  for (int i = 0; i < 500; ++i) {
    const auto g = random_prop(rng, 6, {"p", "q", "r"}, monotone);
    Valuation all_both;
    for (const auto& a : atoms_of(g)) all_both[a] = P;
    EXPECT_EQ(eval_prop(g, all_both), P) << format_formula(g);
  }
  // Strong implication leaves the fragment.
  EXPECT_EQ(eval_prop(f("p => p"), {{"p", P}}), T);
}

TEST(Property, EntailmentIsTransitive) {
  Rng rng(9);
  const std::vector<Conn> all{Conn::Not, Conn::And, Conn::Or, Conn::WeakImp, Conn::StrongImp};
  int chains = 0;
  for (int i = 0; i < 3000 && chains < 100; ++i) {
    const auto a = random_prop(rng, 3, {"p", "q"}, all);
    const auto b = random_prop(rng, 3, {"p", "q"}, all);
    const auto c = random_prop(rng, 3, {"p", "q"}, all);
    if (!entails_prop({a}, b).holds() || !entails_prop({b}, c).holds()) continue;
    ++chains;
    EXPECT_TRUE(entails_prop({a}, c).holds())
        << format_formula(a) << " / " << format_formula(b) << " / " << format_formula(c);
  }
  EXPECT_GT(chains, 10);
}
