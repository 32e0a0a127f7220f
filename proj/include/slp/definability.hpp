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
  \file definability.hpp
  \brief Truth functions as tables, closure of a connective basis, synthesis
         of a formula for an arbitrary table, and fixed points of unary
         operators.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slp/format.hpp"
#include "slp/prop.hpp"
#include "slp/syntax.hpp"

namespace slp {

constexpr std::size_t pow3(std::size_t n) noexcept {
  std::size_t r = 1;
  while (n--) r *= 3;
  return r;
}

/// A total map from n-tuples of truth values to truth values.
///
/// Entry i is the value at the i-th input tuple in lexicographic order with
/// each coordinate running Top, Both, Bot and the first coordinate varying
/// slowest. Serialized as the string of its entries, so negation is "FPT".
class TruthFunction {
 public:
  TruthFunction() = default;

  TruthFunction(std::size_t arity, std::vector<TruthValue> table)
      : arity_(arity), table_(std::move(table)) {
    if (table_.size() != pow3(arity_))
      throw DomainError("table of a " + std::to_string(arity_) + "-ary truth function needs " +
                        std::to_string(pow3(arity_)) + " entries, got " +
                        std::to_string(table_.size()));
  }

  static TruthFunction constant(std::size_t arity, TruthValue v) {
    return {arity, std::vector<TruthValue>(pow3(arity), v)};
  }

  static TruthFunction from_unary(TruthValue (*fn)(TruthValue)) {
    std::vector<TruthValue> t;
    for (auto v : kEnumerationOrder) t.push_back(fn(v));
    return {1, std::move(t)};
  }

  static TruthFunction from_binary(TruthValue (*fn)(TruthValue, TruthValue)) {
    std::vector<TruthValue> t;
    for (auto a : kEnumerationOrder)
      for (auto b : kEnumerationOrder) t.push_back(fn(a, b));
    return {2, std::move(t)};
  }

  /// Parses a string of 3^n characters over {T, P, F}.
  static TruthFunction parse(std::string_view s) {
    std::size_t arity = 0;
    while (pow3(arity) < s.size()) ++arity;
    if (s.empty() || pow3(arity) != s.size())
      throw DomainError("truth table length " + std::to_string(s.size()) + " is not a power of 3");
    std::vector<TruthValue> t;
    t.reserve(s.size());
    for (char c : s) {
      auto v = truth_value_from_char(c);
      if (!v) throw DomainError(std::string("invalid truth value '") + c + "' in table");
      t.push_back(*v);
    }
    return {arity, std::move(t)};
  }

  std::size_t arity() const noexcept { return arity_; }
  std::span<const TruthValue> table() const noexcept { return table_; }
  TruthValue operator[](std::size_t index) const { return table_.at(index); }

  TruthValue operator()(std::span<const TruthValue> args) const {
    if (args.size() != arity_) throw DomainError("wrong number of arguments to truth function");
    return table_[index_of(args)];
  }

  static std::size_t index_of(std::span<const TruthValue> args) {
    std::size_t i = 0;
    for (auto v : args) i = i * 3 + enumeration_index(v);
    return i;
  }

  static std::vector<TruthValue> inputs_at(std::size_t arity, std::size_t index) {
    std::vector<TruthValue> args(arity);
    for (std::size_t k = arity; k-- > 0; index /= 3) args[k] = from_enumeration_index(index % 3);
    return args;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(table_.size());
    for (auto v : table_) s += to_char(v);
    return s;
  }

  friend bool operator==(const TruthFunction&, const TruthFunction&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<TruthValue> table_{TruthValue::Top};
};

/// The conventional atom names for an n-ary function: p, q, r up to three,
/// p1..pn beyond.
inline std::vector<std::string> standard_atoms(std::size_t n) {
  static const char* const kShort[] = {"p", "q", "r"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 3 ? std::string(kShort[i]) : "p" + std::to_string(i + 1));
  return out;
}

/// The function computed by `f` with inputs bound to `atoms` in order.
/// `atoms` may list atoms that `f` does not use.
inline TruthFunction function_of(const Formula& f, std::span<const std::string> atoms) {
  std::set<std::string> listed(atoms.begin(), atoms.end());
  if (listed.size() != atoms.size()) throw DomainError("atom list contains duplicates");
  for (const auto& a : atoms_of(f))
    if (!listed.contains(a))
      throw DomainError("formula uses atom '" + a + "' which is not in the atom list");
  detail::check_propositional(f);

  const std::size_t n = atoms.size();
  std::vector<TruthValue> table(pow3(n));
  Valuation v;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto args = TruthFunction::inputs_at(n, i);
    for (std::size_t k = 0; k < n; ++k) v[atoms[k]] = args[k];
    table[i] = eval_prop(f, v);
  }
  return {n, std::move(table)};
}

inline TruthFunction function_of(const Formula& f, std::initializer_list<std::string> atoms) {
  return function_of(f, std::span(atoms.begin(), atoms.size()));
}

/// A generator of a connective basis: a truth function of arity at most 2
/// and the way to write it as a formula.
struct Generator {
  std::string name;
  TruthFunction function;
  std::function<Formula(std::span<const Formula>)> build;
};

struct ConnectiveBasis {
  std::string name;
  std::vector<Generator> generators;
};

namespace detail {
inline Generator constant_generator(TruthValue v) {
  return {format_formula(constant(v)), TruthFunction::constant(0, v),
          [v](std::span<const Formula>) { return constant(v); }};
}
}  // namespace detail

/// LP with logical constants: ~, &, | and the constants TRUE, BOTH, FALSE.
inline ConnectiveBasis lp_basis() {
  return {"lp",
          {{"~", TruthFunction::from_unary(&neg), [](auto a) { return neg(a[0]); }},
           {"&", TruthFunction::from_binary(&conj), [](auto a) { return conj(a[0], a[1]); }},
           {"|", TruthFunction::from_binary(&disj), [](auto a) { return disj(a[0], a[1]); }},
           detail::constant_generator(TruthValue::Top),
           detail::constant_generator(TruthValue::Both),
           detail::constant_generator(TruthValue::Bot)}};
}

/// The LP basis plus strong implication.
inline ConnectiveBasis lps_basis() {
  auto b = lp_basis();
  b.name = "lps";
  b.generators.push_back({"=>", TruthFunction::from_binary(&strong_imp),
                          [](auto a) { return strong_imp(a[0], a[1]); }});
  return b;
}

/// A member of a closure together with a formula that realizes it.
struct DefinableFunction {
  TruthFunction function;
  Formula witness;
};

namespace detail {

// Tables of arity <= 3 packed two bits per entry (the enumeration index of
// the value), entry 0 in the low bits.
class PackedOps {
 public:
  explicit PackedOps(std::size_t entries) : chunks_((entries + 2) / 3) {}

  static std::uint64_t pack(std::span<const TruthValue> t) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      code |= std::uint64_t{enumeration_index(t[i])} << (2 * i);
    return code;
  }

  static std::vector<TruthValue> unpack(std::uint64_t code, std::size_t entries) {
    std::vector<TruthValue> t(entries);
    for (std::size_t i = 0; i < entries; ++i)
      t[i] = from_enumeration_index(static_cast<unsigned>((code >> (2 * i)) & 3));
    return t;
  }

  // 6-bit chunk lookup tables, three entries per chunk.
  static std::vector<std::uint8_t> chunk_table(const TruthFunction& g) {
    auto digit = [](unsigned chunk, unsigned k) { return (chunk >> (2 * k)) & 3u; };
    auto value_at = [&](unsigned a, unsigned b) -> unsigned {
      if (a > 2 || b > 2) return 0;
      const TruthValue args[] = {from_enumeration_index(a), from_enumeration_index(b)};
      return enumeration_index(g(std::span(args, g.arity())));
    };
    std::vector<std::uint8_t> table(g.arity() == 1 ? 64 : 64 * 64);
    for (unsigned x = 0; x < 64; ++x)
      for (unsigned y = 0; y < (g.arity() == 1 ? 1u : 64u); ++y) {
        unsigned out = 0;
        for (unsigned k = 0; k < 3; ++k)
          out |= value_at(digit(x, k), g.arity() == 1 ? 0 : digit(y, k)) << (2 * k);
        table[x * (g.arity() == 1 ? 1 : 64) + y] = static_cast<std::uint8_t>(out);
      }
    return table;
  }

  std::uint64_t apply1(const std::vector<std::uint8_t>& t, std::uint64_t a) const {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c)
      out |= std::uint64_t{t[(a >> (6 * c)) & 63]} << (6 * c);
    return out;
  }

  std::uint64_t apply2(const std::vector<std::uint8_t>& t, std::uint64_t a,
                       std::uint64_t b) const {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c)
      out |= std::uint64_t{t[((a >> (6 * c)) & 63) * 64 + ((b >> (6 * c)) & 63)]} << (6 * c);
    return out;
  }

 private:
  std::size_t chunks_;
};

// Lexicographic order on tables with Top < Both < Bot, first entry most
// significant.
inline bool canonical_less(const TruthFunction& a, const TruthFunction& b) {
  return std::lexicographical_compare(
      a.table().begin(), a.table().end(), b.table().begin(), b.table().end(),
      [](TruthValue x, TruthValue y) { return enumeration_index(x) < enumeration_index(y); });
}

}  // namespace detail

/// The n-ary functions generated by `basis` from the n projections and the
/// basis constants under pointwise application of the basis connectives.
///
/// Computed as a shortest-derivation search: functions are finalized in order
/// of witness size, so each witness has the fewest nodes of any formula over
/// the basis; among equally small candidates the one whose printed form is
/// lexicographically least wins. Output is sorted canonically by table.
inline std::vector<DefinableFunction> closure(const ConnectiveBasis& basis, std::size_t arity) {
  if (arity < 1) throw DomainError("closure arity must be at least 1");
  if (arity > 3) throw DomainError("closure is limited to arity 3 (tables must fit 64 bits)");
  for (const auto& g : basis.generators)
    if (g.function.arity() > 2)
      throw DomainError("generator '" + g.name + "' has arity " +
                        std::to_string(g.function.arity()) + "; only arities 0-2 are supported");

  using Code = std::uint64_t;
  const std::size_t entries = pow3(arity);
  const detail::PackedOps ops(entries);

  struct Entry {
    std::size_t size = 0;
    int generator = -1;  // -1: leaf
    Code a = 0, b = 0;
    Formula witness;     // leaves, and every finalized entry
    std::string text;    // printed witness, filled on demand
    bool finalized = false;
    bool has_text = false;
  };

  // Dense storage for arity <= 2 (18 bits); hash map for arity 3.
  const bool dense = 2 * entries <= 20;
  std::vector<std::int32_t> dense_index(dense ? (std::size_t{1} << (2 * entries)) : 0, -1);
  std::unordered_map<Code, std::int32_t> sparse_index;
  std::vector<Entry> store;
  std::vector<Code> codes;

  auto find = [&](Code c) -> Entry* {
    if (dense) {
      auto i = dense_index[c];
      return i < 0 ? nullptr : &store[i];
    }
    auto it = sparse_index.find(c);
    return it == sparse_index.end() ? nullptr : &store[it->second];
  };
  auto insert = [&](Code c) -> Entry& {
    auto i = static_cast<std::int32_t>(store.size());
    if (dense)
      dense_index[c] = i;
    else
      sparse_index.emplace(c, i);
    store.emplace_back();
    codes.push_back(c);
    return store.back();
  };

  auto build = [&](int gen, Code a, Code b) {
    const auto& g = basis.generators[static_cast<std::size_t>(gen)];
    std::vector<Formula> args;
    if (g.function.arity() >= 1) args.push_back(find(a)->witness);
    if (g.function.arity() == 2) args.push_back(find(b)->witness);
    return g.build(args);
  };
  auto text_of = [&](Entry& e) -> const std::string& {
    if (!e.has_text) {
      e.text = format_formula(e.generator < 0 || e.finalized ? e.witness
                                                             : build(e.generator, e.a, e.b));
      e.has_text = true;
    }
    return e.text;
  };

  using Item = std::pair<std::size_t, Code>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

  // Byte flags mirror Entry::finalized for the hot path when storage is dense.
  std::vector<std::uint8_t> finalized_flag(dense_index.size(), 0);

  auto offer = [&](Code c, std::size_t size, int gen, Code a, Code b, const Formula* leaf) {
    if (dense && finalized_flag[c]) return;
    Entry* e = find(c);
    if (e && e->finalized) return;
    if (!e || size < e->size) {
      if (!e) e = &insert(c);
      e->size = size;
      e->generator = gen;
      e->a = a;
      e->b = b;
      e->has_text = false;
      if (leaf) e->witness = *leaf;
      queue.emplace(size, c);
      return;
    }
    if (size > e->size) return;
    Formula candidate = leaf ? *leaf : build(gen, a, b);
    std::string text = format_formula(candidate);
    if (text < text_of(*e)) {
      e->generator = gen;
      e->a = a;
      e->b = b;
      e->text = std::move(text);
      e->has_text = true;
      if (leaf) e->witness = *leaf;
    }
  };

  const auto atoms = standard_atoms(arity);
  for (std::size_t k = 0; k < arity; ++k) {
    std::vector<TruthValue> t(entries);
    for (std::size_t i = 0; i < entries; ++i) t[i] = TruthFunction::inputs_at(arity, i)[k];
    const Formula leaf = atom(atoms[k]);
    offer(detail::PackedOps::pack(t), 1, -1, 0, 0, &leaf);
  }

  struct Op1 {
    int gen;
    std::vector<std::uint8_t> table;
  };
  std::vector<Op1> unary, binary;
  for (std::size_t gi = 0; gi < basis.generators.size(); ++gi) {
    const auto& g = basis.generators[gi];
    const int id = static_cast<int>(gi);
    if (g.function.arity() == 0) {
      const Formula leaf = g.build({});
      offer(detail::PackedOps::pack(TruthFunction::constant(arity, g.function[0]).table()), 1, -1,
            0, 0, &leaf);
    } else if (g.function.arity() == 1) {
      unary.push_back({id, detail::PackedOps::chunk_table(g.function)});
    } else {
      binary.push_back({id, detail::PackedOps::chunk_table(g.function)});
    }
  }

  // Size of the whole function space, when it fits: 3^(3^arity).
  const std::size_t space = arity <= 2 ? pow3(entries) : 0;

  std::vector<Code> done;
  std::vector<std::size_t> done_size;
  while (!queue.empty() && (space == 0 || done.size() < space)) {
    auto [size, code] = queue.top();
    queue.pop();
    Entry* e = find(code);
    if (e->finalized || e->size != size) continue;
    if (e->generator >= 0) e->witness = build(e->generator, e->a, e->b);
    e->finalized = true;
    if (dense) finalized_flag[code] = 1;
    done.push_back(code);
    done_size.push_back(size);

    for (const auto& u : unary) offer(ops.apply1(u.table, code), size + 1, u.gen, code, 0, nullptr);
    for (const auto& bop : binary) {
      for (std::size_t j = 0; j < done.size(); ++j) {
        const Code other = done[j];
        const std::size_t total = size + done_size[j] + 1;
        offer(ops.apply2(bop.table, code, other), total, bop.gen, code, other, nullptr);
        if (other != code) offer(ops.apply2(bop.table, other, code), total, bop.gen, other, code, nullptr);
      }
    }
  }

  std::vector<DefinableFunction> out;
  out.reserve(done.size());
  for (Code c : done)
    out.push_back({TruthFunction(arity, detail::PackedOps::unpack(c, entries)), find(c)->witness});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return detail::canonical_less(x.function, y.function);
  });
  return out;
}

/// Builds a formula realizing `f`: the disjunction, over every input tuple
/// v in table order, of (p1 <=> v1) & ... & (pn <=> vn) & f(v).
inline Formula synthesize(const TruthFunction& f) {
  const auto atoms = standard_atoms(f.arity());
  std::optional<Formula> result;
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    const auto args = TruthFunction::inputs_at(f.arity(), i);
    std::optional<Formula> selector;
    for (std::size_t k = 0; k < args.size(); ++k) {
      auto test = strong_iff(atom(atoms[k]), constant(args[k]));
      selector = selector ? conj(*selector, test) : test;
    }
    Formula term = selector ? conj(*selector, constant(f[i])) : constant(f[i]);
    result = result ? disj(*result, term) : term;
  }
  return *result;
}

/// Number of disjuncts in a left-nested disjunction chain.
inline std::size_t count_disjuncts(const Formula& f) {
  std::size_t n = 1;
  const Formula* g = &f;
  while (g->op() == Op::Or) {
    ++n;
    g = &g->lhs();
  }
  return n;
}

/// Values v with g(v) = v. Empty means no consistent value exists for a
/// sentence asserting g of itself.
inline std::vector<TruthValue> fixed_points(const TruthFunction& g) {
  if (g.arity() != 1) throw DomainError("fixed points need a unary truth function");
  std::vector<TruthValue> out;
  for (auto v : kEnumerationOrder)
    if (g(std::span(&v, 1)) == v) out.push_back(v);
  return out;
}

}  // namespace slp
