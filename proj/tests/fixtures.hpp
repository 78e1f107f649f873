// Copyright 2026 The ainerve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test categories and independent oracles shared by the test binaries.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ainerve/ainf.hpp"
#include "ainerve/generate.hpp"

namespace ainerve::testing {

/// Every element of hom(s, t), zero first.
inline std::vector<Gf2Vector> all_elements(const AInfCategory& a, int s, int t) {
  const auto dim = static_cast<std::size_t>(a.hom_dim(s, t));
  std::vector<Gf2Vector> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
    Gf2Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v.set(i, ((bits >> i) & 1U) != 0);
    out.push_back(std::move(v));
  }
  return out;
}

/// Operation table as an ordered map from label tuples to values.
using OracleTable = std::map<std::vector<int>, Gf2Vector>;

inline OracleTable oracle_table(const AInfCategory& a) {
  OracleTable out;
  for (const auto& [key, value] : a.operations().sorted_entries()) out.emplace(std::vector<int>(key.begin(), key.end()), value);
  return out;
}

/// mu^d on elements, expanded over the supports of the arguments.
inline Gf2Vector oracle_mu(const AInfCategory& a, const OracleTable& table, const std::vector<int>& objs,
                           const std::vector<Gf2Vector>& args) {
  Gf2Vector out = a.zero(objs.front(), objs.back());
  std::vector<int> key(args.size());
  std::function<void(std::size_t)> expand = [&](std::size_t k) {
    if (k == args.size()) {
      const auto it = table.find(key);
      if (it != table.end()) out += it->second;
      return;
    }
    for (std::size_t b : args[k].support()) {
      key[k] = a.hom_offset(objs[k], objs[k + 1]) + static_cast<int>(b);
      expand(k + 1);
    }
  };
  expand(0);
  return out;
}

inline Gf2Vector oracle_mu(const AInfCategory& a, const std::vector<int>& objs, const std::vector<Gf2Vector>& args) {
  return oracle_mu(a, oracle_table(a), objs, args);
}

/// A-infinity relations on every tuple of basis elements along every object
/// chain of length up to dmax (the relations are multilinear). Independent
/// of the library checker.
inline bool oracle_relations_hold(const AInfCategory& a, int dmax) {
  const int n = a.object_count();
  const OracleTable table = oracle_table(a);
  std::vector<int> objs;
  std::vector<Gf2Vector> args;
  bool ok = true;
  std::function<void(int)> extend = [&](int d) {
    if (!ok) return;
    if (d >= 1) {
      Gf2Vector total = a.zero(objs.front(), objs.back());
      for (int m = 1; m <= d; ++m) {
        for (int p = 0; p + m <= d; ++p) {
          std::vector<int> in_objs(objs.begin() + p, objs.begin() + p + m + 1);
          std::vector<Gf2Vector> in_args(args.begin() + p, args.begin() + p + m);
          const Gf2Vector inner = oracle_mu(a, table, in_objs, in_args);
          if (inner.is_zero()) continue;
          std::vector<int> out_objs(objs.begin(), objs.begin() + p + 1);
          out_objs.insert(out_objs.end(), objs.begin() + p + m, objs.end());
          std::vector<Gf2Vector> out_args(args.begin(), args.begin() + p);
          out_args.push_back(inner);
          out_args.insert(out_args.end(), args.begin() + p + m, args.end());
          total += oracle_mu(a, table, out_objs, out_args);
        }
      }
      if (!total.is_zero()) {
        ok = false;
        return;
      }
    }
    if (d == dmax) return;
    for (int y = 0; y < n && ok; ++y) {
      const auto dim = static_cast<std::size_t>(a.hom_dim(objs.back(), y));
      for (std::size_t j = 0; j < dim; ++j) {
        objs.push_back(y);
        args.push_back(Gf2Vector::unit(dim, j));
        extend(d + 1);
        objs.pop_back();
        args.pop_back();
        if (!ok) return;
      }
    }
  };
  for (int x = 0; x < n && ok; ++x) {
    objs = {x};
    extend(0);
  }
  return ok;
}

/// Strict unit laws on all elements; arities >= 3 checked up to dmax.
inline bool oracle_units_hold(const AInfCategory& a, int dmax) {
  const int n = a.object_count();
  for (int x = 0; x < n; ++x) {
    if (!a.has_unit(x)) return false;
    const Gf2Vector e = a.unit(x);
    if (!oracle_mu(a, {x, x}, {e}).is_zero()) return false;
    for (int y = 0; y < n; ++y) {
      for (const auto& f : all_elements(a, x, y)) {
        if (oracle_mu(a, {x, x, y}, {e, f}) != f) return false;
      }
      for (const auto& f : all_elements(a, y, x)) {
        if (oracle_mu(a, {y, x, x}, {f, e}) != f) return false;
      }
    }
  }
  for (const auto& [key, value] : a.operations().sorted_entries()) {
    if (static_cast<int>(key.size()) < 3 || static_cast<int>(key.size()) > dmax) continue;
    for (int l : key) {
      const auto& lab = a.label(l);
      if (lab.source == lab.target && a.unit_label(lab.source) == l) return false;
    }
  }
  return true;
}

inline bool oracle_valid(const AInfCategory& a) {
  const int dmax = std::max(2, 2 * a.max_arity());
  return oracle_relations_hold(a, dmax) && oracle_units_hold(a, dmax);
}

/// Directed four-object category A -> B -> C -> D with two-dimensional
/// hom(A, D), found by exhaustive search over the sparse tables below for
/// the first valid one with mu^1 != 0 and mu^3 != 0. Tables without the
/// composites A -> C and B -> D are tried first.
inline std::shared_ptr<const AInfCategory> derived_category() {
  static const std::shared_ptr<const AInfCategory> found = [] {
    auto vec2 = [](int bits) {
      std::vector<std::string> out;
      if (bits & 1) out.push_back("u");
      if (bits & 2) out.push_back("v");
      return out;
    };
    for (int composites = 0; composites < 4; ++composites) {
      const bool has_p = composites & 1;
      const bool has_q = composites & 2;
      for (int d1 = 1; d1 < 16; ++d1) {
        for (int ab = 0; ab < (has_p ? 2 : 1); ++ab) {
          for (int bc = 0; bc < (has_q ? 2 : 1); ++bc) {
            for (int aq = 0; aq < (has_q ? 4 : 1); ++aq) {
              for (int pc = 0; pc < (has_p ? 4 : 1); ++pc) {
                for (int abc = 1; abc < 4; ++abc) {
                  AInfCategory::Builder b;
                  for (const char* x : {"A", "B", "C", "D"}) {
                    b.add_object(x);
                    b.set_hom(x, x, {std::string("e") + x});
                    b.set_unit(x, std::string("e") + x);
                  }
                  b.set_hom("A", "B", {"a"});
                  b.set_hom("B", "C", {"b"});
                  b.set_hom("C", "D", {"c"});
                  if (has_p) b.set_hom("A", "C", {"p"});
                  if (has_q) b.set_hom("B", "D", {"q"});
                  b.set_hom("A", "D", {"u", "v"});
                  b.set_mu({"u"}, vec2(d1 & 3));
                  b.set_mu({"v"}, vec2(d1 >> 2));
                  if (ab) b.set_mu({"a", "b"}, {"p"});
                  if (bc) b.set_mu({"b", "c"}, {"q"});
                  if (aq) b.set_mu({"a", "q"}, vec2(aq));
                  if (pc) b.set_mu({"p", "c"}, vec2(pc));
                  b.set_mu({"a", "b", "c"}, vec2(abc));
                  b.add_unit_laws();
                  auto cat = b.build();
                  if (check_ainf_relations(*cat, 6).pass && check_strict_units(*cat).pass) return cat;
                }
              }
            }
          }
        }
      }
    }
    return std::shared_ptr<const AInfCategory>{};
  }();
  return found;
}

/// Objects X, Y with hom(X, Y) = {f}, hom(Y, X) = {g}, f g = eX, g f = eY.
inline std::shared_ptr<const AInfCategory> iso_pair_category() {
  AInfCategory::Builder b;
  b.add_object("X");
  b.add_object("Y");
  b.set_hom("X", "X", {"eX"});
  b.set_hom("Y", "Y", {"eY"});
  b.set_hom("X", "Y", {"f"});
  b.set_hom("Y", "X", {"g"});
  b.set_unit("X", "eX");
  b.set_unit("Y", "eY");
  b.set_mu({"f", "g"}, {"eX"});
  b.set_mu({"g", "f"}, {"eY"});
  b.add_unit_laws();
  return b.build();
}

/// The poset [1] with an acyclic pair u -> v added to hom(0, 1).
inline std::shared_ptr<const AInfCategory> noisy_arrow_category() {
  AInfCategory::Builder b;
  b.add_object("0");
  b.add_object("1");
  b.set_hom("0", "0", {"e0"});
  b.set_hom("1", "1", {"e1"});
  b.set_hom("0", "1", {"a01", "u", "v"});
  b.set_unit("0", "e0");
  b.set_unit("1", "e1");
  b.set_mu({"u"}, {"v"});
  b.add_unit_laws();
  return b.build();
}

/// The derived category with an isomorphic copy of B adjoined.
inline std::shared_ptr<const AInfCategory> derived_with_copy() {
  auto c = derived_category();
  auto [sub, inclusion] = full_subcategory(c, {*c->find_object("B")});
  return degenerate_extension(c, sub, inclusion, "t").category;
}

struct NamedCategory {
  std::string name;
  std::shared_ptr<const AInfCategory> category;
};

inline std::vector<NamedCategory> test_categories() {
  return {{"poset1", poset_category(1)},          {"poset2", poset_category(2)},
          {"poset3", poset_category(3)},          {"discrete2", discrete_category(2)},
          {"iso_pair", iso_pair_category()},      {"noisy_arrow", noisy_arrow_category()},
          {"derived", derived_category()},        {"derived_copy", derived_with_copy()}};
}

inline std::vector<std::string> random_tuple(std::mt19937_64& rng, const AInfCategory& a, int length) {
  std::vector<std::vector<int>> tuples;
  for_each_composable_tuple(a, length, [&](std::span<const int> t) {
    tuples.emplace_back(t.begin(), t.end());
    return true;
  });
  if (tuples.empty()) return {};
  std::vector<std::string> out;
  for (int l : tuples[rng() % tuples.size()]) out.push_back(a.label(l).name);
  return out;
}

// Toggles one output coefficient of mu on a random composable basis tuple.
inline std::shared_ptr<const AInfCategory> mutate(std::mt19937_64& rng, const AInfCategory& a, int max_arity) {
  for (;;) {
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_arity));
    const auto inputs = random_tuple(rng, a, d);
    if (inputs.empty()) continue;
    const int s = a.label(*a.find_label(inputs.front())).source;
    const int t = a.label(*a.find_label(inputs.back())).target;
    if (a.hom_dim(s, t) == 0) continue;
    const int out = a.hom_offset(s, t) + static_cast<int>(rng() % static_cast<unsigned>(a.hom_dim(s, t)));
    AInfCategory::Builder b(a);
    b.toggle_mu(inputs, a.label(out).name);
    return b.build();
  }
}

}  // namespace ainerve::testing
