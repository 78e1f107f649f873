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

// Brute-force oracles for horn filling and homotopy categories of nerves.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ainerve/homotopy.hpp"
#include "ainerve/nerve.hpp"
#include "fixtures.hpp"

namespace ainerve::testing {

struct HornCount {
  std::size_t horns = 0;
  std::size_t unfillable = 0;
};

/// Horns Lambda^n_k in X by trying every tuple of (n-1)-simplices, and how
/// many of them have no filler among all n-simplices.
inline HornCount brute_force_horns(const SimplicialSet& x, int n, int k) {
  const auto lower = x.simplices(n - 1);
  const auto upper = x.simplices(n);
  HornCount out;
  std::vector<SimplexRef> faces(static_cast<std::size_t>(n) + 1);
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      for (int b = 1; b <= n; ++b) {
        for (int a = 0; a < b; ++a) {
          if (a == k || b == k) continue;
          if (x.face(faces[static_cast<std::size_t>(b)], a) != x.face(faces[static_cast<std::size_t>(a)], b - 1)) return;
        }
      }
      ++out.horns;
      const bool filled = std::any_of(upper.begin(), upper.end(), [&](const SimplexRef& s) {
        for (int i = 0; i <= n; ++i) {
          if (i != k && x.face(s, i) != faces[static_cast<std::size_t>(i)]) return false;
        }
        return true;
      });
      if (!filled) ++out.unfillable;
      return;
    }
    if (j == k) {
      rec(j + 1);
      return;
    }
    for (const auto& y : lower) {
      faces[static_cast<std::size_t>(j)] = y;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

/// Compares the homotopy category of the nerve with cycles modulo
/// boundaries computed by enumerating every element of every hom.
inline bool tau_matches_cohomology(const std::shared_ptr<const AInfCategory>& a, std::string* why = nullptr) {
  auto fail_with = [&](const std::string& what) {
    if (why) *why = what;
    return false;
  };
  const auto nerve = NerveComplex::build(a, 2);
  const HoCategory h = HoCategory::build(nerve.sset_ptr());
  if (h.object_count() != a->object_count()) return fail_with("object counts differ");
  for (int v = 0; v < h.object_count(); ++v) {
    if (nerve.cell(CellId{0, v}).vertices.front() != v) return fail_with("vertex order differs from object order");
  }
  const OracleTable table = oracle_table(*a);
  auto edge_value = [&](const SimplexRef& e) { return nerve.realize(e).at(0b11); };
  auto edge_of = [&](int s, int t, const Gf2Vector& v) {
    NerveSimplex c = NerveSimplex::blank({s, t});
    c.set(0b11, v);
    return nerve.locate(c);
  };
  for (int s = 0; s < a->object_count(); ++s) {
    for (int t = 0; t < a->object_count(); ++t) {
      std::set<Gf2Vector> cycles, boundaries;
      for (const auto& x : all_elements(*a, s, t)) {
        if (oracle_mu(*a, table, {s, t}, {x}).is_zero()) cycles.insert(x);
      }
      for (const auto& x : all_elements(*a, s, t)) boundaries.insert(oracle_mu(*a, table, {s, t}, {x}));
      const auto& hom = h.hom(s, t);
      if (hom.size() * boundaries.size() != cycles.size()) {
        return fail_with("hom(" + std::to_string(s) + "," + std::to_string(t) + ") has " + std::to_string(hom.size()) +
                         " classes, cohomology has " + std::to_string(cycles.size() / boundaries.size()));
      }
      std::set<Gf2Vector> covered;
      for (int c : hom) {
        const auto& members = h.edge_class(c).members;
        if (members.size() != boundaries.size()) return fail_with("class size differs from the boundary count");
        const Gf2Vector rep = edge_value(members.front());
        for (const auto& m : members) {
          const Gf2Vector v = edge_value(m);
          if (!cycles.count(v) || !boundaries.count(v + rep)) return fail_with("class is not a coset of the boundaries");
          covered.insert(v);
        }
      }
      if (covered != cycles) return fail_with("classes do not cover the cycles");
      for (int u = 0; u < a->object_count(); ++u) {
        for (int c1 : hom) {
          for (int c2 : h.hom(t, u)) {
            const Gf2Vector f = edge_value(h.edge_class(c1).members.front());
            const Gf2Vector g = edge_value(h.edge_class(c2).members.front());
            const Gf2Vector fg = oracle_mu(*a, table, {s, t, u}, {f, g});
            if (h.class_of(edge_of(s, u, fg)) != h.compose(c1, c2)) return fail_with("composition tables differ");
          }
        }
      }
    }
  }
  return true;
}

}  // namespace ainerve::testing
