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

#include <memory>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "ainerve/error.hpp"
#include "ainerve/generate.hpp"
#include "ainerve/homotopy.hpp"
#include "ainerve/nerve.hpp"
#include "fixtures.hpp"
#include "random_sset.hpp"
#include "tau_oracle.hpp"

using namespace ainerve;

namespace {

std::shared_ptr<const SimplicialSet> share(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

std::vector<std::size_t> counts(const SimplicialSet& x) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= x.cap(); ++n) out.push_back(x.cell_count(n));
  return out;
}

using Counts = std::vector<std::size_t>;

}  // namespace

TEST_CASE("standard simplices are quasi-categories but not Kan") {
  for (int n = 1; n <= 3; ++n) {
    const auto x = standard_simplex(n, 3);
    CHECK(is_quasi_category(x, 3));
    HornWitness w;
    CHECK_FALSE(is_kan(x, 3, &w));
    HornSearch search(x);
    CHECK(search.is_horn(w.n, w.k, w.faces));
    CHECK(search.fillers(w.n, w.k, w.faces).empty());
  }
  CHECK(is_kan(standard_simplex(0, 3), 3));
  const auto report = check_kan(standard_simplex(2, 2), 2);
  REQUIRE(report.witness);
  CHECK(report.witness->n == 2);
  CHECK(report.witness->k != 1);
}

TEST_CASE("a bare inner horn has no filler") {
  const auto x = horn(2, 1, 2);
  HornWitness w;
  CHECK_FALSE(is_quasi_category(x, 2, &w));
  CHECK(w.n == 2);
  CHECK(w.k == 1);
  CHECK(x.describe(w.faces[0]) == "12");
  CHECK(x.describe(w.faces[2]) == "01");
  CHECK_FALSE(is_quasi_category(boundary(2, 2), 2));
  CHECK(is_quasi_category(horn(2, 0, 2), 1));
  CHECK_THROWS_AS(check_kan(x, 3), Error);
}

TEST_CASE("horn search agrees with brute force on random simplicial sets") {
  std::mt19937_64 rng(2024);
  int disagreements = 0;
  int failures_seen = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const auto x = ainerve::testing::random_simplicial_set(rng, 3, {3, 4, 3, 2});
    HornSearch search(x);
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        std::size_t horns = 0, unfillable = 0;
        search.for_each_horn(n, k, [&](const std::vector<SimplexRef>& faces) {
          CHECK(search.is_horn(n, k, faces));
          ++horns;
          if (search.fillers(n, k, faces).empty()) ++unfillable;
          return true;
        });
        const auto expected = ainerve::testing::brute_force_horns(x, n, k);
        if (horns != expected.horns || unfillable != expected.unfillable) ++disagreements;
      }
    }
    bool inner_ok = true, all_ok = true;
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        const bool ok = ainerve::testing::brute_force_horns(x, n, k).unfillable == 0;
        all_ok = all_ok && ok;
        if (k > 0 && k < n) inner_ok = inner_ok && ok;
      }
    }
    CHECK(is_quasi_category(x, 3) == inner_ok);
    CHECK(is_kan(x, 3) == all_ok);
    failures_seen += inner_ok ? 0 : 1;
  }
  CHECK(disagreements == 0);
  CHECK(failures_seen > 0);
}

TEST_CASE("nerve truncations are quasi-categories") {
  for (const auto& [name, cat] : ainerve::testing::test_categories()) {
    INFO(name);
    const auto nerve = NerveComplex::build(cat, 3, 500000);
    const auto report = check_quasi_category(nerve.sset(), 3);
    CHECK(report.pass);
    CHECK(report.horns_checked > 0);
  }
  const auto arrow = NerveComplex::build(poset_category(1), 2);
  CHECK_FALSE(is_kan(arrow.sset(), 2));
}

TEST_CASE("homotopy categories of small simplicial sets") {
  const auto point = tau(share(standard_simplex(0, 2)));
  CHECK(point.object_count() == 1);
  CHECK(point.class_count() == 1);
  CHECK(point.identity(0) == 0);

  const auto tri = tau(share(standard_simplex(2, 3)));
  CHECK(tri.object_count() == 3);
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) CHECK(tri.hom(s, t).size() == (s <= t ? 1U : 0U));
  }
  CHECK(tri.check_table());
  CHECK_THROWS_AS(tau(share(horn(2, 1, 2))), Error);
  CHECK_THROWS_AS(tau(share(standard_simplex(1, 1))), Error);
}

TEST_CASE("the homotopy category of a nerve is its cohomology category") {
  for (const auto& [name, cat] : ainerve::testing::test_categories()) {
    INFO(name);
    std::string why;
    CHECK_MESSAGE(ainerve::testing::tau_matches_cohomology(cat, &why), why);
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorOptions options;
    options.max_objects = 3;
    auto a = random_category(seed, options);
    INFO("seed " << seed);
    std::string why;
    CHECK_MESSAGE(ainerve::testing::tau_matches_cohomology(a, &why), why);
  }
}

TEST_CASE("homotopy category tables are well defined") {
  for (const auto& [name, cat] : ainerve::testing::test_categories()) {
    INFO(name);
    const auto nerve = NerveComplex::build(cat, 2);
    const auto h = tau(nerve.sset_ptr());
    std::string why;
    CHECK_MESSAGE(h.check_table(&why), why);
    CHECK(h.cross_checked_pairs() > 0);
    for (int v = 0; v < h.object_count(); ++v) {
      CHECK(nerve.realize(h.edge_class(h.identity(v)).members.front()).at(0b11) != cat->zero(v, v));
      CHECK(h.class_of(nerve.sset().degeneracy(SimplexRef::nondegenerate(0, v), 0)) == h.identity(v));
    }
  }
}

TEST_CASE("arrow category nerve: zero edges survive in the homotopy category") {
  const auto nerve = NerveComplex::build(poset_category(1), 2);
  const auto h = tau(nerve.sset_ptr());
  CHECK(h.hom(0, 1).size() == 2);
  CHECK(h.hom(0, 0).size() == 2);
  CHECK(h.hom(1, 0).size() == 1);
  CHECK(tau0(h).size() == 2);
}

TEST_CASE("isomorphism classes of objects") {
  const auto iso = tau(NerveComplex::build(ainerve::testing::iso_pair_category(), 2).sset_ptr());
  CHECK(tau0(iso) == std::vector<std::vector<int>>{{0, 1}});

  SimplicialSet two(2);
  two.add_cell(0, "p", {});
  two.add_cell(0, "q", {});
  CHECK(tau0(tau(share(std::move(two)))).size() == 2);

  auto copy = ainerve::testing::derived_with_copy();
  const auto h = tau(NerveComplex::build(copy, 2).sset_ptr());
  const auto groups = tau0(h);
  CHECK(groups.size() == static_cast<std::size_t>(copy->object_count() - 1));
  const auto b = *copy->find_object("B");
  const auto tb = *copy->find_object("t(B)");
  bool merged = false;
  for (const auto& g : groups) merged = merged || (g.size() == 2 && ((g[0] == b && g[1] == tb) || (g[0] == tb && g[1] == b)));
  CHECK(merged);
}

TEST_CASE("equivalence edges match invertible cohomology classes") {
  for (const auto& [name, cat] : ainerve::testing::test_categories()) {
    INFO(name);
    const auto nerve = NerveComplex::build(cat, 2);
    const auto h = tau(nerve.sset_ptr());
    const CohomologyCategory coh(cat);
    for (const auto& e : nerve.sset().simplices(1)) {
      const auto c = nerve.realize(e);
      const int s = c.vertices[0], t = c.vertices[1];
      CHECK(is_equivalence_edge(h, e) == coh.is_isomorphism(s, t, coh.classify(s, t, c.at(0b11))));
      if (e.is_degenerate()) CHECK(is_equivalence_edge(h, e));
    }
  }
  const auto poset = poset_category(1);
  const auto arrow = NerveComplex::build(poset, 2);
  const auto h = tau(arrow.sset_ptr());
  NerveSimplex f = NerveSimplex::blank({0, 1});
  f.set(0b11, poset->basis_vector(*poset->find_label("a01")));
  CHECK_FALSE(is_equivalence_edge(h, arrow.locate(f)));
}

TEST_CASE("maximal Kan subcomplexes") {
  {
    const auto h = tau(NerveComplex::build(poset_category(1), 2).sset_ptr());
    // Over each vertex the triangle (e, e, e) with f_{0,1,2} = e is nondegenerate.
    CHECK(counts(maximal_kan_subcomplex(h)) == Counts{2, 0, 2});
  }
  {
    const auto x = share(standard_simplex(0, 3));
    CHECK(counts(maximal_kan_subcomplex(tau(x))) == counts(*x));
  }
  for (const auto& [name, cat] : ainerve::testing::test_categories()) {
    INFO(name);
    const auto nerve = NerveComplex::build(cat, 3, 500000);
    const auto h = tau(nerve.sset_ptr());
    const auto k = share(maximal_kan_subcomplex(h));
    k->validate();
    // Hand count: cells whose edge data are all invertible in cohomology.
    const CohomologyCategory coh(cat);
    for (int n = 0; n <= 3; ++n) {
      std::size_t expected = 0;
      for (std::size_t i = 0; i < nerve.sset().cell_count(n); ++i) {
        const auto& c = nerve.cell(CellId{n, static_cast<int>(i)});
        bool all = true;
        for (SubsetMask m : nerve_subsets(n)) {
          if (std::popcount(m) != 2) continue;
          const auto e = subset_elements(m);
          const int s = c.vertices[static_cast<std::size_t>(e[0])], t = c.vertices[static_cast<std::size_t>(e[1])];
          all = all && coh.is_isomorphism(s, t, coh.classify(s, t, c.at(m)));
        }
        if (all) {
          ++expected;
          CHECK(k->find(nerve.sset().cell_id(CellId{n, static_cast<int>(i)})).has_value());
        }
      }
      CHECK(k->cell_count(n) == expected);
    }
    CHECK(is_kan(*k, 3));
    const auto again = maximal_kan_subcomplex(tau(k));
    CHECK(counts(again) == counts(*k));
  }
}
