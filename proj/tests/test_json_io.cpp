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

#include <doctest.h>

#include "ainerve/error.hpp"
#include "ainerve/generate.hpp"
#include "ainerve/json_io.hpp"
#include "diagrams.hpp"
#include "fixtures.hpp"
#include "random_sset.hpp"

using namespace ainerve;
using namespace ainerve::testing;

namespace {

template <class Load, class Save>
void check_round_trip(const std::string& text, Load load, Save save) {
  const auto again = json::dump(save(load(json::parse(text))));
  CHECK(again == text);
}

}  // namespace

TEST_CASE("categories round trip") {
  std::vector<std::shared_ptr<const AInfCategory>> cats;
  for (const auto& [name, a] : test_categories()) cats.push_back(a);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) cats.push_back(random_category(seed));
  for (const auto& a : cats) {
    const std::string text = json::dump(json::from_category(*a));
    auto b = json::to_category(json::parse(text));
    CHECK(json::dump(json::from_category(*b)) == text);
    CHECK(b->label_count() == a->label_count());
    CHECK(b->operations().sorted_entries() == a->operations().sorted_entries());
  }
}

TEST_CASE("simplicial sets and simplices round trip") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const SimplicialSet x = random_simplicial_set(rng, 3);
    const std::string text = json::dump(json::from_sset(x));
    const SimplicialSet y = json::to_sset(json::parse(text));
    CHECK(json::dump(json::from_sset(y)) == text);
    for (int n = 0; n <= 3; ++n) {
      for (const auto& s : x.simplices(n)) CHECK(json::to_simplex(y, x.describe(s)) == s);
    }
  }
}

TEST_CASE("nerve simplices and horns round trip") {
  auto a = derived_category();
  for (int n = 1; n <= 2; ++n) {
    for (const auto& c : enumerate_simplices(*a, n)) {
      const auto j = json::from_nerve_simplex(*a, c);
      CHECK(json::to_nerve_simplex(*a, j) == c);
    }
  }
  const auto x = horn(3, 1, 3);
  HornWitness w{3, 1, {}};
  w.faces = {SimplexRef::nondegenerate(2, 0), SimplexRef{-1, OrdinalMap{}}, SimplexRef::nondegenerate(2, 1),
             SimplexRef::nondegenerate(2, 2)};
  const auto back = json::to_horn(x, json::from_horn(x, w));
  CHECK(back.faces == w.faces);
}

TEST_CASE("diagrams, maps and colimits round trip") {
  const std::vector<std::shared_ptr<const AInfDiagram>> diagrams = {
      constant_on_simplex(1, poset_category(1), 2),
      split_diagram(poset_category(2), 2, {0, 1, 2}, 2),
      split_diagram(iso_pair_category(), 1, {0, 1}, 2),
  };
  for (const auto& d : diagrams) {
    const std::string text = json::dump(json::from_diagram(*d));
    auto e = json::to_diagram(json::parse(text));
    CHECK_NOTHROW(e->validate());
    CHECK(json::dump(json::from_diagram(*e)) == text);

    const auto l = GlobalComplex::build(d, 2);
    const std::string ltext = json::dump(json::from_colimit(l));
    const auto l2 = json::to_colimit(json::parse(ltext));
    CHECK(json::dump(json::from_colimit(l2)) == ltext);

    const std::string ptext = json::dump(json::from_map(l.projection()));
    CHECK(json::dump(json::from_map(json::to_map(json::parse(ptext)))) == ptext);
  }
}

TEST_CASE("tampered colimit files are rejected") {
  const auto l = GlobalComplex::build(constant_on_simplex(1, poset_category(1), 2), 2);
  auto j = json::from_colimit(l);
  j["complex"]["cells"][0][0]["id"] = "renamed";
  CHECK_THROWS_AS(json::to_colimit(j), Error);
}

TEST_CASE("malformed input") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code([] { json::parse("{"); }) == Errc::invalid_input);
  CHECK(code([] { json::to_category(json::parse(R"({"objects": 3})")); }) == Errc::invalid_input);
  CHECK(code([] { json::to_category(json::parse(R"({"homs": []})")); }) == Errc::invalid_input);
  CHECK(code([] { json::to_sset(json::parse(R"({"cap": 1, "cells": [[{"id": "a"}], [{"id": "e", "faces": ["a", "b"]}]]})")); }) ==
        Errc::invalid_input);
  CHECK(code([] { json::to_sset(json::parse(R"({"cap": 0, "cells": [[{"id": "a^[0]"}]]})")); }) == Errc::invalid_input);
  auto a = poset_category(1);
  CHECK(code([&] { json::to_nerve_simplex(*a, json::parse(R"({"vertices": ["0", "2"]})")); }) == Errc::invalid_input);
  CHECK(code([&] { json::to_nerve_simplex(*a, json::parse(R"({"vertices": ["0", "1"], "f": {"012": []}})")); }) ==
        Errc::invalid_input);
}
