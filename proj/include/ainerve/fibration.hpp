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

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ainerve/colimit.hpp"
#include "ainerve/homotopy.hpp"
#include "ainerve/simplicial.hpp"

namespace ainerve {

/// co checks Lambda^n_0 horns and lifts out of a vertex; contra checks
/// Lambda^n_n horns and lifts into a vertex.
enum class Direction { co, contra };

std::string to_string(Direction d);
Direction parse_direction(std::string_view text);

/// The pullback X x_B Delta^n of p : X -> B along a base simplex, up to a cap.
/// Cells are pairs (s, alpha) with p(s) = sigma.alpha; ids read "<s>|<alpha>".
class Preimage {
 public:
  static Preimage build(const SimplicialMap& p, const SimplexRef& sigma, int cap);

  const SimplicialSet& sset() const noexcept { return *sset_; }
  std::shared_ptr<const SimplicialSet> sset_ptr() const noexcept { return sset_; }
  const SimplexRef& base_simplex() const noexcept { return sigma_; }
  /// Normal form of the pair (s, alpha); nullopt when p(s) != sigma.alpha.
  std::optional<SimplexRef> locate(const SimplexRef& s, const OrdinalMap& alpha) const;

 private:
  const SimplicialSet* x_ = nullptr;
  SimplexRef sigma_;
  std::shared_ptr<SimplicialSet> sset_;
  std::vector<std::map<std::pair<SimplexRef, std::vector<int>>, int>> index_;
};

/// A relative horn lifting problem that has no solution: the horn in the
/// domain and the base simplex it should be lifted over.
struct LiftingWitness {
  HornWitness horn;
  SimplexRef base_filler;
};

/// A base edge and a vertex over its source (co) or target (contra) for
/// which no lift passes.
struct LiftFailure {
  SimplexRef base_edge;
  int vertex = 0;
  std::size_t lifts = 0;
  std::optional<LiftingWitness> first_lift_horn;  // why the first lift is not co-Cartesian
};

struct FibrationReport {
  Direction direction = Direction::co;
  int cap = 0;

  bool inner_checked = false;
  bool inner_horn_pass = true;
  std::size_t inner_horns_checked = 0;
  std::optional<LiftingWitness> inner_horn_witness;
  bool preimage_pass = true;
  std::size_t preimages_checked = 0;
  std::optional<SimplexRef> preimage_witness_simplex;
  std::optional<HornWitness> preimage_witness_horn;  // in the preimage's own cells

  bool cocartesian_checked = false;
  bool cocartesian_pass = true;
  bool equivalence_checked = false;
  bool equivalence_pass = true;
  std::size_t cocartesian_horns_checked = 0;
  std::size_t lift_problems = 0;
  std::size_t cocartesian_edges = 0;
  std::optional<LiftFailure> cocartesian_witness;
  std::optional<LiftFailure> equivalence_witness;

  bool inner_pass() const noexcept { return inner_horn_pass && preimage_pass; }
  bool characterizations_agree() const noexcept { return inner_horn_pass == preimage_pass; }
  bool pass() const noexcept { return inner_pass() && cocartesian_pass && equivalence_pass; }
};

/// Inner fibration up to the cap, by relative inner horn lifting and by
/// checking that the preimage of every nondegenerate base cell is a
/// quasi-category.
FibrationReport is_inner_fibration(const SimplicialMap& p, int cap);

/// Every Lambda^n_0 lifting problem (n <= cap) whose edge {0,1} is e has a
/// solution; Lambda^n_n and edge {n-1,n} for contra.
bool is_cocartesian_edge(const SimplicialMap& p, const SimplexRef& e, int cap, Direction direction = Direction::co,
                         LiftingWitness* witness = nullptr);

/// Decides whether a domain edge is an equivalence of the family it lies in.
using EquivalenceTest = std::function<bool(const SimplexRef& edge)>;

/// For every base edge m and every vertex a over its source (co) or target
/// (contra), some lift of m at a is co-Cartesian. With an equivalence test,
/// also checks that some lift at a is an equivalence.
FibrationReport has_cocartesian_lifts(const SimplicialMap& p, int cap, Direction direction = Direction::co,
                                      const EquivalenceTest& equivalence = {});

/// is_inner_fibration, then has_cocartesian_lifts when the first passes.
FibrationReport check_fibration(const SimplicialMap& p, int cap, Direction direction = Direction::co,
                                const EquivalenceTest& equivalence = {});

/// An edge (Sigma, g) of L is an equivalence when g is an isomorphism in the
/// cohomology category of the category over the cell of Sigma.
EquivalenceTest colimit_equivalence_test(std::shared_ptr<const GlobalComplex> l);

/// check_fibration on the projection of L with the colimit equivalence test.
FibrationReport check_fibration(std::shared_ptr<const GlobalComplex> l, int cap, Direction direction = Direction::co);

}  // namespace ainerve
