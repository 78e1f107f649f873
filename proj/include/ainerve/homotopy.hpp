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
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ainerve/simplicial.hpp"

namespace ainerve {

/// A horn Lambda^n_k -> X given by its faces; faces[k] is unused.
struct HornWitness {
  int n = 0;
  int k = 0;
  std::vector<SimplexRef> faces;
};

struct HornReport {
  std::string check;  // "quasi_category" or "kan"
  int cap = 0;
  bool pass = true;
  std::size_t horns_checked = 0;
  std::optional<HornWitness> witness;
};

/// Exhaustive horn enumeration over the simplices of X, with face indices
/// built on first use.
class HornSearch {
 public:
  explicit HornSearch(const SimplicialSet& x);

  const SimplicialSet& sset() const noexcept { return *x_; }
  const std::vector<SimplexRef>& simplices(int n);
  const std::vector<SimplexRef>& faces_of(int n, std::size_t index);

  /// Visits every compatible face tuple of Lambda^n_k in X. Returning false
  /// from the visitor stops the search.
  void for_each_horn(int n, int k, const std::function<bool(const std::vector<SimplexRef>&)>& visit);
  /// The n-simplices whose faces other than k match the horn.
  const std::vector<int>& fillers(int n, int k, const std::vector<SimplexRef>& faces);
  /// True iff the faces form a horn: d_i y_j = d_{j-1} y_i for i < j, both != k.
  bool is_horn(int n, int k, const std::vector<SimplexRef>& faces) const;

 private:
  struct Level {
    bool built = false;
    std::vector<SimplexRef> simplices;
    std::vector<std::vector<SimplexRef>> faces;
    // by_face[i][y] = simplices with d_i = y
    std::vector<std::unordered_map<SimplexRef, std::vector<int>, SimplexRefHash>> by_face;
    // by_horn[k][faces with k blanked] = simplices
    std::vector<std::optional<std::unordered_map<std::vector<SimplexRef>, std::vector<int>, SimplexTupleHash>>> by_horn;
  };
  Level& level(int n);

  const SimplicialSet* x_;
  std::vector<Level> levels_;
};

/// Inner horns Lambda^n_k, 2 <= n <= cap; the first unfillable one is the witness.
HornReport check_quasi_category(const SimplicialSet& x, int cap);
/// All horns Lambda^n_k, 1 <= n <= cap.
HornReport check_kan(const SimplicialSet& x, int cap);
bool is_quasi_category(const SimplicialSet& x, int cap, HornWitness* witness = nullptr);
bool is_kan(const SimplicialSet& x, int cap, HornWitness* witness = nullptr);

/// Homotopy category of a quasi-category truncation: edges modulo the
/// relation generated by 2-simplices with an outer degenerate edge, composed
/// along 2-simplices.
class HoCategory {
 public:
  struct EdgeClass {
    int source = 0;
    int target = 0;
    std::vector<SimplexRef> members;  // sorted; members.front() is the representative
  };

  /// Throws Error(precondition) when a composable pair of edges has no
  /// 2-simplex or two 2-simplices disagree on a composite.
  static HoCategory build(std::shared_ptr<const SimplicialSet> x);

  const SimplicialSet& sset() const noexcept { return *x_; }
  int object_count() const noexcept { return objects_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  const EdgeClass& edge_class(int c) const { return classes_.at(static_cast<std::size_t>(c)); }
  int class_of(const SimplexRef& edge) const;
  /// Class ids from s to t in increasing order.
  const std::vector<int>& hom(int s, int t) const;
  int identity(int object) const;
  /// first then second.
  int compose(int first, int second) const;
  std::optional<int> inverse(int c) const;
  bool is_isomorphism(int c) const { return inverse(c).has_value(); }
  /// Composable class pairs that arose from two or more distinct 2-simplices.
  std::size_t cross_checked_pairs() const noexcept { return cross_checked_; }
  /// Associativity and unit laws of the finite composition table.
  bool check_table(std::string* witness = nullptr) const;

 private:
  std::shared_ptr<const SimplicialSet> x_;
  int objects_ = 0;
  std::vector<EdgeClass> classes_;
  std::unordered_map<SimplexRef, int, SimplexRefHash> class_of_;
  std::vector<std::vector<int>> hom_;
  std::vector<int> identity_;
  std::unordered_map<std::uint64_t, int> compose_;
  std::size_t cross_checked_ = 0;
};

inline HoCategory tau(std::shared_ptr<const SimplicialSet> x) { return HoCategory::build(std::move(x)); }

/// Vertices grouped by isomorphism in the homotopy category, each group
/// sorted, groups ordered by their smallest vertex.
std::vector<std::vector<int>> tau0(const HoCategory& h);

bool is_equivalence_edge(const HoCategory& h, const SimplexRef& edge);

/// The simplices all of whose edges are equivalences, with cell ids kept.
SimplicialSet maximal_kan_subcomplex(const HoCategory& h);

}  // namespace ainerve
