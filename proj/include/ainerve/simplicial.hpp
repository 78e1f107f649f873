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

// Finitely presented simplicial sets, truncated at an explicit dimension cap.
//
// Every simplex is written in Eilenberg-Zilber normal form: a nondegenerate
// cell together with a monotone surjection onto its dimension. A simplex x
// acts on ordinal maps on the right, x.a for a : [k] -> [n].

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ainerve {

/// Non-strictly increasing map [source_dim] -> [target_dim].
struct OrdinalMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<int> values;

  static OrdinalMap identity(int n);
  /// d^i : [n-1] -> [n], skipping i.
  static OrdinalMap coface(int n, int i);
  /// s^i : [n+1] -> [n], hitting i twice.
  static OrdinalMap codegeneracy(int n, int i);
  /// Validates monotonicity and range.
  static OrdinalMap from_values(int target_dim, std::vector<int> values);
  /// Surjection out of [source_dim] that repeats exactly at the listed indices.
  static OrdinalMap from_degeneracy_word(int source_dim, const std::vector<int>& word);
  /// Injection [k] -> [n] with the given (strictly increasing) image.
  static OrdinalMap from_image(int target_dim, const std::vector<int>& image);

  bool is_mono() const;
  bool is_epi() const;
  bool is_identity() const;
  /// Indices i with values[i] == values[i+1], in decreasing order. For a
  /// surjection this is its canonical degeneracy word s_{i1} ... s_{ir}.
  std::vector<int> degeneracy_word() const;

  friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
  friend auto operator<=>(const OrdinalMap&, const OrdinalMap&) = default;
};

/// outer o inner: apply inner first.
OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner);
/// Returns {epi, mono} with m == mono o epi.
std::pair<OrdinalMap, OrdinalMap> epi_mono(const OrdinalMap& m);

std::vector<OrdinalMap> monotone_maps(int source_dim, int target_dim);
std::vector<OrdinalMap> surjections(int source_dim, int target_dim);
std::vector<OrdinalMap> injections(int source_dim, int target_dim);

struct CellId {
  int dim = 0;
  int index = 0;
  friend bool operator==(const CellId&, const CellId&) = default;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// A simplex in normal form: base.degeneracy where base is nondegenerate.
struct SimplexRef {
  int base = 0;
  OrdinalMap degeneracy;

  static SimplexRef nondegenerate(int dim, int base);

  int dim() const noexcept { return degeneracy.source_dim; }
  int base_dim() const noexcept { return degeneracy.target_dim; }
  CellId cell() const noexcept { return {base_dim(), base}; }
  bool is_degenerate() const noexcept { return dim() != base_dim(); }

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& s) const noexcept;
};

struct SimplexTupleHash {
  std::size_t operator()(const std::vector<SimplexRef>& t) const noexcept;
};

class SimplicialSet {
 public:
  explicit SimplicialSet(int cap);

  int cap() const noexcept { return cap_; }
  /// Highest dimension holding a nondegenerate cell, or -1 when empty.
  int top_dim() const noexcept;

  /// Adds a nondegenerate cell; faces are d_0 ... d_dim. Returns its index.
  int add_cell(int dim, std::string id, std::vector<SimplexRef> faces);

  /// Checks that faces resolve and that d_i d_j = d_{j-1} d_i for i < j.
  void validate() const;

  std::size_t cell_count(int dim) const;
  const std::string& cell_id(CellId cell) const;
  const std::vector<SimplexRef>& faces(CellId cell) const;
  std::optional<CellId> find(std::string_view id) const;

  SimplexRef act(const SimplexRef& s, const OrdinalMap& m) const;
  SimplexRef face(const SimplexRef& s, int i) const;
  SimplexRef degeneracy(const SimplexRef& s, int i) const;
  /// Every simplex of dimension n, degenerate ones included, in a fixed order.
  std::vector<SimplexRef> simplices(int n) const;
  /// Vertex cells (indices into dimension 0) of a simplex, in order.
  std::vector<int> vertices(const SimplexRef& s) const;

  /// "id" for nondegenerate simplices, "id^[w...]" otherwise.
  std::string describe(const SimplexRef& s) const;

 private:
  SimplexRef face_of_cell(CellId cell, const OrdinalMap& mono) const;
  void check_ref(const SimplexRef& s) const;

  int cap_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::vector<std::vector<SimplexRef>>> faces_;
  std::unordered_map<std::string, CellId> lookup_;
};

SimplicialSet standard_simplex(int n, int cap = -1);
SimplicialSet horn(int n, int k, int cap = -1);
SimplicialSet boundary(int n, int cap = -1);

/// Simplicial map given by the images of nondegenerate cells.
class SimplicialMap {
 public:
  SimplicialMap(std::shared_ptr<const SimplicialSet> domain, std::shared_ptr<const SimplicialSet> codomain);

  const SimplicialSet& domain() const noexcept { return *domain_; }
  const SimplicialSet& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const SimplicialSet>& domain_ptr() const noexcept { return domain_; }
  const std::shared_ptr<const SimplicialSet>& codomain_ptr() const noexcept { return codomain_; }

  void assign(CellId cell, SimplexRef image);
  const SimplexRef& image(CellId cell) const;
  SimplexRef apply(const SimplexRef& s) const;

  /// True iff every nondegenerate cell commutes with all of its faces. On
  /// failure `witness` names the offending cell and face.
  bool is_simplicial(std::string* witness = nullptr) const;

 private:
  std::shared_ptr<const SimplicialSet> domain_;
  std::shared_ptr<const SimplicialSet> codomain_;
  std::vector<std::vector<std::optional<SimplexRef>>> images_;
};

/// The category of simplices of X up to a cap: objects are simplices, a
/// morphism a -> b is an ordinal map m with b.m == a.
class SimplexCategory {
 public:
  struct Morphism {
    int source = 0;
    int target = 0;
    OrdinalMap map;
  };

  static SimplexCategory build(const SimplicialSet& x, int cap);

  /// The subcategory Simp(X): nondegenerate objects and monomorphisms.
  SimplexCategory nondegenerate_mono() const;

  const std::vector<SimplexRef>& objects() const noexcept { return objects_; }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  std::optional<int> find_object(const SimplexRef& s) const;
  std::optional<int> find_morphism(int source, int target, const OrdinalMap& map) const;
  /// first then second.
  std::optional<int> compose(int first, int second) const;

  bool has_identities() const;
  bool closed_under_composition() const;

 private:
  std::vector<SimplexRef> objects_;
  std::vector<Morphism> morphisms_;
};

}  // namespace ainerve
