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
#include <unordered_map>
#include <utility>
#include <vector>

#include "ainerve/ainf.hpp"
#include "ainerve/nerve.hpp"
#include "ainerve/simplicial.hpp"

namespace ainerve {

/// A diagram of A-infinity categories over the nondegenerate simplices of a
/// finite base whose cells have pairwise distinct vertices. Every object of
/// F(sigma) is tagged with a base vertex of sigma; face maps are strict fully
/// faithful embeddings F(d_i sigma) -> F(sigma).
class AInfDiagram {
 public:
  explicit AInfDiagram(std::shared_ptr<const SimplicialSet> base);

  /// `tags[x]` is the base vertex (index into dimension 0) of object x.
  void set_category(CellId cell, std::shared_ptr<const AInfCategory> category, std::vector<int> tags);
  void set_face_embedding(CellId cell, int face, StrictFunctor embedding);

  /// Throws Error(invalid_input) for missing or misshapen data and
  /// Error(precondition) for embeddings that are not fully faithful, do not
  /// respect tags, or fail functoriality.
  void validate() const;

  const SimplicialSet& base() const noexcept { return *base_; }
  const std::shared_ptr<const SimplicialSet>& base_ptr() const noexcept { return base_; }
  const std::shared_ptr<const AInfCategory>& category(CellId cell) const;
  const std::vector<int>& tags(CellId cell) const;
  /// Tags as positions 0..dim in the cell's vertex list.
  const std::vector<int>& positions(CellId cell) const;
  bool has_face_embedding(CellId cell, int face) const;
  const StrictFunctor& face_embedding(CellId cell, int face) const;
  /// F(sigma.m) -> F(sigma) for a monomorphism m into the cell.
  const StrictFunctor& embedding(CellId cell, const OrdinalMap& mono) const;

 private:
  struct Entry {
    std::shared_ptr<const AInfCategory> category;
    std::vector<int> tags;
    std::vector<int> positions;
    std::vector<std::optional<StrictFunctor>> faces;
  };
  const Entry& entry(CellId cell) const;
  Entry& entry(CellId cell);

  std::shared_ptr<const SimplicialSet> base_;
  std::vector<std::vector<Entry>> entries_;
  mutable std::map<std::pair<CellId, std::vector<int>>, StrictFunctor> embeddings_;
};

/// F over every base vertex is `category`; over a cell with vertices
/// v0..vm, objects "v:name" for each vertex v, with hom((v,a),(w,b)) = hom(a,b).
AInfDiagram constant_diagram(std::shared_ptr<const SimplicialSet> base, std::shared_ptr<const AInfCategory> category);

/// F on a possibly degenerate simplex sigma.eta, built by adjoining copies of
/// vertex categories along the degeneracy word of eta.
struct DegenerateValue {
  std::shared_ptr<const AInfCategory> category;
  StrictFunctor projection;    // onto F of the nondegenerate cell
  std::vector<int> positions;  // per object, a vertex position of the simplex
};
DegenerateValue extend_to_degenerate(const AInfDiagram& diagram, const SimplexRef& sigma);

/// Base simplex through the vertices of f, for f a simplex of N(F(sigma))
/// with `positions` as in DegenerateValue. Empty when the positions of the
/// vertices of f decrease somewhere.
std::optional<SimplexRef> p_sigma(const SimplicialSet& base, const SimplexRef& sigma, const std::vector<int>& positions,
                                  const NerveSimplex& f);

/// Preimage of a nerve simplex of the target under a fully faithful strict
/// embedding; empty when some vertex or value is outside the image.
std::optional<NerveSimplex> restrict_simplex(const StrictFunctor& embedding, const NerveSimplex& c);

/// The colimit L of the nerves of a diagram, truncated at a cap. A k-cell is
/// a base k-simplex sigma = tau.eta with tau nondegenerate, together with a
/// k-simplex g of N(F(tau)) whose vertex positions are eta; g is the
/// projection of the corresponding simplex of N(F(sigma)).
class GlobalComplex {
 public:
  struct Cell {
    SimplexRef sigma;
    NerveSimplex g;
  };

  static GlobalComplex build(std::shared_ptr<const AInfDiagram> diagram, int cap, std::size_t limit = 0);

  const AInfDiagram& diagram() const noexcept { return *diagram_; }
  const std::shared_ptr<const AInfDiagram>& diagram_ptr() const noexcept { return diagram_; }
  const SimplicialSet& sset() const noexcept { return *sset_; }
  std::shared_ptr<const SimplicialSet> sset_ptr() const noexcept { return sset_; }
  const SimplicialMap& projection() const noexcept { return *projection_; }
  std::shared_ptr<const SimplicialMap> projection_ptr() const noexcept { return projection_; }
  int cap() const noexcept { return sset_->cap(); }

  const Cell& cell(CellId id) const;
  Cell realize(const SimplexRef& s) const;
  SimplexRef locate(const Cell& c) const;
  Cell face(const Cell& c, int i) const;
  /// The cocone map phi_sigma(g) = (restriction of g to its base face, p(g))
  /// for a nondegenerate base cell; empty when the vertex positions of g decrease.
  std::optional<SimplexRef> phi(CellId sigma, const NerveSimplex& g) const;

 private:
  std::shared_ptr<const AInfDiagram> diagram_;
  std::shared_ptr<SimplicialSet> sset_;
  std::shared_ptr<SimplicialMap> projection_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::unordered_map<std::string, int>> index_;
};

/// Another cocone: an apex and maps phi'_sigma : N(F(sigma)) -> apex on
/// simplices with nondecreasing vertex positions, one per nondegenerate base cell.
struct Cocone {
  std::shared_ptr<const SimplicialSet> apex;
  std::function<SimplexRef(CellId sigma, const NerveSimplex& g)> map;
};

struct UniversalPropertyReport {
  bool pass = true;
  std::size_t simplices_checked = 0;
  std::string witness;
  /// U(f, sigma) = phi'_sigma(f) on the cells of L.
  std::optional<SimplicialMap> induced;
};

/// Checks that `other` is a cocone up to the cap, builds U : L -> apex, and
/// checks U phi_sigma = phi'_sigma, U simplicial, and that every cell of L
/// lies in the image of some phi_sigma (so U is unique). When `alternative`
/// is given it must agree with U.
UniversalPropertyReport verify_universal_property(const GlobalComplex& l, const Cocone& other,
                                                  const SimplicialMap* alternative = nullptr);

/// The cocone (L, phi).
Cocone canonical_cocone(std::shared_ptr<const GlobalComplex> l);

}  // namespace ainerve
