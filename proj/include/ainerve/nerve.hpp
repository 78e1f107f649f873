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

// The A-infinity nerve.
//
// An n-simplex assigns an object to each vertex of [n] and an element f_J of
// hom(X_min J, X_max J) to every subset J of [n] with at least two elements.
// Subsets are bit masks over [n]. The simplex equation at J reads
//
//   mu^1(f_J) = sum_{inner i of J} f_{J - i} + sum_{decompositions} mu^s(f_J1, ..., f_Js)
//
// where decompositions cut J at interior points into s >= 2 consecutive
// blocks sharing endpoints.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ainerve/ainf.hpp"
#include "ainerve/simplicial.hpp"

namespace ainerve {

using SubsetMask = std::uint32_t;

/// Largest simplex dimension the nerve code accepts.
inline constexpr int kMaxNerveDim = 12;

std::vector<int> subset_elements(SubsetMask mask);
SubsetMask subset_mask(const std::vector<int>& elements);
/// "0,1,2"
std::string subset_name(SubsetMask mask);
/// Inverse of subset_name; throws Error(invalid_input).
SubsetMask parse_subset_name(const std::string& name);
/// Subsets with at least two elements, ordered by size then value.
const std::vector<SubsetMask>& nerve_subsets(int n);

struct WedgeDecomposition {
  int n = 0;
  std::vector<int> cuts;  // strictly increasing, inside (0, n)

  /// Blocks [0, a1], [a1, a2], ..., [a_{s-1}, n] as (first, last) pairs.
  std::vector<std::pair<int, int>> blocks() const;
};

/// All decompositions with at least two blocks: 2^(n-1) - 1 of them.
std::vector<WedgeDecomposition> wedge_decompositions(int n);

struct NerveSimplex {
  int dim = 0;
  std::vector<int> vertices;
  std::vector<std::optional<Gf2Vector>> f;  // indexed by mask; subsets of size < 2 unused

  static NerveSimplex blank(std::vector<int> vertices);

  bool has(SubsetMask mask) const { return mask < f.size() && f[mask].has_value(); }
  const Gf2Vector& at(SubsetMask mask) const;
  void set(SubsetMask mask, Gf2Vector value);
  void clear(SubsetMask mask) { f.at(mask).reset(); }
  SubsetMask full() const { return (SubsetMask{1} << (dim + 1)) - 1; }

  /// Canonical byte string; equal simplices have equal keys.
  std::string key() const;

  friend bool operator==(const NerveSimplex&, const NerveSimplex&) = default;
};

/// Sum of all terms of the equation at J other than mu^1(f_J).
Gf2Vector simplex_rhs(const AInfCategory& a, const NerveSimplex& c, SubsetMask mask);
/// mu^1(f_J) + rhs; zero iff the equation at J holds.
Gf2Vector simplex_residual(const AInfCategory& a, const NerveSimplex& c, SubsetMask mask);

/// Checks vertex labels, element lengths and every equation. On failure
/// `witness` holds the first failing subset.
bool is_nerve_simplex(const AInfCategory& a, const NerveSimplex& c, std::optional<SubsetMask>* witness = nullptr);

/// Fills a horn that omits f_[n] and f_[n]-{k}, with 0 < k < n: sets
/// f_[n] = 0 and solves the top equation for f_[n]-{k}. Throws
/// Error(precondition) for outer horns and Error(invalid_input) when a
/// supplied face is invalid. The filler is checked before it is returned.
NerveSimplex fill_inner_horn(const AInfCategory& a, const NerveSimplex& horn, int k);

NerveSimplex nerve_face(const NerveSimplex& c, const OrdinalMap& mono);
/// Degeneracy along a monotone surjection [k] -> [dim].
NerveSimplex nerve_degenerate(const AInfCategory& a, const NerveSimplex& c, const OrdinalMap& epi);
NerveSimplex nerve_degeneracy(const AInfCategory& a, const NerveSimplex& c, int i);
/// c.m for an arbitrary monotone map m : [k] -> [dim].
NerveSimplex nerve_act(const AInfCategory& a, const NerveSimplex& c, const OrdinalMap& m);
bool nerve_is_degenerate(const AInfCategory& a, const NerveSimplex& c);

struct EnumerationConstraints {
  /// Per vertex, the admissible objects; empty means any object.
  std::vector<std::vector<int>> allowed_objects;
  /// Prescribed values; the equation at a fixed subset must still hold.
  std::map<SubsetMask, Gf2Vector> fixed;
  /// Subsets left empty. Must not be needed by any subset that is filled.
  std::vector<SubsetMask> skip;
  /// Throw Error(cap_exceeded) once more than this many results appear; 0 = no limit.
  std::size_t limit = 0;
};

/// Visits every n-simplex satisfying the constraints, solving the equation
/// subset by subset. Returning false from the visitor stops the search.
void for_each_nerve_simplex(const AInfCategory& a, int n, const EnumerationConstraints& constraints,
                            const std::function<bool(const NerveSimplex&)>& visit);
std::vector<NerveSimplex> enumerate_simplices(const AInfCategory& a, int n,
                                              const EnumerationConstraints& constraints = {});

/// Visits every inner horn Lambda^n_k in the nerve as a partial simplex.
void for_each_inner_horn(const AInfCategory& a, int n, int k,
                         const std::function<bool(const NerveSimplex&)>& visit);
/// Visits every inner horn together with the filler fill_inner_horn would
/// return. The horn equations hold by construction, so they are not rechecked.
void for_each_filled_inner_horn(const AInfCategory& a, int n, int k,
                                const std::function<bool(const NerveSimplex&, const NerveSimplex&)>& visit);

/// Image of a simplex under an A-infinity functor:
/// f_J -> sum over decompositions of J (the trivial one included) of F^s(f_J1, ..., f_Js).
NerveSimplex nerve_of_functor(const AInfFunctor& f, const NerveSimplex& c);

/// The nerve truncated at a dimension cap, as a simplicial set whose cells
/// carry their nerve data. Cell ids are "<dim>:<index>".
class NerveComplex {
 public:
  static NerveComplex build(std::shared_ptr<const AInfCategory> category, int cap, std::size_t limit = 0);

  const AInfCategory& category() const noexcept { return *category_; }
  const std::shared_ptr<const AInfCategory>& category_ptr() const noexcept { return category_; }
  const SimplicialSet& sset() const noexcept { return *sset_; }
  std::shared_ptr<const SimplicialSet> sset_ptr() const noexcept { return sset_; }
  int cap() const noexcept { return sset_->cap(); }

  const NerveSimplex& cell(CellId id) const;
  /// Nerve data of an arbitrary simplex of the complex.
  NerveSimplex realize(const SimplexRef& s) const;
  /// Normal form of a nerve simplex of dimension <= cap.
  SimplexRef locate(const NerveSimplex& c) const;
  std::optional<CellId> find_cell(const NerveSimplex& c) const;

 private:
  std::shared_ptr<const AInfCategory> category_;
  std::shared_ptr<SimplicialSet> sset_;
  std::vector<std::vector<NerveSimplex>> cells_;
  std::vector<std::unordered_map<std::string, int>> index_;
};

}  // namespace ainerve
