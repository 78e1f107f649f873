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

// Finite, strictly unital, ungraded A-infinity categories over F2.
//
// Hom spaces carry chosen bases. Basis elements ("labels") are numbered
// globally: hom(s, t) owns the contiguous range [hom_offset(s, t),
// hom_offset(s, t) + hom_dim(s, t)). Operations mu^d are stored sparsely on
// basis tuples and extended multilinearly. Tuples are written in
// diagrammatic order: mu^d(g1, ..., gd) with g1 in hom(X0, X1) and the
// result in hom(X0, Xd).

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ainerve/gf2.hpp"

namespace ainerve {

using LabelTuple = boost::container::small_vector<int, 4>;

struct LabelTupleHash {
  std::size_t operator()(const LabelTuple& t) const noexcept;
};

/// Sparse multilinear maps keyed by tuples of global labels.
class MultilinearTable {
 public:
  /// Stores value at key; a zero value erases the entry.
  void set(const LabelTuple& key, Gf2Vector value);
  const Gf2Vector* find(const LabelTuple& key) const;

  int max_arity() const noexcept;
  bool has_arity(int d) const noexcept;
  std::size_t size() const noexcept;
  /// Entries ordered by arity, then key.
  std::vector<std::pair<LabelTuple, Gf2Vector>> sorted_entries() const;

  /// Multilinear extension: coordinate b of args[k] stands for label
  /// offsets[k] + b. Missing entries contribute zero.
  Gf2Vector evaluate(std::span<const Gf2Vector* const> args, std::span<const int> offsets,
                     std::size_t out_len) const;

  /// Builds a dense lookup for binary entries over labels [0, label_count).
  /// Any later set() drops it.
  void index_binary(int label_count);

 private:
  std::vector<std::unordered_map<LabelTuple, Gf2Vector, LabelTupleHash>> by_arity_;
  int binary_width_ = 0;
  std::vector<int> binary_index_;  // l0 * width + l1 -> position in binary_values_, or -1
  std::vector<Gf2Vector> binary_values_;
};

class AInfCategory {
 public:
  struct Label {
    int source = 0;
    int target = 0;
    int index = 0;
    std::string name;
  };

  class Builder;

  int object_count() const noexcept { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int obj) const { return objects_.at(static_cast<std::size_t>(obj)); }
  std::optional<int> find_object(std::string_view name) const;

  int hom_dim(int s, int t) const { return offsets_[hom_id(s, t) + 1] - offsets_[hom_id(s, t)]; }
  int hom_offset(int s, int t) const { return offsets_[hom_id(s, t)]; }
  int label_count() const noexcept { return static_cast<int>(labels_.size()); }
  const Label& label(int id) const { return labels_.at(static_cast<std::size_t>(id)); }
  std::optional<int> find_label(std::string_view name) const;

  bool has_unit(int obj) const { return units_.at(static_cast<std::size_t>(obj)) >= 0; }
  int unit_label(int obj) const;
  Gf2Vector unit(int obj) const;
  Gf2Vector zero(int s, int t) const { return Gf2Vector(static_cast<std::size_t>(hom_dim(s, t))); }
  Gf2Vector basis_vector(int label_id) const;

  const MultilinearTable& operations() const noexcept { return ops_; }
  int max_arity() const noexcept { return max_arity_; }

  /// mu^d on arbitrary elements; objects has d + 1 entries.
  Gf2Vector mu(std::span<const int> objects, std::span<const Gf2Vector* const> args) const;
  /// mu^d on a composable tuple of basis labels.
  Gf2Vector mu_labels(std::span<const int> labels) const;
  Gf2Vector differential(int s, int t, const Gf2Vector& v) const;
  bool differential_is_zero(int s, int t) const { return d_zero_[hom_id(s, t)] != 0; }
  /// out += mu^1(v) without a temporary.
  void add_differential(int s, int t, const Gf2Vector& v, Gf2Vector& out) const;
  /// Matrix of mu^1 on hom(s, t); column j is mu^1 of basis element j.
  const Gf2Matrix& differential_matrix(int s, int t) const { return d_matrix_[hom_id(s, t)]; }
  const AffineSolver& differential_solver(int s, int t) const { return d_solver_[hom_id(s, t)]; }

  /// Element as a '+'-joined label list, "0" for zero.
  std::string format(int s, int t, const Gf2Vector& v) const;
  std::vector<std::string> label_names(int s, int t, const Gf2Vector& v) const;
  Gf2Vector parse_element(int s, int t, const std::vector<std::string>& names) const;

 private:
  std::size_t hom_id(int s, int t) const {
    return static_cast<std::size_t>(s) * objects_.size() + static_cast<std::size_t>(t);
  }
  void finalize();

  std::vector<std::string> objects_;
  std::unordered_map<std::string, int> object_lookup_;
  std::vector<int> offsets_;
  std::vector<Label> labels_;
  std::unordered_map<std::string, int> label_lookup_;
  std::vector<int> units_;
  MultilinearTable ops_;
  std::vector<Gf2Matrix> d_matrix_;
  std::vector<AffineSolver> d_solver_;
  std::vector<char> d_zero_;
  std::vector<Gf2Vector> d_columns_;  // mu^1 of each label, by label id
  int max_arity_ = 0;
};

class AInfCategory::Builder {
 public:
  Builder() = default;
  explicit Builder(const AInfCategory& category);

  int add_object(std::string name);
  void set_hom(std::string_view source, std::string_view target, std::vector<std::string> labels);
  void set_unit(std::string_view object, std::string label);
  /// Sets mu on a basis tuple; the value is the F2 sum of `output` labels.
  void set_mu(std::vector<std::string> inputs, std::vector<std::string> output);
  /// Flips the coefficient of `output_label` in mu(inputs).
  void toggle_mu(const std::vector<std::string>& inputs, const std::string& output_label);
  void erase_mu(const std::vector<std::string>& inputs);
  void clear_mu() { mu_.clear(); }
  /// Adds mu^2(e, f) = f = mu^2(f, e) for every unit e and composable basis f.
  void add_unit_laws();

  /// Validates chains and labels; throws Error(invalid_input) on malformed entries.
  std::shared_ptr<const AInfCategory> build() const;

 private:
  int object_index(std::string_view name) const;

  std::vector<std::string> objects_;
  std::map<std::pair<int, int>, std::vector<std::string>> homs_;
  std::map<int, std::string> units_;
  std::map<std::vector<std::string>, std::vector<std::string>> mu_;
};

// --- relation and unit checks ------------------------------------------------

/// Calls f on every composable tuple of basis labels of the given length.
/// Returning false from f stops the enumeration.
void for_each_composable_tuple(const AInfCategory& a, int length,
                               const std::function<bool(std::span<const int>)>& f);

/// Left-hand side of the A-infinity relation of arity d on a basis tuple:
/// the sum over all ways of inserting mu^m into mu^(d-m+1).
Gf2Vector ainf_residual(const AInfCategory& a, std::span<const int> labels);

struct RelationWitness {
  int arity = 0;
  std::vector<std::string> inputs;
  Gf2Vector residual;
  std::string residual_text;
};

struct RelationReport {
  bool pass = true;
  int dmax = 0;
  std::size_t tuples_checked = 0;
  std::optional<RelationWitness> witness;
};

RelationReport check_ainf_relations(const AInfCategory& a, int dmax);

struct UnitWitness {
  std::string kind;
  int arity = 0;
  std::vector<std::string> inputs;
};

struct UnitReport {
  bool pass = true;
  std::optional<UnitWitness> witness;
};

/// Throws Error(precondition) when some object has no declared unit.
UnitReport check_strict_units(const AInfCategory& a);

// --- cohomology ----------------------------------------------------------------

/// Cohomology category: H(s, t) = ker mu^1 / im mu^1 with composition
/// induced by mu^2. Classes are coordinate vectors over chosen cycle
/// representatives.
class CohomologyCategory {
 public:
  /// Throws Error(precondition) if mu^1 does not square to zero.
  explicit CohomologyCategory(std::shared_ptr<const AInfCategory> category);

  const AInfCategory& category() const noexcept { return *category_; }
  int object_count() const noexcept { return category_->object_count(); }
  int dim(int s, int t) const { return static_cast<int>(homs_[index(s, t)].representatives.size()); }
  const std::vector<Gf2Vector>& representatives(int s, int t) const { return homs_[index(s, t)].representatives; }

  bool is_cycle(int s, int t, const Gf2Vector& v) const;
  bool is_boundary(int s, int t, const Gf2Vector& v) const;
  /// Class of a cycle; throws Error(invalid_argument) for non-cycles.
  Gf2Vector classify(int s, int t, const Gf2Vector& cycle) const;
  Gf2Vector representative(int s, int t, const Gf2Vector& cls) const;

  /// [x][y] for x in H(a, b), y in H(b, c), diagrammatic order.
  Gf2Vector compose(int a, int b, int c, const Gf2Vector& x, const Gf2Vector& y) const;
  Gf2Vector unit_class(int obj) const;

  bool is_isomorphism(int s, int t, const Gf2Vector& cls) const;
  /// Some inverse pair ([x], [y]) between s and t, if the objects are isomorphic.
  std::optional<std::pair<Gf2Vector, Gf2Vector>> isomorphism(int s, int t) const;
  bool objects_isomorphic(int s, int t) const;

  /// Exhaustive associativity and unit check of the composition table.
  bool check_table(std::string* witness = nullptr) const;

 private:
  struct Hom {
    std::vector<Gf2Vector> boundaries;
    std::vector<Gf2Vector> representatives;
    std::optional<AffineSolver> coordinates;  // columns: boundaries then representatives
  };
  std::size_t index(int s, int t) const {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(object_count()) + static_cast<std::size_t>(t);
  }

  std::shared_ptr<const AInfCategory> category_;
  std::vector<Hom> homs_;
};

CohomologyCategory cohomology(std::shared_ptr<const AInfCategory> category);

// --- functors ------------------------------------------------------------------

/// A∞ functor with vanishing higher components: an object map plus one
/// linear map per hom space.
class StrictFunctor {
 public:
  StrictFunctor(std::shared_ptr<const AInfCategory> source, std::shared_ptr<const AInfCategory> target,
                std::vector<int> object_map);

  static StrictFunctor identity(std::shared_ptr<const AInfCategory> category);

  const AInfCategory& source() const noexcept { return *source_; }
  const AInfCategory& target() const noexcept { return *target_; }
  const std::shared_ptr<const AInfCategory>& source_ptr() const noexcept { return source_; }
  const std::shared_ptr<const AInfCategory>& target_ptr() const noexcept { return target_; }
  const std::vector<int>& object_map() const noexcept { return object_map_; }
  int map_object(int obj) const { return object_map_.at(static_cast<std::size_t>(obj)); }

  /// Image of a source basis label, as a vector in the target hom.
  void map_label(int source_label, const Gf2Vector& image);
  const Gf2Matrix& component(int s, int t) const;
  Gf2Vector apply(int s, int t, const Gf2Vector& v) const;

  /// Describes the first violated functor law, if any: object map range,
  /// unit preservation, commuting with every mu^d on basis tuples.
  std::optional<std::string> validation_error() const;
  void validate() const;

 private:
  std::size_t index(int s, int t) const {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(source_->object_count()) + static_cast<std::size_t>(t);
  }

  std::shared_ptr<const AInfCategory> source_;
  std::shared_ptr<const AInfCategory> target_;
  std::vector<int> object_map_;
  std::vector<Gf2Matrix> components_;
};

/// second o first.
StrictFunctor compose(const StrictFunctor& first, const StrictFunctor& second);

bool is_fully_faithful_embedding(const StrictFunctor& f);
bool is_quasi_equivalence(const StrictFunctor& f);

/// A general A-infinity functor given by its components F^s on basis tuples.
struct AInfFunctor {
  std::shared_ptr<const AInfCategory> source;
  std::shared_ptr<const AInfCategory> target;
  std::vector<int> object_map;
  MultilinearTable components;

  static AInfFunctor from_strict(const StrictFunctor& f);
  /// F^s(args) for a composable chain of source objects.
  Gf2Vector apply(std::span<const int> source_objects, std::span<const Gf2Vector* const> args) const;
};

/// Full subcategory on the listed objects (in that order) with its inclusion.
std::pair<std::shared_ptr<const AInfCategory>, StrictFunctor> full_subcategory(
    std::shared_ptr<const AInfCategory> category, const std::vector<int>& objects);

struct DegenerateExtension {
  std::shared_ptr<const AInfCategory> category;
  StrictFunctor projection;          // onto the base category
  StrictFunctor base_embedding;      // base -> extension, identity on names
  StrictFunctor adjoined_embedding;  // adjoined -> extension, onto the copies
};

/// Adjoins a copy of `adjoined` to `base` along the fully faithful
/// `inclusion`. Every hom of the result is the base hom between the
/// projected objects. Copies are named copy_prefix + "(" + name + ")".
DegenerateExtension degenerate_extension(std::shared_ptr<const AInfCategory> base,
                                         std::shared_ptr<const AInfCategory> adjoined,
                                         const StrictFunctor& inclusion, std::string_view copy_prefix = "s");

}  // namespace ainerve
