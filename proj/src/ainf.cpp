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

#include "ainerve/ainf.hpp"

#include <algorithm>
#include <set>

#include <boost/container_hash/hash.hpp>

#include "ainerve/error.hpp"

namespace ainerve {

std::size_t LabelTupleHash::operator()(const LabelTuple& t) const noexcept {
  return boost::hash_range(t.begin(), t.end());
}

// --- MultilinearTable ----------------------------------------------------------

void MultilinearTable::set(const LabelTuple& key, Gf2Vector value) {
  require(!key.empty(), Errc::invalid_argument, "operation key must have arity at least 1");
  const auto d = key.size();
  binary_width_ = 0;
  binary_index_.clear();
  binary_values_.clear();
  if (value.is_zero()) {
    if (d < by_arity_.size()) by_arity_[d].erase(key);
    return;
  }
  if (by_arity_.size() <= d) by_arity_.resize(d + 1);
  by_arity_[d].insert_or_assign(key, std::move(value));
}

const Gf2Vector* MultilinearTable::find(const LabelTuple& key) const {
  const auto d = key.size();
  if (d >= by_arity_.size()) return nullptr;
  const auto it = by_arity_[d].find(key);
  return it == by_arity_[d].end() ? nullptr : &it->second;
}

int MultilinearTable::max_arity() const noexcept {
  for (std::size_t d = by_arity_.size(); d-- > 1;) {
    if (!by_arity_[d].empty()) return static_cast<int>(d);
  }
  return 0;
}

bool MultilinearTable::has_arity(int d) const noexcept {
  return d >= 0 && static_cast<std::size_t>(d) < by_arity_.size() && !by_arity_[static_cast<std::size_t>(d)].empty();
}

std::size_t MultilinearTable::size() const noexcept {
  std::size_t n = 0;
  for (const auto& m : by_arity_) n += m.size();
  return n;
}

std::vector<std::pair<LabelTuple, Gf2Vector>> MultilinearTable::sorted_entries() const {
  std::vector<std::pair<LabelTuple, Gf2Vector>> out;
  for (const auto& m : by_arity_) {
    const auto start = out.size();
    out.insert(out.end(), m.begin(), m.end());
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

void MultilinearTable::index_binary(int label_count) {
  binary_width_ = 0;
  binary_index_.clear();
  binary_values_.clear();
  constexpr int kMaxDense = 512;
  if (label_count <= 0 || label_count > kMaxDense) return;
  binary_width_ = label_count;
  binary_index_.assign(static_cast<std::size_t>(label_count) * static_cast<std::size_t>(label_count), -1);
  if (by_arity_.size() <= 2) return;
  for (const auto& [key, value] : by_arity_[2]) {
    require(key[0] >= 0 && key[0] < label_count && key[1] >= 0 && key[1] < label_count, Errc::internal,
            "binary operation key out of label range");
    binary_index_[static_cast<std::size_t>(key[0] * label_count + key[1])] = static_cast<int>(binary_values_.size());
    binary_values_.push_back(value);
  }
}

Gf2Vector MultilinearTable::evaluate(std::span<const Gf2Vector* const> args, std::span<const int> offsets,
                                     std::size_t out_len) const {
  require(args.size() == offsets.size(), Errc::invalid_argument, "argument/offset count mismatch");
  Gf2Vector out(out_len);
  const auto d = args.size();
  if (d == 0 || d >= by_arity_.size() || by_arity_[d].empty()) return out;
  if (d == 2 && binary_width_ > 0) {
    args[0]->for_each_set_bit([&](std::size_t b0) {
      const auto row = static_cast<std::size_t>(offsets[0] + static_cast<int>(b0)) * static_cast<std::size_t>(binary_width_);
      args[1]->for_each_set_bit([&](std::size_t b1) {
        const int at = binary_index_[row + static_cast<std::size_t>(offsets[1]) + b1];
        if (at >= 0) out += binary_values_[static_cast<std::size_t>(at)];
      });
    });
    return out;
  }
  boost::container::small_vector<boost::container::small_vector<int, 4>, 8> supports(d);
  for (std::size_t k = 0; k < d; ++k) {
    args[k]->for_each_set_bit([&](std::size_t b) { supports[k].push_back(offsets[k] + static_cast<int>(b)); });
    if (supports[k].empty()) return out;
  }
  LabelTuple key(d);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == d) {
      if (const auto* v = find(key)) {
        require(v->size() == out_len, Errc::internal, "operation value has unexpected length");
        out += *v;
      }
      return;
    }
    for (int label : supports[k]) {
      key[k] = label;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

// --- AInfCategory ----------------------------------------------------------------

std::optional<int> AInfCategory::find_object(std::string_view name) const {
  const auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> AInfCategory::find_label(std::string_view name) const {
  const auto it = label_lookup_.find(std::string(name));
  if (it == label_lookup_.end()) return std::nullopt;
  return it->second;
}

int AInfCategory::unit_label(int obj) const {
  const int u = units_.at(static_cast<std::size_t>(obj));
  if (u < 0) fail(Errc::precondition, "object '" + object_name(obj) + "' has no unit");
  return u;
}

Gf2Vector AInfCategory::unit(int obj) const { return basis_vector(unit_label(obj)); }

Gf2Vector AInfCategory::basis_vector(int label_id) const {
  const auto& l = label(label_id);
  return Gf2Vector::unit(static_cast<std::size_t>(hom_dim(l.source, l.target)), static_cast<std::size_t>(l.index));
}

Gf2Vector AInfCategory::mu(std::span<const int> objects, std::span<const Gf2Vector* const> args) const {
  require(objects.size() == args.size() + 1, Errc::invalid_argument, "mu needs one more object than arguments");
  boost::container::small_vector<int, 8> offsets(args.size());
  for (std::size_t k = 0; k < args.size(); ++k) {
    const int s = objects[k];
    const int t = objects[k + 1];
    require(args[k]->size() == static_cast<std::size_t>(hom_dim(s, t)), Errc::invalid_argument,
            "mu argument length does not match its hom space");
    offsets[k] = hom_offset(s, t);
  }
  return ops_.evaluate(args, std::span<const int>(offsets.data(), offsets.size()), static_cast<std::size_t>(hom_dim(objects.front(), objects.back())));
}

Gf2Vector AInfCategory::mu_labels(std::span<const int> labels) const {
  require(!labels.empty(), Errc::invalid_argument, "mu needs at least one argument");
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
    require(label(labels[k]).target == label(labels[k + 1]).source, Errc::invalid_argument,
            "mu arguments are not composable");
  }
  const int s = label(labels.front()).source;
  const int t = label(labels.back()).target;
  const LabelTuple key(labels.begin(), labels.end());
  if (const auto* v = ops_.find(key)) return *v;
  return zero(s, t);
}

void AInfCategory::add_differential(int s, int t, const Gf2Vector& v, Gf2Vector& out) const {
  require(v.size() == static_cast<std::size_t>(hom_dim(s, t)) && out.size() == v.size(), Errc::invalid_argument,
          "element length does not match its hom space");
  if (d_zero_[hom_id(s, t)]) return;
  const auto base = static_cast<std::size_t>(hom_offset(s, t));
  v.for_each_set_bit([&](std::size_t b) { out += d_columns_[base + b]; });
}

Gf2Vector AInfCategory::differential(int s, int t, const Gf2Vector& v) const {
  require(v.size() == static_cast<std::size_t>(hom_dim(s, t)), Errc::invalid_argument,
          "element length does not match its hom space");
  if (d_zero_[hom_id(s, t)]) return zero(s, t);
  return differential_matrix(s, t) * v;
}

std::vector<std::string> AInfCategory::label_names(int s, int t, const Gf2Vector& v) const {
  require(v.size() == static_cast<std::size_t>(hom_dim(s, t)), Errc::invalid_argument,
          "element length does not match its hom space");
  std::vector<std::string> out;
  const int off = hom_offset(s, t);
  v.for_each_set_bit([&](std::size_t b) { out.push_back(label(off + static_cast<int>(b)).name); });
  return out;
}

std::string AInfCategory::format(int s, int t, const Gf2Vector& v) const {
  const auto names = label_names(s, t, v);
  if (names.empty()) return "0";
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += '+';
    out += n;
  }
  return out;
}

Gf2Vector AInfCategory::parse_element(int s, int t, const std::vector<std::string>& names) const {
  Gf2Vector v = zero(s, t);
  for (const auto& n : names) {
    const auto id = find_label(n);
    if (!id) fail(Errc::invalid_input, "unknown basis label '" + n + "'");
    const auto& l = label(*id);
    if (l.source != s || l.target != t) {
      fail(Errc::invalid_input, "label '" + n + "' does not lie in hom(" + object_name(s) + ", " + object_name(t) + ")");
    }
    v.flip(static_cast<std::size_t>(l.index));
  }
  return v;
}

void AInfCategory::finalize() {
  ops_.index_binary(label_count());
  max_arity_ = ops_.max_arity();
  const auto n = objects_.size();
  d_matrix_.clear();
  d_solver_.clear();
  d_zero_.clear();
  d_columns_.clear();
  d_matrix_.reserve(n * n);
  d_solver_.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const int si = static_cast<int>(s);
      const int ti = static_cast<int>(t);
      const auto dim = static_cast<std::size_t>(hom_dim(si, ti));
      std::vector<Gf2Vector> cols;
      cols.reserve(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const int lbl = hom_offset(si, ti) + static_cast<int>(j);
        cols.push_back(mu_labels(std::span<const int>(&lbl, 1)));
      }
      d_columns_.insert(d_columns_.end(), cols.begin(), cols.end());
      d_matrix_.push_back(Gf2Matrix::from_columns(dim, cols));
      d_solver_.emplace_back(d_matrix_.back());
      d_zero_.push_back(d_matrix_.back().is_zero() ? 1 : 0);
    }
  }
}

// --- Builder ---------------------------------------------------------------------

AInfCategory::Builder::Builder(const AInfCategory& category) {
  for (int x = 0; x < category.object_count(); ++x) objects_.push_back(category.object_name(x));
  for (int s = 0; s < category.object_count(); ++s) {
    for (int t = 0; t < category.object_count(); ++t) {
      const int dim = category.hom_dim(s, t);
      if (dim == 0) continue;
      auto& names = homs_[{s, t}];
      for (int j = 0; j < dim; ++j) names.push_back(category.label(category.hom_offset(s, t) + j).name);
    }
    if (category.has_unit(s)) units_[s] = category.label(category.unit_label(s)).name;
  }
  for (const auto& [key, value] : category.operations().sorted_entries()) {
    std::vector<std::string> inputs;
    for (int l : key) inputs.push_back(category.label(l).name);
    const auto& first = category.label(key.front());
    const auto& last = category.label(key.back());
    mu_[inputs] = category.label_names(first.source, last.target, value);
  }
}

int AInfCategory::Builder::add_object(std::string name) {
  require(!name.empty(), Errc::invalid_input, "object names must be nonempty");
  require(std::find(objects_.begin(), objects_.end(), name) == objects_.end(), Errc::invalid_input,
          "duplicate object '" + name + "'");
  objects_.push_back(std::move(name));
  return static_cast<int>(objects_.size()) - 1;
}

int AInfCategory::Builder::object_index(std::string_view name) const {
  const auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) fail(Errc::invalid_input, "unknown object '" + std::string(name) + "'");
  return static_cast<int>(it - objects_.begin());
}

void AInfCategory::Builder::set_hom(std::string_view source, std::string_view target, std::vector<std::string> labels) {
  homs_[{object_index(source), object_index(target)}] = std::move(labels);
}

void AInfCategory::Builder::set_unit(std::string_view object, std::string label) {
  units_[object_index(object)] = std::move(label);
}

void AInfCategory::Builder::set_mu(std::vector<std::string> inputs, std::vector<std::string> output) {
  require(!inputs.empty(), Errc::invalid_input, "mu entries need at least one input");
  mu_[std::move(inputs)] = std::move(output);
}

void AInfCategory::Builder::toggle_mu(const std::vector<std::string>& inputs, const std::string& output_label) {
  require(!inputs.empty(), Errc::invalid_input, "mu entries need at least one input");
  auto& out = mu_[inputs];
  const auto it = std::find(out.begin(), out.end(), output_label);
  if (it == out.end()) {
    out.push_back(output_label);
  } else {
    out.erase(it);
  }
}

void AInfCategory::Builder::erase_mu(const std::vector<std::string>& inputs) { mu_.erase(inputs); }

void AInfCategory::Builder::add_unit_laws() {
  for (const auto& [x, e] : units_) {
    for (const auto& [st, labels] : homs_) {
      for (const auto& f : labels) {
        if (st.first == x) mu_[{e, f}] = {f};
        if (st.second == x) mu_[{f, e}] = {f};
      }
    }
  }
}

std::shared_ptr<const AInfCategory> AInfCategory::Builder::build() const {
  auto cat = std::make_shared<AInfCategory>();
  const int n = static_cast<int>(objects_.size());
  cat->objects_ = objects_;
  for (int x = 0; x < n; ++x) cat->object_lookup_.emplace(objects_[static_cast<std::size_t>(x)], x);

  cat->offsets_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 1, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const auto id = cat->hom_id(s, t);
      cat->offsets_[id] = static_cast<int>(cat->labels_.size());
      const auto it = homs_.find({s, t});
      if (it == homs_.end()) continue;
      for (std::size_t j = 0; j < it->second.size(); ++j) {
        const auto& name = it->second[j];
        require(!name.empty(), Errc::invalid_input, "basis labels must be nonempty");
        const int lid = static_cast<int>(cat->labels_.size());
        if (!cat->label_lookup_.emplace(name, lid).second) {
          fail(Errc::invalid_input, "duplicate basis label '" + name + "'");
        }
        cat->labels_.push_back(Label{s, t, static_cast<int>(j), name});
      }
    }
  }
  cat->offsets_.back() = static_cast<int>(cat->labels_.size());

  cat->units_.assign(static_cast<std::size_t>(n), -1);
  for (const auto& [x, name] : units_) {
    const auto lid = cat->find_label(name);
    if (!lid) fail(Errc::invalid_input, "unit label '" + name + "' is not a basis label");
    const auto& l = cat->label(*lid);
    if (l.source != x || l.target != x) {
      fail(Errc::invalid_input, "unit label '" + name + "' is not in hom(" + objects_[static_cast<std::size_t>(x)] + ", " +
                                    objects_[static_cast<std::size_t>(x)] + ")");
    }
    cat->units_[static_cast<std::size_t>(x)] = *lid;
  }

  for (const auto& [inputs, outputs] : mu_) {
    LabelTuple key;
    for (const auto& name : inputs) {
      const auto lid = cat->find_label(name);
      if (!lid) fail(Errc::invalid_input, "mu input '" + name + "' is not a basis label");
      key.push_back(*lid);
    }
    for (std::size_t k = 0; k + 1 < key.size(); ++k) {
      if (cat->label(key[k]).target != cat->label(key[k + 1]).source) {
        fail(Errc::invalid_input, "mu inputs '" + inputs[k] + "', '" + inputs[k + 1] + "' are not composable");
      }
    }
    const int s = cat->label(key.front()).source;
    const int t = cat->label(key.back()).target;
    cat->ops_.set(key, cat->parse_element(s, t, outputs));
  }
  cat->finalize();
  return cat;
}

// --- relations -------------------------------------------------------------------

void for_each_composable_tuple(const AInfCategory& a, int length,
                               const std::function<bool(std::span<const int>)>& f) {
  if (length <= 0) return;
  std::vector<std::vector<int>> outgoing(static_cast<std::size_t>(a.object_count()));
  for (int l = 0; l < a.label_count(); ++l) outgoing[static_cast<std::size_t>(a.label(l).source)].push_back(l);
  std::vector<int> tuple(static_cast<std::size_t>(length));
  bool stop = false;
  auto recurse = [&](auto&& self, int k, int obj) -> void {
    for (int l : outgoing[static_cast<std::size_t>(obj)]) {
      if (stop) return;
      tuple[static_cast<std::size_t>(k)] = l;
      if (k + 1 == length) {
        if (!f(tuple)) stop = true;
      } else {
        self(self, k + 1, a.label(l).target);
      }
    }
  };
  for (int x = 0; x < a.object_count() && !stop; ++x) recurse(recurse, 0, x);
}

Gf2Vector ainf_residual(const AInfCategory& a, std::span<const int> labels) {
  require(!labels.empty(), Errc::invalid_argument, "relation needs at least one argument");
  const auto d = labels.size();
  const int s = a.label(labels.front()).source;
  const int t = a.label(labels.back()).target;
  Gf2Vector out = a.zero(s, t);
  const auto& ops = a.operations();
  for (std::size_t m = 1; m <= d; ++m) {
    if (!ops.has_arity(static_cast<int>(m)) || !ops.has_arity(static_cast<int>(d - m + 1))) continue;
    for (std::size_t n = 0; n + m <= d; ++n) {
      const Gf2Vector inner = a.mu_labels(labels.subspan(n, m));
      if (inner.is_zero()) continue;
      const int is = a.label(labels[n]).source;
      const int it = a.label(labels[n + m - 1]).target;
      LabelTuple key;
      key.insert(key.end(), labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n));
      const auto slot = key.size();
      key.push_back(0);
      key.insert(key.end(), labels.begin() + static_cast<std::ptrdiff_t>(n + m), labels.end());
      const int off = a.hom_offset(is, it);
      inner.for_each_set_bit([&](std::size_t b) {
        key[slot] = off + static_cast<int>(b);
        if (const auto* v = ops.find(key)) out += *v;
      });
    }
  }
  return out;
}

namespace {

std::vector<std::string> names_of(const AInfCategory& a, std::span<const int> labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(a.label(l).name);
  return out;
}

}  // namespace

RelationReport check_ainf_relations(const AInfCategory& a, int dmax) {
  require(dmax >= 1, Errc::invalid_argument, "dmax must be at least 1");
  RelationReport report;
  report.dmax = dmax;
  for (int d = 1; d <= dmax && report.pass; ++d) {
    for_each_composable_tuple(a, d, [&](std::span<const int> tuple) {
      ++report.tuples_checked;
      Gf2Vector r = ainf_residual(a, tuple);
      if (r.is_zero()) return true;
      const int s = a.label(tuple.front()).source;
      const int t = a.label(tuple.back()).target;
      report.pass = false;
      report.witness = RelationWitness{d, names_of(a, tuple), r, a.format(s, t, r)};
      return false;
    });
  }
  return report;
}

UnitReport check_strict_units(const AInfCategory& a) {
  for (int x = 0; x < a.object_count(); ++x) {
    if (!a.has_unit(x)) fail(Errc::precondition, "object '" + a.object_name(x) + "' has no declared unit");
  }
  UnitReport report;
  auto violate = [&](std::string kind, int arity, std::vector<std::string> inputs) {
    report.pass = false;
    report.witness = UnitWitness{std::move(kind), arity, std::move(inputs)};
  };
  for (int x = 0; x < a.object_count() && report.pass; ++x) {
    const int e = a.unit_label(x);
    if (!a.mu_labels(std::span<const int>(&e, 1)).is_zero()) {
      violate("differential", 1, {a.label(e).name});
      break;
    }
    for (int f = 0; f < a.label_count() && report.pass; ++f) {
      const auto& lf = a.label(f);
      const Gf2Vector fv = a.basis_vector(f);
      if (lf.source == x) {
        const int pair[2] = {e, f};
        if (a.mu_labels(pair) != fv) violate("left_unit", 2, {a.label(e).name, lf.name});
      }
      if (report.pass && lf.target == x) {
        const int pair[2] = {f, e};
        if (a.mu_labels(pair) != fv) violate("right_unit", 2, {lf.name, a.label(e).name});
      }
    }
  }
  if (!report.pass) return report;
  std::vector<bool> is_unit(static_cast<std::size_t>(a.label_count()), false);
  for (int x = 0; x < a.object_count(); ++x) is_unit[static_cast<std::size_t>(a.unit_label(x))] = true;
  for (const auto& [key, value] : a.operations().sorted_entries()) {
    if (key.size() < 3) continue;
    if (std::any_of(key.begin(), key.end(), [&](int l) { return is_unit[static_cast<std::size_t>(l)]; })) {
      violate("higher", static_cast<int>(key.size()), names_of(a, std::span<const int>(key.data(), key.size())));
      break;
    }
  }
  return report;
}

// --- cohomology ------------------------------------------------------------------

CohomologyCategory::CohomologyCategory(std::shared_ptr<const AInfCategory> category) : category_(std::move(category)) {
  const int n = category_->object_count();
  homs_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const auto& d = category_->differential_matrix(s, t);
      if (!(d * d).is_zero()) {
        fail(Errc::precondition, "mu^1 does not square to zero on hom(" + category_->object_name(s) + ", " +
                                     category_->object_name(t) + ")");
      }
      const auto& solver = category_->differential_solver(s, t);
      const auto dim = static_cast<std::size_t>(category_->hom_dim(s, t));
      Hom& h = homs_[index(s, t)];
      h.boundaries = solver.image_basis();
      Gf2Echelon echelon(dim);
      for (const auto& b : h.boundaries) echelon.insert(b);
      for (const auto& z : solver.kernel_basis()) {
        if (echelon.insert(z)) h.representatives.push_back(z);
      }
      std::vector<Gf2Vector> cols = h.boundaries;
      cols.insert(cols.end(), h.representatives.begin(), h.representatives.end());
      h.coordinates.emplace(Gf2Matrix::from_columns(dim, cols));
    }
  }
}

bool CohomologyCategory::is_cycle(int s, int t, const Gf2Vector& v) const {
  return category_->differential(s, t, v).is_zero();
}

bool CohomologyCategory::is_boundary(int s, int t, const Gf2Vector& v) const {
  return category_->differential_solver(s, t).consistent(v);
}

Gf2Vector CohomologyCategory::classify(int s, int t, const Gf2Vector& cycle) const {
  require(is_cycle(s, t, cycle), Errc::invalid_argument, "element is not a cycle");
  const Hom& h = homs_[index(s, t)];
  const auto x = h.coordinates->particular(cycle);
  require(x.has_value(), Errc::internal, "cycle outside the span of boundaries and representatives");
  Gf2Vector cls(h.representatives.size());
  const auto nb = h.boundaries.size();
  for (std::size_t k = 0; k < h.representatives.size(); ++k) {
    if (x->get(nb + k)) cls.set(k);
  }
  return cls;
}

Gf2Vector CohomologyCategory::representative(int s, int t, const Gf2Vector& cls) const {
  const Hom& h = homs_[index(s, t)];
  require(cls.size() == h.representatives.size(), Errc::invalid_argument, "class length mismatch");
  Gf2Vector v = category_->zero(s, t);
  cls.for_each_set_bit([&](std::size_t k) { v += h.representatives[k]; });
  return v;
}

Gf2Vector CohomologyCategory::compose(int a, int b, int c, const Gf2Vector& x, const Gf2Vector& y) const {
  const Gf2Vector rx = representative(a, b, x);
  const Gf2Vector ry = representative(b, c, y);
  const int objs[3] = {a, b, c};
  const Gf2Vector* args[2] = {&rx, &ry};
  return classify(a, c, category_->mu(objs, args));
}

Gf2Vector CohomologyCategory::unit_class(int obj) const { return classify(obj, obj, category_->unit(obj)); }

namespace {

std::optional<Gf2Vector> inverse_of(const CohomologyCategory& h, int s, int t, const Gf2Vector& x) {
  const auto ds = static_cast<std::size_t>(h.dim(s, s));
  const auto dt = static_cast<std::size_t>(h.dim(t, t));
  const auto k = static_cast<std::size_t>(h.dim(t, s));
  std::vector<Gf2Vector> cols;
  for (std::size_t j = 0; j < k; ++j) {
    const Gf2Vector y = Gf2Vector::unit(k, j);
    const Gf2Vector xy = h.compose(s, t, s, x, y);
    const Gf2Vector yx = h.compose(t, s, t, y, x);
    Gf2Vector col(ds + dt);
    xy.for_each_set_bit([&](std::size_t b) { col.set(b); });
    yx.for_each_set_bit([&](std::size_t b) { col.set(ds + b); });
    cols.push_back(std::move(col));
  }
  Gf2Vector rhs(ds + dt);
  h.unit_class(s).for_each_set_bit([&](std::size_t b) { rhs.set(b); });
  h.unit_class(t).for_each_set_bit([&](std::size_t b) { rhs.set(ds + b); });
  return AffineSolver(Gf2Matrix::from_columns(ds + dt, cols)).particular(rhs);
}

constexpr int kMaxEnumeratedClassBits = 20;

}  // namespace

bool CohomologyCategory::is_isomorphism(int s, int t, const Gf2Vector& cls) const {
  return inverse_of(*this, s, t, cls).has_value();
}

std::optional<std::pair<Gf2Vector, Gf2Vector>> CohomologyCategory::isomorphism(int s, int t) const {
  const int k = dim(s, t);
  if (k > kMaxEnumeratedClassBits) {
    fail(Errc::cap_exceeded, "cohomology hom too large for isomorphism search");
  }
  const auto total = std::uint64_t{1} << k;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Gf2Vector x(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      if ((bits >> j) & 1U) x.set(static_cast<std::size_t>(j));
    }
    if (auto y = inverse_of(*this, s, t, x)) return std::make_pair(std::move(x), std::move(*y));
  }
  return std::nullopt;
}

bool CohomologyCategory::objects_isomorphic(int s, int t) const { return s == t || isomorphism(s, t).has_value(); }

bool CohomologyCategory::check_table(std::string* witness) const {
  const int n = object_count();
  auto report = [&](const std::string& w) {
    if (witness != nullptr) *witness = w;
    return false;
  };
  auto basis = [&](int s, int t) {
    std::vector<Gf2Vector> out;
    const auto k = static_cast<std::size_t>(dim(s, t));
    for (std::size_t j = 0; j < k; ++j) out.push_back(Gf2Vector::unit(k, j));
    return out;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (const auto& x : basis(a, b)) {
        if (compose(a, a, b, unit_class(a), x) != x || compose(a, b, b, x, unit_class(b)) != x) {
          return report("unit law fails in H(" + category_->object_name(a) + ", " + category_->object_name(b) + ")");
        }
        for (int c = 0; c < n; ++c) {
          for (const auto& y : basis(b, c)) {
            const Gf2Vector xy = compose(a, b, c, x, y);
            for (int d = 0; d < n; ++d) {
              for (const auto& z : basis(c, d)) {
                if (compose(a, c, d, xy, z) != compose(a, b, d, x, compose(b, c, d, y, z))) {
                  return report("associativity fails on objects " + category_->object_name(a) + ", " +
                                category_->object_name(b) + ", " + category_->object_name(c) + ", " +
                                category_->object_name(d));
                }
              }
            }
          }
        }
      }
    }
  }
  return true;
}

CohomologyCategory cohomology(std::shared_ptr<const AInfCategory> category) {
  return CohomologyCategory(std::move(category));
}

// --- functors --------------------------------------------------------------------

StrictFunctor::StrictFunctor(std::shared_ptr<const AInfCategory> source, std::shared_ptr<const AInfCategory> target,
                             std::vector<int> object_map)
    : source_(std::move(source)), target_(std::move(target)), object_map_(std::move(object_map)) {
  require(source_ && target_, Errc::invalid_argument, "functor needs source and target categories");
  require(object_map_.size() == static_cast<std::size_t>(source_->object_count()), Errc::invalid_argument,
          "object map size does not match the source category");
  for (int y : object_map_) {
    require(y >= 0 && y < target_->object_count(), Errc::invalid_argument, "object map leaves the target category");
  }
  const int n = source_->object_count();
  components_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      components_.emplace_back(static_cast<std::size_t>(target_->hom_dim(map_object(s), map_object(t))),
                               static_cast<std::size_t>(source_->hom_dim(s, t)));
    }
  }
}

StrictFunctor StrictFunctor::identity(std::shared_ptr<const AInfCategory> category) {
  std::vector<int> objs(static_cast<std::size_t>(category->object_count()));
  for (std::size_t x = 0; x < objs.size(); ++x) objs[x] = static_cast<int>(x);
  StrictFunctor f(category, category, std::move(objs));
  for (int l = 0; l < category->label_count(); ++l) f.map_label(l, category->basis_vector(l));
  return f;
}

void StrictFunctor::map_label(int source_label, const Gf2Vector& image) {
  const auto& l = source_->label(source_label);
  auto& m = components_[index(l.source, l.target)];
  require(image.size() == m.rows(), Errc::invalid_argument, "label image has the wrong length");
  for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, static_cast<std::size_t>(l.index), image.get(r));
}

const Gf2Matrix& StrictFunctor::component(int s, int t) const { return components_.at(index(s, t)); }

Gf2Vector StrictFunctor::apply(int s, int t, const Gf2Vector& v) const { return component(s, t) * v; }

std::optional<std::string> StrictFunctor::validation_error() const {
  const AInfCategory& a = *source_;
  const AInfCategory& b = *target_;
  for (int x = 0; x < a.object_count(); ++x) {
    if (!a.has_unit(x) || !b.has_unit(map_object(x))) continue;
    if (apply(x, x, a.unit(x)) != b.unit(map_object(x))) {
      return "unit of '" + a.object_name(x) + "' is not sent to a unit";
    }
  }
  const int dmax = std::max({a.max_arity(), b.max_arity(), 1});
  std::optional<std::string> error;
  for (int d = 1; d <= dmax && !error; ++d) {
    for_each_composable_tuple(a, d, [&](std::span<const int> tuple) {
      std::vector<int> objs{a.label(tuple.front()).source};
      std::vector<Gf2Vector> images;
      images.reserve(tuple.size());
      for (int l : tuple) {
        const auto& lab = a.label(l);
        objs.push_back(lab.target);
        images.push_back(apply(lab.source, lab.target, a.basis_vector(l)));
      }
      std::vector<int> mapped;
      for (int o : objs) mapped.push_back(map_object(o));
      std::vector<const Gf2Vector*> args;
      for (const auto& v : images) args.push_back(&v);
      const Gf2Vector lhs = apply(objs.front(), objs.back(), a.mu_labels(tuple));
      const Gf2Vector rhs = b.mu(mapped, args);
      if (lhs == rhs) return true;
      std::string inputs;
      for (int l : tuple) inputs += (inputs.empty() ? "" : ", ") + a.label(l).name;
      error = "functor does not commute with mu^" + std::to_string(d) + " on (" + inputs + ")";
      return false;
    });
  }
  return error;
}

void StrictFunctor::validate() const {
  if (auto e = validation_error()) fail(Errc::precondition, *e);
}

StrictFunctor compose(const StrictFunctor& first, const StrictFunctor& second) {
  require(first.target_ptr() == second.source_ptr(), Errc::invalid_argument, "functors are not composable");
  std::vector<int> objs;
  for (int y : first.object_map()) objs.push_back(second.map_object(y));
  StrictFunctor out(first.source_ptr(), second.target_ptr(), std::move(objs));
  const AInfCategory& a = first.source();
  for (int l = 0; l < a.label_count(); ++l) {
    const auto& lab = a.label(l);
    const Gf2Vector mid = first.apply(lab.source, lab.target, a.basis_vector(l));
    out.map_label(l, second.apply(first.map_object(lab.source), first.map_object(lab.target), mid));
  }
  return out;
}

bool is_fully_faithful_embedding(const StrictFunctor& f) {
  const auto& objs = f.object_map();
  std::set<int> seen(objs.begin(), objs.end());
  if (seen.size() != objs.size()) return false;
  const int n = f.source().object_count();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const auto& m = f.component(s, t);
      if (m.rows() != m.cols() || m.rank() != m.cols()) return false;
    }
  }
  return true;
}

bool is_quasi_equivalence(const StrictFunctor& f) {
  const CohomologyCategory hs(f.source_ptr());
  const CohomologyCategory ht(f.target_ptr());
  const int n = f.source().object_count();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const int fs = f.map_object(s);
      const int ft = f.map_object(t);
      if (hs.dim(s, t) != ht.dim(fs, ft)) return false;
      std::vector<Gf2Vector> cols;
      for (const auto& rep : hs.representatives(s, t)) cols.push_back(ht.classify(fs, ft, f.apply(s, t, rep)));
      if (Gf2Matrix::from_columns(static_cast<std::size_t>(ht.dim(fs, ft)), cols).rank() != cols.size()) return false;
    }
  }
  for (int y = 0; y < f.target().object_count(); ++y) {
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x) hit = ht.objects_isomorphic(f.map_object(x), y);
    if (!hit) return false;
  }
  return true;
}

AInfFunctor AInfFunctor::from_strict(const StrictFunctor& f) {
  AInfFunctor out{f.source_ptr(), f.target_ptr(), f.object_map(), {}};
  const AInfCategory& a = f.source();
  for (int l = 0; l < a.label_count(); ++l) {
    const auto& lab = a.label(l);
    out.components.set(LabelTuple{l}, f.apply(lab.source, lab.target, a.basis_vector(l)));
  }
  return out;
}

Gf2Vector AInfFunctor::apply(std::span<const int> source_objects, std::span<const Gf2Vector* const> args) const {
  require(source_objects.size() == args.size() + 1, Errc::invalid_argument,
          "functor component needs one more object than arguments");
  boost::container::small_vector<int, 8> offsets(args.size());
  for (std::size_t k = 0; k < args.size(); ++k) {
    offsets[k] = source->hom_offset(source_objects[k], source_objects[k + 1]);
  }
  const int s = object_map.at(static_cast<std::size_t>(source_objects.front()));
  const int t = object_map.at(static_cast<std::size_t>(source_objects.back()));
  return components.evaluate(args, std::span<const int>(offsets.data(), offsets.size()), static_cast<std::size_t>(target->hom_dim(s, t)));
}

std::pair<std::shared_ptr<const AInfCategory>, StrictFunctor> full_subcategory(
    std::shared_ptr<const AInfCategory> category, const std::vector<int>& objects) {
  const AInfCategory& a = *category;
  std::vector<int> slot(static_cast<std::size_t>(a.object_count()), -1);
  AInfCategory::Builder builder;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const int x = objects[k];
    require(x >= 0 && x < a.object_count(), Errc::invalid_argument, "subcategory object out of range");
    require(slot[static_cast<std::size_t>(x)] < 0, Errc::invalid_argument, "subcategory objects repeat");
    slot[static_cast<std::size_t>(x)] = static_cast<int>(k);
    builder.add_object(a.object_name(x));
  }
  auto inside = [&](int l) {
    const auto& lab = a.label(l);
    return slot[static_cast<std::size_t>(lab.source)] >= 0 && slot[static_cast<std::size_t>(lab.target)] >= 0;
  };
  for (int s : objects) {
    for (int t : objects) {
      std::vector<std::string> labels;
      for (int j = 0; j < a.hom_dim(s, t); ++j) labels.push_back(a.label(a.hom_offset(s, t) + j).name);
      if (!labels.empty()) builder.set_hom(a.object_name(s), a.object_name(t), std::move(labels));
    }
    if (a.has_unit(s)) builder.set_unit(a.object_name(s), a.label(a.unit_label(s)).name);
  }
  for (const auto& [key, value] : a.operations().sorted_entries()) {
    if (!std::all_of(key.begin(), key.end(), inside)) continue;
    builder.set_mu(names_of(a, std::span<const int>(key.data(), key.size())), a.label_names(a.label(key.front()).source, a.label(key.back()).target, value));
  }
  auto sub = builder.build();
  StrictFunctor inclusion(sub, category, objects);
  for (int l = 0; l < sub->label_count(); ++l) inclusion.map_label(l, a.basis_vector(*a.find_label(sub->label(l).name)));
  return {std::move(sub), std::move(inclusion)};
}

// --- degenerate extension --------------------------------------------------------

DegenerateExtension degenerate_extension(std::shared_ptr<const AInfCategory> base,
                                         std::shared_ptr<const AInfCategory> adjoined,
                                         const StrictFunctor& inclusion, std::string_view copy_prefix) {
  require(inclusion.source_ptr() == adjoined && inclusion.target_ptr() == base, Errc::invalid_argument,
          "inclusion must run from the adjoined category into the base");
  require(is_fully_faithful_embedding(inclusion), Errc::precondition, "inclusion is not fully faithful");
  const AInfCategory& c = *base;
  const AInfCategory& d = *adjoined;
  const int nc = c.object_count();
  const int ne = nc + d.object_count();

  std::vector<int> proj(static_cast<std::size_t>(ne));
  std::vector<std::string> names;
  for (int x = 0; x < nc; ++x) {
    proj[static_cast<std::size_t>(x)] = x;
    names.push_back(c.object_name(x));
  }
  for (int y = 0; y < d.object_count(); ++y) {
    proj[static_cast<std::size_t>(nc + y)] = inclusion.map_object(y);
    names.push_back(std::string(copy_prefix) + "(" + d.object_name(y) + ")");
  }
  std::vector<std::vector<int>> lifts(static_cast<std::size_t>(nc));
  for (int a = 0; a < ne; ++a) lifts[static_cast<std::size_t>(proj[static_cast<std::size_t>(a)])].push_back(a);

  auto lifted_label = [&](int a, int b, int base_label) {
    const std::string& name = c.label(base_label).name;
    if (a < nc && b < nc) return name;
    return name + "@" + names[static_cast<std::size_t>(a)] + "," + names[static_cast<std::size_t>(b)];
  };
  auto lifted_names = [&](int a, int b, const Gf2Vector& v) {
    std::vector<std::string> out;
    const int off = c.hom_offset(proj[static_cast<std::size_t>(a)], proj[static_cast<std::size_t>(b)]);
    v.for_each_set_bit([&](std::size_t k) { out.push_back(lifted_label(a, b, off + static_cast<int>(k))); });
    return out;
  };

  AInfCategory::Builder builder;
  for (const auto& n : names) builder.add_object(n);
  for (int a = 0; a < ne; ++a) {
    for (int b = 0; b < ne; ++b) {
      const int pa = proj[static_cast<std::size_t>(a)];
      const int pb = proj[static_cast<std::size_t>(b)];
      std::vector<std::string> labels;
      for (int k = 0; k < c.hom_dim(pa, pb); ++k) labels.push_back(lifted_label(a, b, c.hom_offset(pa, pb) + k));
      if (!labels.empty()) builder.set_hom(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)], labels);
    }
    const int pa = proj[static_cast<std::size_t>(a)];
    if (c.has_unit(pa)) builder.set_unit(names[static_cast<std::size_t>(a)], lifted_label(a, a, c.unit_label(pa)));
  }
  for (const auto& [key, value] : c.operations().sorted_entries()) {
    std::vector<int> chain{c.label(key.front()).source};
    for (int l : key) chain.push_back(c.label(l).target);
    std::vector<int> lift(chain.size());
    auto recurse = [&](auto&& self, std::size_t k) -> void {
      if (k == chain.size()) {
        std::vector<std::string> inputs;
        for (std::size_t j = 0; j < key.size(); ++j) inputs.push_back(lifted_label(lift[j], lift[j + 1], key[j]));
        builder.set_mu(std::move(inputs), lifted_names(lift.front(), lift.back(), value));
        return;
      }
      for (int a : lifts[static_cast<std::size_t>(chain[k])]) {
        lift[k] = a;
        self(self, k + 1);
      }
    };
    recurse(recurse, 0);
  }
  auto ext = builder.build();

  // Labels of E(a, b) are ordered like those of C(pa, pb), so the strict
  // functors below are identity matrices up to the choice of hom.
  StrictFunctor projection(ext, base, proj);
  for (int l = 0; l < ext->label_count(); ++l) {
    const auto& lab = ext->label(l);
    const int pa = proj[static_cast<std::size_t>(lab.source)];
    const int pb = proj[static_cast<std::size_t>(lab.target)];
    projection.map_label(l, Gf2Vector::unit(static_cast<std::size_t>(c.hom_dim(pa, pb)), static_cast<std::size_t>(lab.index)));
  }
  std::vector<int> base_objs(static_cast<std::size_t>(nc));
  for (int x = 0; x < nc; ++x) base_objs[static_cast<std::size_t>(x)] = x;
  StrictFunctor base_embedding(base, ext, base_objs);
  for (int l = 0; l < c.label_count(); ++l) base_embedding.map_label(l, ext->basis_vector(*ext->find_label(c.label(l).name)));
  std::vector<int> adj_objs(static_cast<std::size_t>(d.object_count()));
  for (int y = 0; y < d.object_count(); ++y) adj_objs[static_cast<std::size_t>(y)] = nc + y;
  StrictFunctor adjoined_embedding(adjoined, ext, adj_objs);
  for (int l = 0; l < d.label_count(); ++l) {
    const auto& lab = d.label(l);
    adjoined_embedding.map_label(l, inclusion.apply(lab.source, lab.target, d.basis_vector(l)));
  }
  return DegenerateExtension{std::move(ext), std::move(projection), std::move(base_embedding),
                             std::move(adjoined_embedding)};
}

}  // namespace ainerve
