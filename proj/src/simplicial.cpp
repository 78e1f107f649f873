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

#include "ainerve/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "ainerve/error.hpp"

namespace ainerve {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::string subset_id(const std::vector<int>& vertices) {
  std::string id;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices.size() > 1 && vertices.back() >= 10) id += ',';
    id += std::to_string(vertices[i]);
  }
  return id;
}

// Nondegenerate simplices of Delta^n as vertex subsets, with a predicate
// selecting which subsets to keep. Kept subsets must be closed under faces.
SimplicialSet subset_complex(int n, int cap, const std::function<bool(unsigned)>& keep) {
  if (n < 0) fail(Errc::invalid_argument, "simplex dimension must be nonnegative");
  if (cap < 0) cap = n;
  SimplicialSet x(cap);
  std::vector<std::unordered_map<unsigned, int>> index(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= std::min(n, cap); ++d) {
    for (unsigned mask = 1; mask < (1U << (n + 1)); ++mask) {
      if (std::popcount(mask) != d + 1 || !keep(mask)) continue;
      std::vector<int> verts;
      for (int v = 0; v <= n; ++v) {
        if (mask & (1U << v)) verts.push_back(v);
      }
      std::vector<SimplexRef> faces;
      if (d > 0) {
        for (int i = 0; i <= d; ++i) {
          const unsigned sub = mask & ~(1U << verts[static_cast<std::size_t>(i)]);
          faces.push_back(SimplexRef::nondegenerate(d - 1, index[static_cast<std::size_t>(d - 1)].at(sub)));
        }
      }
      index[static_cast<std::size_t>(d)][mask] = x.add_cell(d, subset_id(verts), std::move(faces));
    }
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ordinal maps

OrdinalMap OrdinalMap::identity(int n) {
  OrdinalMap m{n, n, {}};
  for (int i = 0; i <= n; ++i) m.values.push_back(i);
  return m;
}

OrdinalMap OrdinalMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) fail(Errc::invalid_argument, "coface index out of range");
  OrdinalMap m{n - 1, n, {}};
  for (int v = 0; v <= n - 1; ++v) m.values.push_back(v < i ? v : v + 1);
  return m;
}

OrdinalMap OrdinalMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) fail(Errc::invalid_argument, "codegeneracy index out of range");
  OrdinalMap m{n + 1, n, {}};
  for (int v = 0; v <= n + 1; ++v) m.values.push_back(v <= i ? v : v - 1);
  return m;
}

OrdinalMap OrdinalMap::from_values(int target_dim, std::vector<int> values) {
  if (values.empty()) fail(Errc::invalid_argument, "ordinal map needs at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > target_dim) fail(Errc::invalid_argument, "ordinal map value out of range");
    if (i > 0 && values[i] < values[i - 1]) fail(Errc::invalid_argument, "ordinal map must be non-decreasing");
  }
  const int source = static_cast<int>(values.size()) - 1;
  return OrdinalMap{source, target_dim, std::move(values)};
}

OrdinalMap OrdinalMap::from_degeneracy_word(int source_dim, const std::vector<int>& word) {
  std::vector<bool> repeat(static_cast<std::size_t>(std::max(source_dim, 0)), false);
  for (int i : word) {
    if (i < 0 || i >= source_dim) fail(Errc::invalid_input, "degeneracy index out of range");
    if (repeat[static_cast<std::size_t>(i)]) fail(Errc::invalid_input, "repeated index in degeneracy word");
    repeat[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] >= word[i - 1]) fail(Errc::invalid_input, "degeneracy word must be strictly decreasing");
  }
  std::vector<int> values{0};
  for (int i = 0; i < source_dim; ++i) values.push_back(values.back() + (repeat[static_cast<std::size_t>(i)] ? 0 : 1));
  const int target = values.back();
  return OrdinalMap{source_dim, target, std::move(values)};
}

OrdinalMap OrdinalMap::from_image(int target_dim, const std::vector<int>& image) {
  for (std::size_t i = 1; i < image.size(); ++i) {
    if (image[i] <= image[i - 1]) fail(Errc::invalid_argument, "injection image must be strictly increasing");
  }
  return from_values(target_dim, image);
}

bool OrdinalMap::is_mono() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) return false;
  }
  return true;
}

bool OrdinalMap::is_epi() const { return values.front() == 0 && values.back() == target_dim && [&] {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1] + 1) return false;
  }
  return true;
}(); }

bool OrdinalMap::is_identity() const { return source_dim == target_dim && is_mono(); }

std::vector<int> OrdinalMap::degeneracy_word() const {
  std::vector<int> word;
  for (int i = source_dim - 1; i >= 0; --i) {
    if (values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(i) + 1]) word.push_back(i);
  }
  return word;
}

OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner) {
  if (inner.target_dim != outer.source_dim) fail(Errc::invalid_argument, "ordinal maps are not composable");
  OrdinalMap out{inner.source_dim, outer.target_dim, {}};
  out.values.reserve(inner.values.size());
  for (int v : inner.values) out.values.push_back(outer.values[static_cast<std::size_t>(v)]);
  return out;
}

std::pair<OrdinalMap, OrdinalMap> epi_mono(const OrdinalMap& m) {
  std::vector<int> image;
  std::vector<int> epi_values;
  for (int v : m.values) {
    if (image.empty() || image.back() != v) image.push_back(v);
    epi_values.push_back(static_cast<int>(image.size()) - 1);
  }
  const int q = static_cast<int>(image.size()) - 1;
  return {OrdinalMap{m.source_dim, q, std::move(epi_values)}, OrdinalMap{q, m.target_dim, std::move(image)}};
}

std::vector<OrdinalMap> monotone_maps(int source_dim, int target_dim) {
  std::vector<OrdinalMap> out;
  if (source_dim < 0 || target_dim < 0) return out;
  std::vector<int> values(static_cast<std::size_t>(source_dim) + 1, 0);
  while (true) {
    out.push_back(OrdinalMap{source_dim, target_dim, values});
    int pos = source_dim;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == target_dim) --pos;
    if (pos < 0) break;
    const int next = values[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i <= source_dim; ++i) values[static_cast<std::size_t>(i)] = next;
  }
  return out;
}

std::vector<OrdinalMap> surjections(int source_dim, int target_dim) {
  std::vector<OrdinalMap> out;
  for (auto& m : monotone_maps(source_dim, target_dim)) {
    if (m.is_epi()) out.push_back(std::move(m));
  }
  return out;
}

std::vector<OrdinalMap> injections(int source_dim, int target_dim) {
  std::vector<OrdinalMap> out;
  for (auto& m : monotone_maps(source_dim, target_dim)) {
    if (m.is_mono()) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplex references

SimplexRef SimplexRef::nondegenerate(int dim, int base) { return SimplexRef{base, OrdinalMap::identity(dim)}; }

std::size_t SimplexRefHash::operator()(const SimplexRef& s) const noexcept {
  std::size_t h = mix(std::hash<int>{}(s.base), static_cast<std::size_t>(s.degeneracy.target_dim));
  for (int v : s.degeneracy.values) h = mix(h, static_cast<std::size_t>(v));
  return h;
}

std::size_t SimplexTupleHash::operator()(const std::vector<SimplexRef>& t) const noexcept {
  std::size_t h = t.size();
  for (const auto& s : t) h = mix(h, SimplexRefHash{}(s));
  return h;
}

// ---------------------------------------------------------------------------
// Simplicial sets

SimplicialSet::SimplicialSet(int cap) : cap_(cap) {
  if (cap < 0) fail(Errc::invalid_argument, "cap must be nonnegative");
  ids_.resize(static_cast<std::size_t>(cap) + 1);
  faces_.resize(static_cast<std::size_t>(cap) + 1);
}

int SimplicialSet::top_dim() const noexcept {
  for (int d = cap_; d >= 0; --d) {
    if (!ids_[static_cast<std::size_t>(d)].empty()) return d;
  }
  return -1;
}

int SimplicialSet::add_cell(int dim, std::string id, std::vector<SimplexRef> faces) {
  if (dim < 0) fail(Errc::invalid_argument, "cell dimension must be nonnegative");
  if (dim > cap_) fail(Errc::cap_exceeded, "cell '" + id + "' of dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap_));
  if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1)) {
    fail(Errc::invalid_input, "cell '" + id + "' must have " + std::to_string(dim == 0 ? 0 : dim + 1) + " faces");
  }
  for (const auto& f : faces) {
    if (f.dim() != dim - 1) fail(Errc::invalid_input, "face of '" + id + "' has the wrong dimension");
    check_ref(f);
  }
  if (lookup_.contains(id)) fail(Errc::invalid_input, "duplicate cell id '" + id + "'");
  const auto d = static_cast<std::size_t>(dim);
  const int index = static_cast<int>(ids_[d].size());
  lookup_.emplace(id, CellId{dim, index});
  ids_[d].push_back(std::move(id));
  faces_[d].push_back(std::move(faces));
  return index;
}

void SimplicialSet::check_ref(const SimplexRef& s) const {
  const int p = s.base_dim();
  if (p < 0 || p > cap_ || s.base < 0 || static_cast<std::size_t>(s.base) >= ids_[static_cast<std::size_t>(p)].size()) {
    fail(Errc::invalid_input, "simplex reference does not resolve");
  }
  if (!s.degeneracy.is_epi() || static_cast<int>(s.degeneracy.values.size()) != s.dim() + 1) {
    fail(Errc::invalid_input, "simplex reference degeneracy is not a surjection");
  }
}

void SimplicialSet::validate() const {
  for (int d = 1; d <= cap_; ++d) {
    const auto& cells = faces_[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (const auto& f : cells[c]) check_ref(f);
      if (d < 2) continue;
      const SimplexRef x = SimplexRef::nondegenerate(d, static_cast<int>(c));
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          if (face(face(x, j), i) != face(face(x, i), j - 1)) {
            fail(Errc::invalid_input, "simplicial identity d" + std::to_string(i) + "d" + std::to_string(j) +
                                          " fails on cell '" + ids_[static_cast<std::size_t>(d)][c] + "'");
          }
        }
      }
    }
  }
}

std::size_t SimplicialSet::cell_count(int dim) const {
  if (dim < 0 || dim > cap_) return 0;
  return ids_[static_cast<std::size_t>(dim)].size();
}

const std::string& SimplicialSet::cell_id(CellId cell) const {
  return ids_.at(static_cast<std::size_t>(cell.dim)).at(static_cast<std::size_t>(cell.index));
}

const std::vector<SimplexRef>& SimplicialSet::faces(CellId cell) const {
  return faces_.at(static_cast<std::size_t>(cell.dim)).at(static_cast<std::size_t>(cell.index));
}

std::optional<CellId> SimplicialSet::find(std::string_view id) const {
  auto it = lookup_.find(std::string(id));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SimplexRef SimplicialSet::face_of_cell(CellId cell, const OrdinalMap& mono) const {
  if (mono.source_dim == mono.target_dim) return SimplexRef::nondegenerate(cell.dim, cell.index);
  int missing = 0;
  while (missing < static_cast<int>(mono.values.size()) && mono.values[static_cast<std::size_t>(missing)] == missing) ++missing;
  OrdinalMap rest{mono.source_dim, mono.target_dim - 1, {}};
  rest.values.reserve(mono.values.size());
  for (int v : mono.values) rest.values.push_back(v < missing ? v : v - 1);
  return act(faces(cell)[static_cast<std::size_t>(missing)], rest);
}

SimplexRef SimplicialSet::act(const SimplexRef& s, const OrdinalMap& m) const {
  if (m.target_dim != s.dim()) fail(Errc::invalid_argument, "ordinal map target does not match simplex dimension");
  auto [epi, mono] = epi_mono(compose(s.degeneracy, m));
  SimplexRef f = face_of_cell(s.cell(), mono);
  f.degeneracy = compose(f.degeneracy, epi);
  return f;
}

SimplexRef SimplicialSet::face(const SimplexRef& s, int i) const {
  if (s.dim() < 1) fail(Errc::invalid_argument, "vertices have no faces");
  return act(s, OrdinalMap::coface(s.dim(), i));
}

SimplexRef SimplicialSet::degeneracy(const SimplexRef& s, int i) const {
  if (s.dim() + 1 > cap_) fail(Errc::cap_exceeded, "degeneracy exceeds cap " + std::to_string(cap_));
  return act(s, OrdinalMap::codegeneracy(s.dim(), i));
}

std::vector<SimplexRef> SimplicialSet::simplices(int n) const {
  if (n > cap_) fail(Errc::cap_exceeded, "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap_));
  std::vector<SimplexRef> out;
  for (int p = 0; p <= n; ++p) {
    const auto count = ids_[static_cast<std::size_t>(p)].size();
    if (count == 0) continue;
    const auto surj = surjections(n, p);
    for (std::size_t c = 0; c < count; ++c) {
      for (const auto& s : surj) out.push_back(SimplexRef{static_cast<int>(c), s});
    }
  }
  return out;
}

std::vector<int> SimplicialSet::vertices(const SimplexRef& s) const {
  std::vector<int> out;
  for (int v = 0; v <= s.dim(); ++v) {
    out.push_back(act(s, OrdinalMap{0, s.dim(), {v}}).base);
  }
  return out;
}

std::string SimplicialSet::describe(const SimplexRef& s) const {
  std::string out = cell_id(s.cell());
  if (!s.is_degenerate()) return out;
  out += "^[";
  const auto word = s.degeneracy.degeneracy_word();
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? "," : "") + std::to_string(word[i]);
  return out + "]";
}

SimplicialSet standard_simplex(int n, int cap) {
  return subset_complex(n, cap, [](unsigned) { return true; });
}

SimplicialSet horn(int n, int k, int cap) {
  if (n < 1 || k < 0 || k > n) fail(Errc::invalid_argument, "horn index out of range");
  const unsigned full = (1U << (n + 1)) - 1;
  const unsigned missing_face = full & ~(1U << k);
  return subset_complex(n, cap, [=](unsigned mask) { return mask != full && mask != missing_face; });
}

SimplicialSet boundary(int n, int cap) {
  if (n < 0) fail(Errc::invalid_argument, "simplex dimension must be nonnegative");
  const unsigned full = (1U << (n + 1)) - 1;
  return subset_complex(n, cap, [=](unsigned mask) { return mask != full; });
}

// ---------------------------------------------------------------------------
// Simplicial maps

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialSet> domain, std::shared_ptr<const SimplicialSet> codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  images_.resize(static_cast<std::size_t>(domain_->cap()) + 1);
  for (int d = 0; d <= domain_->cap(); ++d) images_[static_cast<std::size_t>(d)].resize(domain_->cell_count(d));
}

void SimplicialMap::assign(CellId cell, SimplexRef image) {
  if (image.dim() != cell.dim) fail(Errc::invalid_input, "image dimension differs from cell dimension");
  images_.at(static_cast<std::size_t>(cell.dim)).at(static_cast<std::size_t>(cell.index)) = std::move(image);
}

const SimplexRef& SimplicialMap::image(CellId cell) const {
  const auto& slot = images_.at(static_cast<std::size_t>(cell.dim)).at(static_cast<std::size_t>(cell.index));
  if (!slot) fail(Errc::invalid_input, "simplicial map has no image for '" + domain_->cell_id(cell) + "'");
  return *slot;
}

SimplexRef SimplicialMap::apply(const SimplexRef& s) const { return codomain_->act(image(s.cell()), s.degeneracy); }

bool SimplicialMap::is_simplicial(std::string* witness) const {
  for (int d = 0; d <= domain_->cap(); ++d) {
    for (std::size_t c = 0; c < domain_->cell_count(d); ++c) {
      const CellId cell{d, static_cast<int>(c)};
      const auto& slot = images_[static_cast<std::size_t>(d)][c];
      if (!slot) {
        if (witness) *witness = "unassigned cell " + domain_->cell_id(cell);
        return false;
      }
      for (int i = 0; d > 0 && i <= d; ++i) {
        const SimplexRef lhs = apply(domain_->faces(cell)[static_cast<std::size_t>(i)]);
        const SimplexRef rhs = codomain_->face(*slot, i);
        if (lhs != rhs) {
          if (witness) *witness = "face d" + std::to_string(i) + " of " + domain_->cell_id(cell);
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Category of simplices

SimplexCategory SimplexCategory::build(const SimplicialSet& x, int cap) {
  if (cap > x.cap()) fail(Errc::cap_exceeded, "simplex category cap exceeds the simplicial set cap");
  SimplexCategory cat;
  std::unordered_map<SimplexRef, int, SimplexRefHash> index;
  std::vector<int> dims;
  for (int n = 0; n <= cap; ++n) {
    for (auto& s : x.simplices(n)) {
      index.emplace(s, static_cast<int>(cat.objects_.size()));
      cat.objects_.push_back(std::move(s));
    }
  }
  for (std::size_t b = 0; b < cat.objects_.size(); ++b) {
    const SimplexRef& target = cat.objects_[b];
    for (int k = 0; k <= cap; ++k) {
      for (auto& m : monotone_maps(k, target.dim())) {
        const int source = index.at(x.act(target, m));
        cat.morphisms_.push_back(Morphism{source, static_cast<int>(b), std::move(m)});
      }
    }
  }
  return cat;
}

SimplexCategory SimplexCategory::nondegenerate_mono() const {
  SimplexCategory sub;
  std::vector<int> remap(objects_.size(), -1);
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].is_degenerate()) continue;
    remap[i] = static_cast<int>(sub.objects_.size());
    sub.objects_.push_back(objects_[i]);
  }
  for (const auto& m : morphisms_) {
    const int s = remap[static_cast<std::size_t>(m.source)];
    const int t = remap[static_cast<std::size_t>(m.target)];
    if (s < 0 || t < 0 || !m.map.is_mono()) continue;
    sub.morphisms_.push_back(Morphism{s, t, m.map});
  }
  return sub;
}

std::optional<int> SimplexCategory::find_object(const SimplexRef& s) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == s) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> SimplexCategory::find_morphism(int source, int target, const OrdinalMap& map) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    const auto& m = morphisms_[i];
    if (m.source == source && m.target == target && m.map == map) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> SimplexCategory::compose(int first, int second) const {
  const auto& a = morphisms_.at(static_cast<std::size_t>(first));
  const auto& b = morphisms_.at(static_cast<std::size_t>(second));
  if (a.target != b.source) return std::nullopt;
  return find_morphism(a.source, b.target, ainerve::compose(b.map, a.map));
}

bool SimplexCategory::has_identities() const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const int o = static_cast<int>(i);
    if (!find_morphism(o, o, OrdinalMap::identity(objects_[i].dim()))) return false;
  }
  return true;
}

bool SimplexCategory::closed_under_composition() const {
  for (std::size_t a = 0; a < morphisms_.size(); ++a) {
    for (std::size_t b = 0; b < morphisms_.size(); ++b) {
      if (morphisms_[a].target != morphisms_[b].source) continue;
      if (!compose(static_cast<int>(a), static_cast<int>(b))) return false;
    }
  }
  return true;
}

}  // namespace ainerve
