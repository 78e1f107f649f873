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

#include "ainerve/homotopy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include <boost/pending/disjoint_sets.hpp>

#include "ainerve/error.hpp"

namespace ainerve {

namespace {

const SimplexRef& blank_face() {
  static const SimplexRef blank{-1, OrdinalMap{}};
  return blank;
}

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

HornReport run_horn_check(const SimplicialSet& x, int cap, bool inner_only) {
  require(cap >= 0, Errc::invalid_argument, "cap must be non-negative");
  require(cap <= x.cap(), Errc::invalid_argument, "cap exceeds the truncation of the simplicial set");
  HornReport report;
  report.check = inner_only ? "quasi_category" : "kan";
  report.cap = cap;
  HornSearch search(x);
  for (int n = inner_only ? 2 : 1; n <= cap && report.pass; ++n) {
    const int first = inner_only ? 1 : 0;
    const int last = inner_only ? n - 1 : n;
    for (int k = first; k <= last && report.pass; ++k) {
      search.for_each_horn(n, k, [&](const std::vector<SimplexRef>& faces) {
        ++report.horns_checked;
        if (!search.fillers(n, k, faces).empty()) return true;
        report.pass = false;
        report.witness = HornWitness{n, k, faces};
        return false;
      });
    }
  }
  return report;
}

}  // namespace

// --- HornSearch --------------------------------------------------------------------

HornSearch::HornSearch(const SimplicialSet& x) : x_(&x), levels_(static_cast<std::size_t>(x.cap()) + 1) {}

HornSearch::Level& HornSearch::level(int n) {
  require(n >= 0 && n <= x_->cap(), Errc::cap_exceeded, "horn search beyond the truncation");
  Level& lv = levels_[static_cast<std::size_t>(n)];
  if (lv.built) return lv;
  lv.simplices = x_->simplices(n);
  lv.faces.resize(lv.simplices.size());
  lv.by_face.resize(n >= 1 ? static_cast<std::size_t>(n) + 1 : 0);
  lv.by_horn.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t s = 0; s < lv.simplices.size(); ++s) {
    for (int i = 0; i <= n && n >= 1; ++i) {
      lv.faces[s].push_back(x_->face(lv.simplices[s], i));
      lv.by_face[static_cast<std::size_t>(i)][lv.faces[s].back()].push_back(static_cast<int>(s));
    }
  }
  lv.built = true;
  return lv;
}

const std::vector<SimplexRef>& HornSearch::simplices(int n) { return level(n).simplices; }

const std::vector<SimplexRef>& HornSearch::faces_of(int n, std::size_t index) { return level(n).faces.at(index); }

bool HornSearch::is_horn(int n, int k, const std::vector<SimplexRef>& faces) const {
  if (n < 1 || k < 0 || k > n || faces.size() != static_cast<std::size_t>(n) + 1) return false;
  for (int j = 0; j <= n; ++j) {
    if (j != k && faces[static_cast<std::size_t>(j)].dim() != n - 1) return false;
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (i == k || j == k) continue;
      if (x_->face(faces[static_cast<std::size_t>(j)], i) != x_->face(faces[static_cast<std::size_t>(i)], j - 1)) return false;
    }
  }
  return true;
}

void HornSearch::for_each_horn(int n, int k, const std::function<bool(const std::vector<SimplexRef>&)>& visit) {
  require(n >= 1 && k >= 0 && k <= n, Errc::invalid_argument, "horn index out of range");
  Level& lower = level(n - 1);
  level(n);
  std::vector<int> positions;
  for (int j = 0; j <= n; ++j) {
    if (j != k) positions.push_back(j);
  }
  std::vector<int> chosen(static_cast<std::size_t>(n) + 1, -1);
  std::vector<SimplexRef> faces(static_cast<std::size_t>(n) + 1, blank_face());
  std::vector<int> all(lower.simplices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  static const std::vector<int> none;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (stop) return;
    if (p == positions.size()) {
      if (!visit(faces)) stop = true;
      return;
    }
    const int j = positions[p];
    const std::vector<int>* candidates = &all;
    if (p > 0) {
      const int i0 = positions[0];
      const auto& want = lower.faces[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i0)])][static_cast<std::size_t>(j - 1)];
      const auto& index = lower.by_face[static_cast<std::size_t>(i0)];
      const auto it = index.find(want);
      candidates = it == index.end() ? &none : &it->second;
    }
    for (int c : *candidates) {
      bool ok = true;
      for (std::size_t q = 1; q < p && ok; ++q) {
        const int i = positions[q];
        ok = lower.faces[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] ==
             lower.faces[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j - 1)];
      }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(j)] = c;
      faces[static_cast<std::size_t>(j)] = lower.simplices[static_cast<std::size_t>(c)];
      self(self, p + 1);
      if (stop) return;
    }
    chosen[static_cast<std::size_t>(j)] = -1;
    faces[static_cast<std::size_t>(j)] = blank_face();
  };
  rec(rec, 0);
}

const std::vector<int>& HornSearch::fillers(int n, int k, const std::vector<SimplexRef>& faces) {
  require(n >= 1 && k >= 0 && k <= n && faces.size() == static_cast<std::size_t>(n) + 1, Errc::invalid_argument,
          "horn does not match its dimension");
  Level& lv = level(n);
  auto& slot = lv.by_horn[static_cast<std::size_t>(k)];
  if (!slot) {
    slot.emplace();
    for (std::size_t s = 0; s < lv.simplices.size(); ++s) {
      auto key = lv.faces[s];
      key[static_cast<std::size_t>(k)] = blank_face();
      (*slot)[key].push_back(static_cast<int>(s));
    }
  }
  auto key = faces;
  key[static_cast<std::size_t>(k)] = blank_face();
  static const std::vector<int> none;
  const auto it = slot->find(key);
  return it == slot->end() ? none : it->second;
}

HornReport check_quasi_category(const SimplicialSet& x, int cap) { return run_horn_check(x, cap, true); }

HornReport check_kan(const SimplicialSet& x, int cap) { return run_horn_check(x, cap, false); }

bool is_quasi_category(const SimplicialSet& x, int cap, HornWitness* witness) {
  auto report = check_quasi_category(x, cap);
  if (witness && report.witness) *witness = *report.witness;
  return report.pass;
}

bool is_kan(const SimplicialSet& x, int cap, HornWitness* witness) {
  auto report = check_kan(x, cap);
  if (witness && report.witness) *witness = *report.witness;
  return report.pass;
}

// --- HoCategory --------------------------------------------------------------------

HoCategory HoCategory::build(std::shared_ptr<const SimplicialSet> x) {
  require(x != nullptr, Errc::invalid_argument, "null simplicial set");
  require(x->cap() >= 2, Errc::precondition, "the homotopy category needs a truncation of dimension at least 2");
  HoCategory h;
  h.x_ = x;
  h.objects_ = static_cast<int>(x->cell_count(0));
  const auto edges = x->simplices(1);
  std::unordered_map<SimplexRef, int, SimplexRefHash> edge_index;
  for (std::size_t e = 0; e < edges.size(); ++e) edge_index.emplace(edges[e], static_cast<int>(e));
  const auto triangles = x->simplices(2);
  std::vector<std::array<int, 3>> tri_faces;
  tri_faces.reserve(triangles.size());
  boost::disjoint_sets_with_storage<> sets(edges.size());
  for (const auto& t : triangles) {
    std::array<int, 3> f{};
    for (int i = 0; i < 3; ++i) f[static_cast<std::size_t>(i)] = edge_index.at(x->face(t, i));
    if (edges[static_cast<std::size_t>(f[2])].is_degenerate()) sets.union_set(f[0], f[1]);
    if (edges[static_cast<std::size_t>(f[0])].is_degenerate()) sets.union_set(f[2], f[1]);
    tri_faces.push_back(f);
  }

  std::map<std::tuple<int, int, SimplexRef>, std::vector<SimplexRef>> groups;
  std::map<int, SimplexRef> root_rep;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int root = static_cast<int>(sets.find_set(static_cast<int>(e)));
    auto [it, fresh] = root_rep.emplace(root, edges[e]);
    if (!fresh && edges[e] < it->second) it->second = edges[e];
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const SimplexRef& rep = root_rep.at(static_cast<int>(sets.find_set(static_cast<int>(e))));
    const auto verts = x->vertices(edges[e]);
    groups[{verts[0], verts[1], rep}].push_back(edges[e]);
  }
  h.hom_.assign(static_cast<std::size_t>(h.objects_) * static_cast<std::size_t>(h.objects_), {});
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    const int id = static_cast<int>(h.classes_.size());
    for (const auto& m : members) h.class_of_.emplace(m, id);
    h.hom_[static_cast<std::size_t>(std::get<0>(key) * h.objects_ + std::get<1>(key))].push_back(id);
    h.classes_.push_back(EdgeClass{std::get<0>(key), std::get<1>(key), std::move(members)});
  }

  std::unordered_map<std::uint64_t, int> seen;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& f = tri_faces[t];
    const int first = h.class_of(edges[static_cast<std::size_t>(f[2])]);
    const int second = h.class_of(edges[static_cast<std::size_t>(f[0])]);
    const int composite = h.class_of(edges[static_cast<std::size_t>(f[1])]);
    const auto key = pair_key(first, second);
    const auto [it, fresh] = h.compose_.emplace(key, composite);
    if (!fresh && it->second != composite) {
      fail(Errc::precondition, "composite of " + x->describe(edges[static_cast<std::size_t>(f[2])]) + " and " +
                                   x->describe(edges[static_cast<std::size_t>(f[0])]) +
                                   " depends on the 2-simplex; not a quasi-category");
    }
    if (++seen[key] == 2) ++h.cross_checked_;
  }
  for (int s = 0; s < h.objects_; ++s) {
    h.identity_.push_back(h.class_of(x->degeneracy(SimplexRef::nondegenerate(0, s), 0)));
    for (int t = 0; t < h.objects_; ++t) {
      for (int u = 0; u < h.objects_; ++u) {
        for (int a : h.hom(s, t)) {
          for (int b : h.hom(t, u)) {
            if (!h.compose_.count(pair_key(a, b))) {
              fail(Errc::precondition, "edges " + x->describe(h.classes_[static_cast<std::size_t>(a)].members.front()) +
                                           " and " + x->describe(h.classes_[static_cast<std::size_t>(b)].members.front()) +
                                           " have no composite; not a quasi-category");
            }
          }
        }
      }
    }
  }
  return h;
}

int HoCategory::class_of(const SimplexRef& edge) const {
  const auto it = class_of_.find(edge);
  if (it == class_of_.end()) fail(Errc::invalid_argument, "not an edge of the simplicial set");
  return it->second;
}

const std::vector<int>& HoCategory::hom(int s, int t) const {
  require(s >= 0 && s < objects_ && t >= 0 && t < objects_, Errc::invalid_argument, "object out of range");
  return hom_[static_cast<std::size_t>(s * objects_ + t)];
}

int HoCategory::identity(int object) const {
  require(object >= 0 && object < objects_, Errc::invalid_argument, "object out of range");
  return identity_[static_cast<std::size_t>(object)];
}

int HoCategory::compose(int first, int second) const {
  const auto it = compose_.find(pair_key(first, second));
  if (it == compose_.end()) fail(Errc::invalid_argument, "classes are not composable");
  return it->second;
}

std::optional<int> HoCategory::inverse(int c) const {
  const auto& cls = edge_class(c);
  for (int d : hom(cls.target, cls.source)) {
    if (compose(c, d) == identity(cls.source) && compose(d, c) == identity(cls.target)) return d;
  }
  return std::nullopt;
}

bool HoCategory::check_table(std::string* witness) const {
  auto report = [&](const std::string& what) {
    if (witness) *witness = what;
    return false;
  };
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& cls = classes_[c];
    const int id = static_cast<int>(c);
    if (compose(identity(cls.source), id) != id || compose(id, identity(cls.target)) != id) {
      return report("unit law fails for class " + std::to_string(c));
    }
    for (int u = 0; u < objects_; ++u) {
      for (int b : hom(cls.target, u)) {
        for (int w = 0; w < objects_; ++w) {
          for (int d : hom(u, w)) {
            if (compose(compose(id, b), d) != compose(id, compose(b, d))) {
              return report("associativity fails for classes " + std::to_string(c) + ", " + std::to_string(b) + ", " +
                            std::to_string(d));
            }
          }
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> tau0(const HoCategory& h) {
  boost::disjoint_sets_with_storage<> sets(static_cast<std::size_t>(h.object_count()));
  for (int s = 0; s < h.object_count(); ++s) {
    for (int t = s + 1; t < h.object_count(); ++t) {
      const auto& hom = h.hom(s, t);
      if (std::any_of(hom.begin(), hom.end(), [&](int c) { return h.is_isomorphism(c); })) sets.union_set(s, t);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < h.object_count(); ++v) groups[static_cast<int>(sets.find_set(v))].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_equivalence_edge(const HoCategory& h, const SimplexRef& edge) { return h.is_isomorphism(h.class_of(edge)); }

SimplicialSet maximal_kan_subcomplex(const HoCategory& h) {
  const SimplicialSet& x = h.sset();
  SimplicialSet out(x.cap());
  std::vector<std::vector<int>> remap(static_cast<std::size_t>(x.cap()) + 1);
  for (int n = 0; n <= x.cap(); ++n) {
    const auto count = x.cell_count(n);
    remap[static_cast<std::size_t>(n)].assign(count, -1);
    for (std::size_t c = 0; c < count; ++c) {
      const SimplexRef cell = SimplexRef::nondegenerate(n, static_cast<int>(c));
      bool keep = true;
      for (int i = 0; i < n && keep; ++i) {
        for (int j = i + 1; j <= n && keep; ++j) {
          keep = is_equivalence_edge(h, x.act(cell, OrdinalMap::from_image(n, {i, j})));
        }
      }
      if (!keep) continue;
      std::vector<SimplexRef> faces = x.faces(cell.cell());
      for (auto& f : faces) f.base = remap[static_cast<std::size_t>(f.base_dim())][static_cast<std::size_t>(f.base)];
      remap[static_cast<std::size_t>(n)][c] = out.add_cell(n, x.cell_id(cell.cell()), std::move(faces));
    }
  }
  return out;
}

}  // namespace ainerve
