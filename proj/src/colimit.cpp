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

#include "ainerve/colimit.hpp"

#include <algorithm>
#include <set>

#include "ainerve/error.hpp"

namespace ainerve {

namespace {

std::string cell_name(const SimplicialSet& x, CellId c) { return "'" + x.cell_id(c) + "'"; }

std::vector<int> cell_vertices(const SimplicialSet& x, CellId c) {
  return x.vertices(SimplexRef::nondegenerate(c.dim, c.index));
}

bool functors_equal(const StrictFunctor& a, const StrictFunctor& b) {
  if (a.source_ptr() != b.source_ptr() || a.target_ptr() != b.target_ptr() || a.object_map() != b.object_map()) {
    return false;
  }
  const int n = a.source().object_count();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (!(a.component(s, t) == b.component(s, t))) return false;
    }
  }
  return true;
}

bool is_monotone(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

}  // namespace

// --- AInfDiagram -------------------------------------------------------------------

AInfDiagram::AInfDiagram(std::shared_ptr<const SimplicialSet> base) : base_(std::move(base)) {
  require(base_ != nullptr, Errc::invalid_argument, "null base");
  entries_.resize(static_cast<std::size_t>(base_->cap()) + 1);
  for (int n = 0; n <= base_->cap(); ++n) {
    entries_[static_cast<std::size_t>(n)].resize(base_->cell_count(n));
    for (auto& e : entries_[static_cast<std::size_t>(n)]) e.faces.resize(n >= 1 ? static_cast<std::size_t>(n) + 1 : 0);
  }
}

const AInfDiagram::Entry& AInfDiagram::entry(CellId cell) const {
  require(cell.dim >= 0 && cell.dim < static_cast<int>(entries_.size()) && cell.index >= 0 &&
              cell.index < static_cast<int>(entries_[static_cast<std::size_t>(cell.dim)].size()),
          Errc::invalid_argument, "no such base cell");
  return entries_[static_cast<std::size_t>(cell.dim)][static_cast<std::size_t>(cell.index)];
}

AInfDiagram::Entry& AInfDiagram::entry(CellId cell) {
  return const_cast<Entry&>(static_cast<const AInfDiagram&>(*this).entry(cell));
}

void AInfDiagram::set_category(CellId cell, std::shared_ptr<const AInfCategory> category, std::vector<int> tags) {
  require(category != nullptr, Errc::invalid_argument, "null category");
  Entry& e = entry(cell);
  require(tags.size() == static_cast<std::size_t>(category->object_count()), Errc::invalid_input,
          "category over " + cell_name(*base_, cell) + " needs one tag per object");
  const auto verts = cell_vertices(*base_, cell);
  std::vector<int> positions;
  for (int t : tags) {
    const auto it = std::find(verts.begin(), verts.end(), t);
    require(it != verts.end(), Errc::invalid_input, "object tag is not a vertex of " + cell_name(*base_, cell));
    positions.push_back(static_cast<int>(it - verts.begin()));
  }
  e.category = std::move(category);
  e.tags = std::move(tags);
  e.positions = std::move(positions);
  embeddings_.clear();
}

void AInfDiagram::set_face_embedding(CellId cell, int face, StrictFunctor embedding) {
  Entry& e = entry(cell);
  require(cell.dim >= 1 && face >= 0 && face <= cell.dim, Errc::invalid_argument, "face index out of range");
  e.faces[static_cast<std::size_t>(face)] = std::move(embedding);
  embeddings_.clear();
}

const std::shared_ptr<const AInfCategory>& AInfDiagram::category(CellId cell) const {
  const Entry& e = entry(cell);
  require(e.category != nullptr, Errc::invalid_input, "no category over base cell " + cell_name(*base_, cell));
  return e.category;
}

const std::vector<int>& AInfDiagram::tags(CellId cell) const {
  category(cell);
  return entry(cell).tags;
}

const std::vector<int>& AInfDiagram::positions(CellId cell) const {
  category(cell);
  return entry(cell).positions;
}

bool AInfDiagram::has_face_embedding(CellId cell, int face) const {
  const Entry& e = entry(cell);
  return face >= 0 && face < static_cast<int>(e.faces.size()) && e.faces[static_cast<std::size_t>(face)].has_value();
}

const StrictFunctor& AInfDiagram::face_embedding(CellId cell, int face) const {
  require(has_face_embedding(cell, face), Errc::invalid_input,
          "missing embedding for face " + std::to_string(face) + " of " + cell_name(*base_, cell));
  return *entry(cell).faces[static_cast<std::size_t>(face)];
}

const StrictFunctor& AInfDiagram::embedding(CellId cell, const OrdinalMap& mono) const {
  require(mono.is_mono() && mono.target_dim == cell.dim, Errc::invalid_argument,
          "embedding needs a monomorphism into the cell");
  const auto key = std::make_pair(cell, mono.values);
  if (const auto it = embeddings_.find(key); it != embeddings_.end()) return it->second;
  if (mono.is_identity()) return embeddings_.emplace(key, StrictFunctor::identity(category(cell))).first->second;
  int q = cell.dim;
  while (std::find(mono.values.begin(), mono.values.end(), q) != mono.values.end()) --q;
  std::vector<int> inner;
  for (int v : mono.values) inner.push_back(v < q ? v : v - 1);
  const CellId face_cell = base_->faces(cell)[static_cast<std::size_t>(q)].cell();
  const StrictFunctor& rest = embedding(face_cell, OrdinalMap::from_values(cell.dim - 1, inner));
  return embeddings_.emplace(key, compose(rest, face_embedding(cell, q))).first->second;
}

void AInfDiagram::validate() const {
  const SimplicialSet& x = *base_;
  for (int n = 0; n <= x.cap(); ++n) {
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      const CellId cell{n, c};
      const auto verts = cell_vertices(x, cell);
      require(std::set<int>(verts.begin(), verts.end()).size() == verts.size(), Errc::invalid_input,
              "base cell " + cell_name(x, cell) + " repeats a vertex");
      const AInfCategory& a = *category(cell);
      for (int obj = 0; obj < a.object_count(); ++obj) {
        require(a.has_unit(obj), Errc::precondition, "object '" + a.object_name(obj) + "' over " + cell_name(x, cell) + " has no unit");
      }
      const auto relations = check_ainf_relations(a, std::max(3, 2 * a.max_arity()));
      require(relations.pass, Errc::precondition, "category over " + cell_name(x, cell) + " violates the A-infinity relations");
      require(check_strict_units(a).pass, Errc::precondition, "category over " + cell_name(x, cell) + " is not strictly unital");
      for (int i = 0; i <= n && n >= 1; ++i) {
        const StrictFunctor& f = face_embedding(cell, i);
        const CellId face_cell = x.faces(cell)[static_cast<std::size_t>(i)].cell();
        const std::string where = "embedding of face " + std::to_string(i) + " into " + cell_name(x, cell);
        require(f.source_ptr() == category(face_cell) && f.target_ptr() == category(cell), Errc::invalid_input,
                where + " has the wrong source or target");
        if (const auto err = f.validation_error()) fail(Errc::precondition, where + ": " + *err);
        require(is_fully_faithful_embedding(f), Errc::precondition, where + " is not fully faithful");
        const auto& ftags = tags(face_cell);
        for (int obj = 0; obj < f.source().object_count(); ++obj) {
          require(tags(cell)[static_cast<std::size_t>(f.map_object(obj))] == ftags[static_cast<std::size_t>(obj)],
                  Errc::precondition, where + " moves object '" + f.source().object_name(obj) + "' off its vertex");
        }
      }
      if (n >= 1) {
        for (int p = 0; p <= n; ++p) {
          const auto& f = embedding(cell, OrdinalMap::from_image(n, {p}));
          std::vector<int> image = f.object_map();
          std::sort(image.begin(), image.end());
          std::vector<int> tagged;
          for (int obj = 0; obj < a.object_count(); ++obj) {
            if (positions(cell)[static_cast<std::size_t>(obj)] == p) tagged.push_back(obj);
          }
          require(image == tagged, Errc::precondition,
                  "objects of " + cell_name(x, cell) + " over vertex " + std::to_string(p) +
                      " are not exactly the image of the vertex category");
        }
      }
      for (int j = 1; j <= n && n >= 2; ++j) {
        for (int i = 0; i < j; ++i) {
          const auto& faces = x.faces(cell);
          const CellId dj = faces[static_cast<std::size_t>(j)].cell();
          const CellId di = faces[static_cast<std::size_t>(i)].cell();
          const StrictFunctor lhs = compose(face_embedding(dj, i), face_embedding(cell, j));
          const StrictFunctor rhs = compose(face_embedding(di, j - 1), face_embedding(cell, i));
          if (!functors_equal(lhs, rhs)) {
            fail(Errc::precondition, "embeddings into " + cell_name(x, cell) + " are not functorial at faces " +
                                         std::to_string(i) + " and " + std::to_string(j));
          }
        }
      }
    }
  }
}

// --- constant diagrams -------------------------------------------------------------

AInfDiagram constant_diagram(std::shared_ptr<const SimplicialSet> base, std::shared_ptr<const AInfCategory> category) {
  const AInfCategory& a = *category;
  AInfDiagram diagram(base);
  const SimplicialSet& x = *base;
  const int na = a.object_count();
  for (int n = 0; n <= x.cap(); ++n) {
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      const CellId cell{n, c};
      const auto verts = cell_vertices(x, cell);
      auto vname = [&](int p) { return x.cell_id(CellId{0, verts[static_cast<std::size_t>(p)]}); };
      auto oname = [&](int p, int obj) { return vname(p) + ":" + a.object_name(obj); };
      auto lname = [&](int p, int q, int label) { return a.label(label).name + "@" + vname(p) + "," + vname(q); };
      AInfCategory::Builder builder;
      std::vector<int> tags;
      for (int p = 0; p <= n; ++p) {
        for (int obj = 0; obj < na; ++obj) {
          builder.add_object(oname(p, obj));
          tags.push_back(verts[static_cast<std::size_t>(p)]);
        }
      }
      for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
          for (int s = 0; s < na; ++s) {
            for (int t = 0; t < na; ++t) {
              std::vector<std::string> labels;
              for (int k = 0; k < a.hom_dim(s, t); ++k) labels.push_back(lname(p, q, a.hom_offset(s, t) + k));
              if (!labels.empty()) builder.set_hom(oname(p, s), oname(q, t), labels);
            }
          }
        }
        for (int obj = 0; obj < na; ++obj) {
          if (a.has_unit(obj)) builder.set_unit(oname(p, obj), lname(p, p, a.unit_label(obj)));
        }
      }
      for (const auto& [key, value] : a.operations().sorted_entries()) {
        std::vector<int> lift(key.size() + 1, 0);
        auto rec = [&](auto&& self, std::size_t k) -> void {
          if (k == lift.size()) {
            std::vector<std::string> inputs, outputs;
            for (std::size_t j = 0; j < key.size(); ++j) inputs.push_back(lname(lift[j], lift[j + 1], key[j]));
            const int s = a.label(key.front()).source;
            const int t = a.label(key.back()).target;
            value.for_each_set_bit([&](std::size_t b) {
              outputs.push_back(lname(lift.front(), lift.back(), a.hom_offset(s, t) + static_cast<int>(b)));
            });
            builder.set_mu(std::move(inputs), std::move(outputs));
            return;
          }
          for (int p = 0; p <= n; ++p) {
            lift[k] = p;
            self(self, k + 1);
          }
        };
        rec(rec, 0);
      }
      diagram.set_category(cell, builder.build(), std::move(tags));
    }
  }
  for (int n = 1; n <= x.cap(); ++n) {
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      const CellId cell{n, c};
      const auto& target = diagram.category(cell);
      for (int i = 0; i <= n; ++i) {
        const auto& source = diagram.category(x.faces(cell)[static_cast<std::size_t>(i)].cell());
        std::vector<int> objects;
        for (int obj = 0; obj < source->object_count(); ++obj) objects.push_back(*target->find_object(source->object_name(obj)));
        StrictFunctor f(source, target, objects);
        for (int l = 0; l < source->label_count(); ++l) f.map_label(l, target->basis_vector(*target->find_label(source->label(l).name)));
        diagram.set_face_embedding(cell, i, std::move(f));
      }
    }
  }
  return diagram;
}

// --- degenerate simplices ----------------------------------------------------------

DegenerateValue extend_to_degenerate(const AInfDiagram& diagram, const SimplexRef& sigma) {
  const SimplicialSet& x = diagram.base();
  const CellId top = sigma.cell();
  DegenerateValue out{diagram.category(top), StrictFunctor::identity(diagram.category(top)), diagram.positions(top)};
  OrdinalMap eta = OrdinalMap::identity(top.dim);  // current simplex is top.eta
  auto word = sigma.degeneracy.degeneracy_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    // Embed F(vertex j of the current simplex) onto the objects at position j.
    const int top_pos = eta.values[static_cast<std::size_t>(j)];
    const StrictFunctor& vertex_emb = diagram.embedding(top, OrdinalMap::from_image(top.dim, {top_pos}));
    std::vector<int> objects;
    for (int obj : vertex_emb.object_map()) {
      int found = -1;
      for (int e = 0; e < out.category->object_count() && found < 0; ++e) {
        if (out.positions[static_cast<std::size_t>(e)] == j && out.projection.map_object(e) == obj) found = e;
      }
      require(found >= 0, Errc::internal, "vertex object missing from the extension");
      objects.push_back(found);
    }
    StrictFunctor inclusion(vertex_emb.source_ptr(), out.category, objects);
    for (int l = 0; l < vertex_emb.source().label_count(); ++l) {
      const auto& lab = vertex_emb.source().label(l);
      inclusion.map_label(l, vertex_emb.apply(lab.source, lab.target, vertex_emb.source().basis_vector(l)));
    }
    auto ext = degenerate_extension(out.category, vertex_emb.source_ptr(), inclusion, "s" + std::to_string(j));
    std::vector<int> positions;
    for (int p : out.positions) positions.push_back(p <= j ? p : p + 1);
    positions.resize(static_cast<std::size_t>(ext.category->object_count()), j + 1);
    out.projection = compose(ext.projection, out.projection);
    out.category = ext.category;
    out.positions = std::move(positions);
    eta = compose(eta, OrdinalMap::codegeneracy(eta.source_dim, j));
  }
  require(eta == sigma.degeneracy, Errc::internal, "degeneracy word does not rebuild the simplex");
  (void)x;
  return out;
}

std::optional<SimplexRef> p_sigma(const SimplicialSet& base, const SimplexRef& sigma, const std::vector<int>& positions,
                                  const NerveSimplex& f) {
  std::vector<int> t;
  for (int v : f.vertices) {
    require(v >= 0 && v < static_cast<int>(positions.size()), Errc::invalid_argument, "vertex without a position");
    t.push_back(positions[static_cast<std::size_t>(v)]);
  }
  if (!is_monotone(t)) return std::nullopt;
  return base.act(sigma, OrdinalMap::from_values(sigma.dim(), t));
}

std::optional<NerveSimplex> restrict_simplex(const StrictFunctor& embedding, const NerveSimplex& c) {
  const auto& map = embedding.object_map();
  std::vector<int> verts;
  for (int v : c.vertices) {
    const auto it = std::find(map.begin(), map.end(), v);
    if (it == map.end()) return std::nullopt;
    verts.push_back(static_cast<int>(it - map.begin()));
  }
  NerveSimplex out = NerveSimplex::blank(verts);
  std::map<std::pair<int, int>, AffineSolver> solvers;
  for (SubsetMask m : nerve_subsets(c.dim)) {
    if (!c.has(m)) continue;
    const auto e = subset_elements(m);
    const int s = verts[static_cast<std::size_t>(e.front())];
    const int t = verts[static_cast<std::size_t>(e.back())];
    auto it = solvers.find({s, t});
    if (it == solvers.end()) it = solvers.emplace(std::make_pair(s, t), AffineSolver(embedding.component(s, t))).first;
    auto x = it->second.particular(c.at(m));
    if (!x) return std::nullopt;
    out.f[m] = std::move(*x);
  }
  return out;
}

// --- GlobalComplex -----------------------------------------------------------------

namespace {

std::string cell_key(CellId sigma, const NerveSimplex& g) {
  return std::to_string(sigma.dim) + ":" + std::to_string(sigma.index) + "|" + g.key();
}

bool degenerate_at(const AInfCategory& a, const GlobalComplex::Cell& c, int i) {
  const auto& eta = c.sigma.degeneracy.values;
  if (eta[static_cast<std::size_t>(i)] != eta[static_cast<std::size_t>(i) + 1]) return false;
  const int k = c.g.dim;
  return nerve_degenerate(a, nerve_face(c.g, OrdinalMap::coface(k, i)), OrdinalMap::codegeneracy(k - 1, i)) == c.g;
}

}  // namespace

GlobalComplex GlobalComplex::build(std::shared_ptr<const AInfDiagram> diagram, int cap, std::size_t limit) {
  require(diagram != nullptr, Errc::invalid_argument, "null diagram");
  diagram->validate();
  const SimplicialSet& x = diagram->base();
  require(cap >= 0 && cap <= x.cap(), Errc::invalid_argument, "cap exceeds the truncation of the base");
  GlobalComplex out;
  out.diagram_ = diagram;
  out.sset_ = std::make_shared<SimplicialSet>(cap);
  out.cells_.resize(static_cast<std::size_t>(cap) + 1);
  out.index_.resize(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    for (const SimplexRef& sigma : x.simplices(k)) {
      const CellId top = sigma.cell();
      const AInfCategory& a = *diagram->category(top);
      const auto& pos = diagram->positions(top);
      EnumerationConstraints constraints;
      constraints.limit = limit;
      constraints.allowed_objects.resize(static_cast<std::size_t>(k) + 1);
      bool empty = false;
      for (int p = 0; p <= k; ++p) {
        for (int obj = 0; obj < a.object_count(); ++obj) {
          if (pos[static_cast<std::size_t>(obj)] == sigma.degeneracy.values[static_cast<std::size_t>(p)]) {
            constraints.allowed_objects[static_cast<std::size_t>(p)].push_back(obj);
          }
        }
        empty = empty || constraints.allowed_objects[static_cast<std::size_t>(p)].empty();
      }
      if (empty) continue;
      for_each_nerve_simplex(a, k, constraints, [&](const NerveSimplex& g) {
        Cell c{sigma, g};
        for (int i = 0; i < k; ++i) {
          if (degenerate_at(a, c, i)) return true;
        }
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= k && k > 0; ++i) faces.push_back(out.locate(out.face(c, i)));
        auto& cells = out.cells_[static_cast<std::size_t>(k)];
        const int index = static_cast<int>(cells.size());
        out.sset_->add_cell(k, std::to_string(k) + ":" + std::to_string(index), std::move(faces));
        out.index_[static_cast<std::size_t>(k)].emplace(cell_key(top, g), index);
        cells.push_back(std::move(c));
        return true;
      });
    }
  }
  out.projection_ = std::make_shared<SimplicialMap>(out.sset_, diagram->base_ptr());
  for (int k = 0; k <= cap; ++k) {
    const auto& cells = out.cells_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < cells.size(); ++i) out.projection_->assign(CellId{k, static_cast<int>(i)}, cells[i].sigma);
  }
  return out;
}

const GlobalComplex::Cell& GlobalComplex::cell(CellId id) const {
  return cells_.at(static_cast<std::size_t>(id.dim)).at(static_cast<std::size_t>(id.index));
}

GlobalComplex::Cell GlobalComplex::realize(const SimplexRef& s) const {
  const Cell& c = cell(s.cell());
  const AInfCategory& a = *diagram_->category(c.sigma.cell());
  return Cell{diagram_->base().act(c.sigma, s.degeneracy), nerve_degenerate(a, c.g, s.degeneracy)};
}

GlobalComplex::Cell GlobalComplex::face(const Cell& c, int i) const {
  const int k = c.g.dim;
  require(k >= 1 && i >= 0 && i <= k, Errc::invalid_argument, "face index out of range");
  const SimplicialSet& x = diagram_->base();
  const SimplexRef sigma = x.face(c.sigma, i);
  NerveSimplex g = nerve_face(c.g, OrdinalMap::coface(k, i));
  const CellId top = c.sigma.cell();
  if (sigma.cell() == top) return Cell{sigma, std::move(g)};
  std::vector<int> image = c.sigma.degeneracy.values;
  image.erase(image.begin() + i);
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const auto restricted = restrict_simplex(diagram_->embedding(top, OrdinalMap::from_image(top.dim, image)), g);
  require(restricted.has_value(), Errc::internal, "face does not restrict to the face category");
  return Cell{sigma, *restricted};
}

SimplexRef GlobalComplex::locate(const Cell& c) const {
  const int k = c.g.dim;
  if (k > cap()) fail(Errc::cap_exceeded, "simplex dimension exceeds the colimit cap");
  const auto& idx = index_[static_cast<std::size_t>(k)];
  if (const auto it = idx.find(cell_key(c.sigma.cell(), c.g)); it != idx.end()) return SimplexRef::nondegenerate(k, it->second);
  const AInfCategory& a = *diagram_->category(c.sigma.cell());
  for (int i = 0; i < k; ++i) {
    if (degenerate_at(a, c, i)) return sset_->degeneracy(locate(face(c, i)), i);
  }
  fail(Errc::invalid_argument, "simplex does not belong to the colimit");
}

std::optional<SimplexRef> GlobalComplex::phi(CellId sigma, const NerveSimplex& g) const {
  const auto& pos = diagram_->positions(sigma);
  std::vector<int> t;
  for (int v : g.vertices) t.push_back(pos.at(static_cast<std::size_t>(v)));
  if (!is_monotone(t)) return std::nullopt;
  const OrdinalMap map = OrdinalMap::from_values(sigma.dim, t);
  const auto [epi, mono] = epi_mono(map);
  const auto restricted = restrict_simplex(diagram_->embedding(sigma, mono), g);
  require(restricted.has_value(), Errc::internal, "simplex does not restrict to its base face");
  const SimplexRef base = diagram_->base().act(SimplexRef::nondegenerate(sigma.dim, sigma.index), map);
  return locate(Cell{base, *restricted});
}

// --- cocones -----------------------------------------------------------------------

Cocone canonical_cocone(std::shared_ptr<const GlobalComplex> l) {
  Cocone out;
  out.apex = l->sset_ptr();
  out.map = [l](CellId sigma, const NerveSimplex& g) {
    const auto image = l->phi(sigma, g);
    require(image.has_value(), Errc::invalid_argument, "simplex has decreasing vertex positions");
    return *image;
  };
  return out;
}

UniversalPropertyReport verify_universal_property(const GlobalComplex& l, const Cocone& other,
                                                  const SimplicialMap* alternative) {
  require(other.apex != nullptr && other.map != nullptr, Errc::invalid_argument, "incomplete cocone");
  UniversalPropertyReport report;
  const AInfDiagram& d = l.diagram();
  const SimplicialSet& x = d.base();
  const SimplicialSet& apex = *other.apex;
  auto failed = [&](const std::string& what) {
    report.pass = false;
    report.witness = what;
    return report;
  };
  auto describe = [&](CellId sigma, const NerveSimplex& g) {
    std::string s = "simplex over " + cell_name(x, sigma) + " with vertices";
    for (int v : g.vertices) s += " '" + d.category(sigma)->object_name(v) + "'";
    return s;
  };

  SimplicialMap u(l.sset_ptr(), other.apex);
  for (int k = 0; k <= l.cap(); ++k) {
    for (std::size_t i = 0; i < l.sset().cell_count(k); ++i) {
      const auto& c = l.cell(CellId{k, static_cast<int>(i)});
      u.assign(CellId{k, static_cast<int>(i)}, other.map(c.sigma.cell(), c.g));
    }
  }
  std::string why;
  if (!u.is_simplicial(&why)) return failed("induced map is not simplicial: " + why);

  std::set<SimplexRef> hit;
  for (int n = 0; n <= x.cap(); ++n) {
    for (int ci = 0; ci < static_cast<int>(x.cell_count(n)); ++ci) {
      const CellId sigma{n, ci};
      const AInfCategory& a = *d.category(sigma);
      const auto& pos = d.positions(sigma);
      for (int k = 0; k <= l.cap(); ++k) {
        std::optional<UniversalPropertyReport> early;
        for_each_nerve_simplex(a, k, {}, [&](const NerveSimplex& g) {
          std::vector<int> t;
          for (int v : g.vertices) t.push_back(pos[static_cast<std::size_t>(v)]);
          if (!is_monotone(t)) return true;
          ++report.simplices_checked;
          const SimplexRef target = other.map(sigma, g);
          for (int i = 0; i <= k && k > 0; ++i) {
            if (other.map(sigma, nerve_face(g, OrdinalMap::coface(k, i))) != apex.face(target, i)) {
              early = failed("cocone map is not simplicial at face " + std::to_string(i) + " of " + describe(sigma, g));
              return false;
            }
          }
          const SimplexRef via_l = *l.phi(sigma, g);
          hit.insert(via_l);
          if (u.apply(via_l) != target) {
            early = failed("U phi differs from the cocone map on " + describe(sigma, g));
            return false;
          }
          return true;
        });
        if (early) return *early;
        // Cocone condition along each face embedding.
        for (int q = 0; q <= n && n >= 1; ++q) {
          const StrictFunctor& emb = d.face_embedding(sigma, q);
          const CellId face_cell = x.faces(sigma)[static_cast<std::size_t>(q)].cell();
          const auto functor = AInfFunctor::from_strict(emb);
          const auto& fpos = d.positions(face_cell);
          for_each_nerve_simplex(emb.source(), k, {}, [&](const NerveSimplex& g) {
            std::vector<int> t;
            for (int v : g.vertices) t.push_back(fpos[static_cast<std::size_t>(v)]);
            if (!is_monotone(t)) return true;
            if (other.map(sigma, nerve_of_functor(functor, g)) != other.map(face_cell, g)) {
              early = failed("cocone does not commute with face " + std::to_string(q) + " on " + describe(face_cell, g));
              return false;
            }
            return true;
          });
          if (early) return *early;
        }
      }
    }
  }
  for (int k = 0; k <= l.cap(); ++k) {
    for (std::size_t i = 0; i < l.sset().cell_count(k); ++i) {
      const auto s = SimplexRef::nondegenerate(k, static_cast<int>(i));
      if (!hit.count(s)) return failed("cell " + l.sset().cell_id(s.cell()) + " of L is not in the image of any phi");
      if (alternative && alternative->apply(s) != u.apply(s)) {
        return failed("alternative map differs from U on cell " + l.sset().cell_id(s.cell()));
      }
    }
  }
  report.induced = std::move(u);
  return report;
}

}  // namespace ainerve
