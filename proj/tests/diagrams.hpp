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

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "ainerve/ainf.hpp"
#include "ainerve/colimit.hpp"
#include "ainerve/fibration.hpp"
#include "ainerve/homotopy.hpp"
#include "ainerve/nerve.hpp"
#include "ainerve/simplicial.hpp"

namespace ainerve::testing {

inline std::shared_ptr<const SimplicialSet> share(SimplicialSet x) {
  return std::make_shared<const SimplicialSet>(std::move(x));
}

inline StrictFunctor inclusion_by_name(std::shared_ptr<const AInfCategory> source, std::shared_ptr<const AInfCategory> target) {
  std::vector<int> objects;
  for (int obj = 0; obj < source->object_count(); ++obj) objects.push_back(*target->find_object(source->object_name(obj)));
  StrictFunctor f(source, target, objects);
  for (int l = 0; l < source->label_count(); ++l) f.map_label(l, target->basis_vector(*target->find_label(source->label(l).name)));
  return f;
}

inline int vertex_cell(const SimplicialSet& x, int v) { return x.find(std::to_string(v))->index; }

// Diagram on a base with vertices "0", "1", ... whose value on a cell is the
// full subcategory of `c` on the objects assigned to the vertices of that cell.
inline std::shared_ptr<const AInfDiagram> split_diagram(std::shared_ptr<const AInfCategory> c,
                                                        std::shared_ptr<const SimplicialSet> base,
                                                        const std::vector<int>& group) {
  auto d = std::make_shared<AInfDiagram>(base);
  for (int dim = 0; dim <= base->cap(); ++dim) {
    for (int i = 0; i < static_cast<int>(base->cell_count(dim)); ++i) {
      const CellId cell{dim, i};
      const std::string id = base->cell_id(cell);
      std::vector<int> objects, tags;
      for (int obj = 0; obj < c->object_count(); ++obj) {
        const int g = group[static_cast<std::size_t>(obj)];
        if (id.find(static_cast<char>('0' + g)) != std::string::npos) {
          objects.push_back(obj);
          tags.push_back(vertex_cell(*base, g));
        }
      }
      d->set_category(cell, full_subcategory(c, objects).first, tags);
    }
  }
  for (int dim = 1; dim <= base->cap(); ++dim) {
    for (int i = 0; i < static_cast<int>(base->cell_count(dim)); ++i) {
      const CellId cell{dim, i};
      for (int q = 0; q <= dim; ++q) {
        const CellId face = base->faces(cell)[static_cast<std::size_t>(q)].cell();
        d->set_face_embedding(cell, q, inclusion_by_name(d->category(face), d->category(cell)));
      }
    }
  }
  return d;
}

inline std::shared_ptr<const AInfDiagram> constant_on_simplex(int n, std::shared_ptr<const AInfCategory> a, int cap) {
  return std::make_shared<const AInfDiagram>(constant_diagram(share(standard_simplex(n, cap)), std::move(a)));
}

inline std::shared_ptr<const AInfDiagram> split_diagram(std::shared_ptr<const AInfCategory> c, int n,
                                                        const std::vector<int>& group, int cap) {
  return split_diagram(std::move(c), share(standard_simplex(n, cap)), group);
}

// Counts pairs (f, Sigma) with Sigma a k-simplex of the base and f a k-simplex of the nerve of the
// category attached to Sigma (degenerate Sigma via adjoined copies) whose vertices sit over 0..k in order.
inline std::size_t brute_force_count(const AInfDiagram& d, int k) {
  std::size_t total = 0;
  for (const SimplexRef& sigma : d.base().simplices(k)) {
    const DegenerateValue ext = extend_to_degenerate(d, sigma);
    EnumerationConstraints constraints;
    constraints.allowed_objects.resize(static_cast<std::size_t>(k) + 1);
    bool empty = false;
    for (int p = 0; p <= k; ++p) {
      for (int obj = 0; obj < ext.category->object_count(); ++obj) {
        if (ext.positions[static_cast<std::size_t>(obj)] == p) constraints.allowed_objects[static_cast<std::size_t>(p)].push_back(obj);
      }
      empty = empty || constraints.allowed_objects[static_cast<std::size_t>(p)].empty();
    }
    if (!empty) total += enumerate_simplices(*ext.category, k, constraints).size();
  }
  return total;
}

inline OrdinalMap face_mono(const SimplicialSet& x, CellId top, CellId face) {
  const auto tv = x.vertices(SimplexRef::nondegenerate(top.dim, top.index));
  std::vector<int> image;
  for (int v : x.vertices(SimplexRef::nondegenerate(face.dim, face.index))) {
    image.push_back(static_cast<int>(std::find(tv.begin(), tv.end(), v) - tv.begin()));
  }
  return OrdinalMap::from_image(top.dim, image);
}

inline Cocone top_cocone(const AInfDiagram& d, std::shared_ptr<const NerveComplex> nc, CellId top) {
  Cocone out;
  out.apex = nc->sset_ptr();
  out.map = [&d, nc, top](CellId sigma, const NerveSimplex& g) {
    const auto f = AInfFunctor::from_strict(d.embedding(top, face_mono(d.base(), top, sigma)));
    return nc->locate(nerve_of_functor(f, g));
  };
  return out;
}

inline Cocone point_cocone(int cap) {
  Cocone out;
  out.apex = share(standard_simplex(0, cap));
  out.map = [](CellId, const NerveSimplex& g) {
    return SimplexRef{0, OrdinalMap::from_values(0, std::vector<int>(static_cast<std::size_t>(g.dim) + 1, 0))};
  };
  return out;
}

// X and X' are isomorphic; Y and Z' have no partner over the other vertex.
inline std::shared_ptr<const AInfCategory> unmatched_category() {
  AInfCategory::Builder b;
  for (const char* name : {"X", "Y", "X'", "Z'"}) b.add_object(name);
  b.set_hom("X", "X", {"eX"});
  b.set_hom("Y", "Y", {"eY"});
  b.set_hom("X'", "X'", {"eX'"});
  b.set_hom("Z'", "Z'", {"eZ'"});
  b.set_hom("X", "X'", {"f"});
  b.set_hom("X'", "X", {"g"});
  for (const char* name : {"X", "Y", "X'", "Z'"}) b.set_unit(name, std::string("e") + name);
  b.set_mu({"f", "g"}, {"eX"});
  b.set_mu({"g", "f"}, {"eX'"});
  b.add_unit_laws();
  return b.build();
}

// Re-feeds a lifting witness: the horn is a horn and nothing over the base filler fills it.
inline bool witness_reproduces(const SimplicialMap& p, const LiftingWitness& w) {
  HornSearch hx(p.domain());
  if (!hx.is_horn(w.horn.n, w.horn.k, w.horn.faces)) return false;
  for (int f : hx.fillers(w.horn.n, w.horn.k, w.horn.faces)) {
    if (p.apply(hx.simplices(w.horn.n)[static_cast<std::size_t>(f)]) == w.base_filler) return false;
  }
  return true;
}

}  // namespace ainerve::testing
