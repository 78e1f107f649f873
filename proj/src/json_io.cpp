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

#include "ainerve/json_io.hpp"

#include <map>

#include "ainerve/error.hpp"

namespace ainerve::json {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_input, std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object(), Errc::invalid_input, std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  require(it != j.end(), Errc::invalid_input, std::string("missing field '") + key + "'");
  return *it;
}

int object_of(const AInfCategory& a, const std::string& name) {
  const auto obj = a.find_object(name);
  require(obj.has_value(), Errc::invalid_input, "unknown object '" + name + "'");
  return *obj;
}

CellId cell_of(const SimplicialSet& x, const std::string& id) {
  const auto c = x.find(id);
  require(c.has_value(), Errc::invalid_input, "unknown cell '" + id + "'");
  return *c;
}

Json from_images(const SimplicialMap& p) {
  Json images = Json::array();
  const SimplicialSet& x = p.domain();
  for (int n = 0; n <= x.cap(); ++n) {
    Json level = Json::array();
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) level.push_back(p.codomain().describe(p.image(CellId{n, c})));
    images.push_back(std::move(level));
  }
  return images;
}

void load_images(SimplicialMap& p, const Json& images) {
  const SimplicialSet& x = p.domain();
  require(images.is_array() && images.size() == static_cast<std::size_t>(x.cap()) + 1, Errc::invalid_input,
          "images need one list per dimension");
  for (int n = 0; n <= x.cap(); ++n) {
    const Json& level = images[static_cast<std::size_t>(n)];
    require(level.is_array() && level.size() == x.cell_count(n), Errc::invalid_input, "images need one entry per cell");
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      const SimplexRef image = to_simplex(p.codomain(), level[static_cast<std::size_t>(c)]);
      require(image.dim() == n, Errc::invalid_input, "image of a cell has the wrong dimension");
      p.assign(CellId{n, c}, image);
    }
  }
}

Json null_or(const std::optional<Json>& j) { return j ? *j : Json(nullptr); }

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- categories --------------------------------------------------------------------

Json from_category(const AInfCategory& a) {
  Json j;
  j["objects"] = Json::array();
  for (int obj = 0; obj < a.object_count(); ++obj) j["objects"].push_back(a.object_name(obj));
  j["homs"] = Json::array();
  for (int s = 0; s < a.object_count(); ++s) {
    for (int t = 0; t < a.object_count(); ++t) {
      if (a.hom_dim(s, t) == 0) continue;
      Json labels = Json::array();
      for (int k = 0; k < a.hom_dim(s, t); ++k) labels.push_back(a.label(a.hom_offset(s, t) + k).name);
      j["homs"].push_back(Json{{"source", a.object_name(s)}, {"target", a.object_name(t)}, {"labels", labels}});
    }
  }
  j["units"] = Json::object();
  for (int obj = 0; obj < a.object_count(); ++obj) {
    if (a.has_unit(obj)) j["units"][a.object_name(obj)] = a.label(a.unit_label(obj)).name;
  }
  j["mu"] = Json::array();
  for (const auto& [key, value] : a.operations().sorted_entries()) {
    Json inputs = Json::array();
    for (int l : key) inputs.push_back(a.label(l).name);
    const int s = a.label(key.front()).source;
    const int t = a.label(key.back()).target;
    j["mu"].push_back(Json{{"inputs", inputs}, {"output", a.label_names(s, t, value)}});
  }
  return j;
}

std::shared_ptr<const AInfCategory> to_category(const Json& j) {
  return guarded("category", [&] {
    AInfCategory::Builder b;
    for (const auto& name : field(j, "objects")) b.add_object(name.get<std::string>());
    for (const auto& h : field(j, "homs")) {
      b.set_hom(field(h, "source").get<std::string>(), field(h, "target").get<std::string>(),
                field(h, "labels").get<std::vector<std::string>>());
    }
    if (j.contains("units")) {
      for (const auto& [obj, label] : j["units"].items()) b.set_unit(obj, label.get<std::string>());
    }
    if (j.contains("mu")) {
      for (const auto& m : j["mu"]) {
        b.set_mu(field(m, "inputs").get<std::vector<std::string>>(), field(m, "output").get<std::vector<std::string>>());
      }
    }
    return b.build();
  });
}

// --- simplicial sets ---------------------------------------------------------------

Json from_sset(const SimplicialSet& x) {
  Json j;
  j["cap"] = x.cap();
  j["cells"] = Json::array();
  for (int n = 0; n <= x.cap(); ++n) {
    Json level = Json::array();
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      const CellId cell{n, c};
      Json entry{{"id", x.cell_id(cell)}};
      if (n >= 1) {
        Json faces = Json::array();
        for (const auto& f : x.faces(cell)) faces.push_back(x.describe(f));
        entry["faces"] = std::move(faces);
      }
      level.push_back(std::move(entry));
    }
    j["cells"].push_back(std::move(level));
  }
  return j;
}

SimplexRef to_simplex(const SimplicialSet& x, const Json& j) {
  return guarded("simplex", [&] {
    const auto text = j.get<std::string>();
    const auto hat = text.rfind("^[");
    if (hat == std::string::npos) {
      const CellId c = cell_of(x, text);
      return SimplexRef::nondegenerate(c.dim, c.index);
    }
    require(text.back() == ']', Errc::invalid_input, "malformed simplex '" + text + "'");
    const CellId c = cell_of(x, text.substr(0, hat));
    std::vector<int> word;
    const std::string inner = text.substr(hat + 2, text.size() - hat - 3);
    std::size_t pos = 0;
    while (pos < inner.size()) {
      std::size_t next = inner.find(',', pos);
      if (next == std::string::npos) next = inner.size();
      try {
        word.push_back(std::stoi(inner.substr(pos, next - pos)));
      } catch (const std::exception&) {
        fail(Errc::invalid_input, "malformed degeneracy word in '" + text + "'");
      }
      pos = next + 1;
    }
    require(!word.empty(), Errc::invalid_input, "empty degeneracy word in '" + text + "'");
    const OrdinalMap eta = OrdinalMap::from_degeneracy_word(c.dim + static_cast<int>(word.size()), word);
    return SimplexRef{c.index, eta};
  });
}

SimplicialSet to_sset(const Json& j) {
  return guarded("simplicial set", [&] {
    const int cap = field(j, "cap").get<int>();
    require(cap >= 0, Errc::invalid_input, "negative cap");
    const Json& cells = field(j, "cells");
    require(cells.is_array() && cells.size() <= static_cast<std::size_t>(cap) + 1, Errc::invalid_input,
            "cells need at most one list per dimension up to the cap");
    SimplicialSet x(cap);
    for (std::size_t n = 0; n < cells.size(); ++n) {
      for (const auto& entry : cells[n]) {
        const auto id = field(entry, "id").get<std::string>();
        require(id.find("^[") == std::string::npos, Errc::invalid_input, "cell id '" + id + "' contains '^['");
        std::vector<SimplexRef> faces;
        if (n >= 1) {
          for (const auto& f : field(entry, "faces")) faces.push_back(to_simplex(x, f));
        }
        x.add_cell(static_cast<int>(n), id, std::move(faces));
      }
    }
    x.validate();
    return x;
  });
}

// --- nerve simplices ---------------------------------------------------------------

Json from_nerve_simplex(const AInfCategory& a, const NerveSimplex& c) {
  Json j;
  j["vertices"] = Json::array();
  for (int v : c.vertices) j["vertices"].push_back(a.object_name(v));
  j["f"] = Json::object();
  for (SubsetMask m : nerve_subsets(c.dim)) {
    if (!c.has(m)) continue;
    const auto e = subset_elements(m);
    j["f"][subset_name(m)] = a.label_names(c.vertices[static_cast<std::size_t>(e.front())],
                                           c.vertices[static_cast<std::size_t>(e.back())], c.at(m));
  }
  return j;
}

NerveSimplex to_nerve_simplex(const AInfCategory& a, const Json& j) {
  return guarded("nerve simplex", [&] {
    std::vector<int> verts;
    for (const auto& v : field(j, "vertices")) verts.push_back(object_of(a, v.get<std::string>()));
    require(!verts.empty(), Errc::invalid_input, "a simplex needs a vertex");
    NerveSimplex c = NerveSimplex::blank(verts);
    if (j.contains("f")) {
      for (const auto& [name, value] : j["f"].items()) {
        const SubsetMask m = parse_subset_name(name);
        require((m & ~c.full()) == 0 && std::popcount(m) >= 2, Errc::invalid_input, "subset '" + name + "' out of range");
        const auto e = subset_elements(m);
        c.set(m, a.parse_element(verts[static_cast<std::size_t>(e.front())], verts[static_cast<std::size_t>(e.back())],
                                 value.get<std::vector<std::string>>()));
      }
    }
    return c;
  });
}

// --- functors and diagrams ---------------------------------------------------------

Json from_functor(const StrictFunctor& f) {
  Json j;
  j["objects"] = Json::array();
  for (int obj = 0; obj < f.source().object_count(); ++obj) j["objects"].push_back(f.target().object_name(f.map_object(obj)));
  j["labels"] = Json::object();
  for (int l = 0; l < f.source().label_count(); ++l) {
    const auto& lab = f.source().label(l);
    const int s = f.map_object(lab.source);
    const int t = f.map_object(lab.target);
    j["labels"][lab.name] = f.target().label_names(s, t, f.apply(lab.source, lab.target, f.source().basis_vector(l)));
  }
  return j;
}

StrictFunctor to_functor(std::shared_ptr<const AInfCategory> source, std::shared_ptr<const AInfCategory> target,
                         const Json& j) {
  return guarded("functor", [&] {
    const Json& objs = field(j, "objects");
    require(objs.is_array() && objs.size() == static_cast<std::size_t>(source->object_count()), Errc::invalid_input,
            "functor needs one target object per source object");
    std::vector<int> map;
    for (const auto& o : objs) map.push_back(object_of(*target, o.get<std::string>()));
    StrictFunctor f(source, target, map);
    const Json& labels = field(j, "labels");
    for (int l = 0; l < source->label_count(); ++l) {
      const auto& lab = source->label(l);
      require(labels.contains(lab.name), Errc::invalid_input, "functor misses label '" + lab.name + "'");
      f.map_label(l, target->parse_element(map[static_cast<std::size_t>(lab.source)], map[static_cast<std::size_t>(lab.target)],
                                           labels[lab.name].get<std::vector<std::string>>()));
    }
    return f;
  });
}

Json from_diagram(const AInfDiagram& d) {
  const SimplicialSet& x = d.base();
  Json j;
  j["base"] = from_sset(x);
  j["categories"] = Json::object();
  j["cells"] = Json::array();
  std::map<const AInfCategory*, std::string> names;
  for (int n = 0; n <= x.cap(); ++n) {
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      const CellId cell{n, c};
      const auto& cat = d.category(cell);
      auto it = names.find(cat.get());
      if (it == names.end()) {
        it = names.emplace(cat.get(), x.cell_id(cell)).first;
        j["categories"][it->second] = from_category(*cat);
      }
      Json tags = Json::array();
      for (int t : d.tags(cell)) tags.push_back(x.cell_id(CellId{0, t}));
      j["cells"].push_back(Json{{"cell", x.cell_id(cell)}, {"category", it->second}, {"tags", tags}});
    }
  }
  j["embeddings"] = Json::array();
  for (int n = 1; n <= x.cap(); ++n) {
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      for (int i = 0; i <= n; ++i) {
        const CellId cell{n, c};
        if (!d.has_face_embedding(cell, i)) continue;
        j["embeddings"].push_back(Json{{"cell", x.cell_id(cell)}, {"face", i}, {"functor", from_functor(d.face_embedding(cell, i))}});
      }
    }
  }
  return j;
}

std::shared_ptr<AInfDiagram> to_diagram(const Json& j) {
  return guarded("diagram", [&] {
    auto base = std::make_shared<const SimplicialSet>(to_sset(field(j, "base")));
    std::map<std::string, std::shared_ptr<const AInfCategory>> cats;
    for (const auto& [name, cat] : field(j, "categories").items()) cats.emplace(name, to_category(cat));
    auto d = std::make_shared<AInfDiagram>(base);
    for (const auto& entry : field(j, "cells")) {
      const CellId cell = cell_of(*base, field(entry, "cell").get<std::string>());
      const auto name = field(entry, "category").get<std::string>();
      const auto it = cats.find(name);
      require(it != cats.end(), Errc::invalid_input, "unknown category '" + name + "'");
      std::vector<int> tags;
      for (const auto& t : field(entry, "tags")) {
        const CellId v = cell_of(*base, t.get<std::string>());
        require(v.dim == 0, Errc::invalid_input, "tag '" + t.get<std::string>() + "' is not a vertex");
        tags.push_back(v.index);
      }
      d->set_category(cell, it->second, std::move(tags));
    }
    for (const auto& entry : field(j, "embeddings")) {
      const CellId cell = cell_of(*base, field(entry, "cell").get<std::string>());
      const int face = field(entry, "face").get<int>();
      require(cell.dim >= 1 && face >= 0 && face <= cell.dim, Errc::invalid_input, "face index out of range");
      const CellId source = base->faces(cell)[static_cast<std::size_t>(face)].cell();
      d->set_face_embedding(cell, face, to_functor(d->category(source), d->category(cell), field(entry, "functor")));
    }
    return d;
  });
}

// --- maps and colimits -------------------------------------------------------------

Json from_map(const SimplicialMap& p) {
  Json j;
  j["domain"] = from_sset(p.domain());
  j["codomain"] = from_sset(p.codomain());
  j["images"] = from_images(p);
  return j;
}

SimplicialMap to_map(const Json& j) {
  return guarded("map", [&] {
    auto domain = std::make_shared<const SimplicialSet>(to_sset(field(j, "domain")));
    auto codomain = std::make_shared<const SimplicialSet>(to_sset(field(j, "codomain")));
    SimplicialMap p(domain, codomain);
    load_images(p, field(j, "images"));
    return p;
  });
}

Json from_colimit(const GlobalComplex& l) {
  Json j;
  j["kind"] = "colimit";
  j["cap"] = l.cap();
  j["diagram"] = from_diagram(l.diagram());
  j["complex"] = from_sset(l.sset());
  j["projection"] = from_images(l.projection());
  j["cells"] = Json::array();
  for (int k = 0; k <= l.cap(); ++k) {
    Json level = Json::array();
    for (int c = 0; c < static_cast<int>(l.sset().cell_count(k)); ++c) {
      const auto& cell = l.cell(CellId{k, c});
      level.push_back(Json{{"over", l.diagram().base().describe(cell.sigma)},
                           {"simplex", from_nerve_simplex(*l.diagram().category(cell.sigma.cell()), cell.g)}});
    }
    j["cells"].push_back(std::move(level));
  }
  return j;
}

GlobalComplex to_colimit(const Json& j) {
  return guarded("colimit", [&] {
    require(field(j, "kind") == "colimit", Errc::invalid_input, "not a colimit file");
    std::shared_ptr<const AInfDiagram> d = to_diagram(field(j, "diagram"));
    GlobalComplex l = GlobalComplex::build(d, field(j, "cap").get<int>());
    require(from_colimit(l) == j, Errc::invalid_input, "stored complex does not match its diagram");
    return l;
  });
}

// --- horns and reports -------------------------------------------------------------

Json from_horn(const SimplicialSet& x, const HornWitness& w) {
  Json faces = Json::array();
  for (int i = 0; i <= w.n; ++i) {
    if (i == w.k) faces.push_back(nullptr);
    else faces.push_back(x.describe(w.faces[static_cast<std::size_t>(i)]));
  }
  return Json{{"n", w.n}, {"k", w.k}, {"faces", faces}};
}

HornWitness to_horn(const SimplicialSet& x, const Json& j) {
  return guarded("horn", [&] {
    HornWitness w;
    w.n = field(j, "n").get<int>();
    w.k = field(j, "k").get<int>();
    const Json& faces = field(j, "faces");
    require(w.n >= 1 && w.k >= 0 && w.k <= w.n && faces.is_array() && faces.size() == static_cast<std::size_t>(w.n) + 1,
            Errc::invalid_input, "horn does not match its dimension");
    for (int i = 0; i <= w.n; ++i) {
      w.faces.push_back(i == w.k ? SimplexRef{-1, OrdinalMap{}} : to_simplex(x, faces[static_cast<std::size_t>(i)]));
    }
    return w;
  });
}

Json from_relation_report(const RelationReport& r) {
  std::optional<Json> witness;
  if (r.witness) {
    witness = Json{{"arity", r.witness->arity}, {"inputs", r.witness->inputs}, {"residual", r.witness->residual_text}};
  }
  return Json{{"pass", r.pass}, {"dmax", r.dmax}, {"tuples_checked", r.tuples_checked}, {"witness", null_or(witness)}};
}

Json from_unit_report(const UnitReport& r) {
  std::optional<Json> witness;
  if (r.witness) witness = Json{{"kind", r.witness->kind}, {"arity", r.witness->arity}, {"inputs", r.witness->inputs}};
  return Json{{"pass", r.pass}, {"witness", null_or(witness)}};
}

Json from_horn_report(const SimplicialSet& x, const HornReport& r) {
  std::optional<Json> witness;
  if (r.witness) witness = from_horn(x, *r.witness);
  return Json{{"check", r.check}, {"cap", r.cap}, {"pass", r.pass}, {"horns_checked", r.horns_checked},
              {"witness", null_or(witness)}};
}

Json from_tau(const HoCategory& h) {
  const SimplicialSet& x = h.sset();
  Json j;
  j["objects"] = Json::array();
  for (int v = 0; v < h.object_count(); ++v) j["objects"].push_back(x.cell_id(CellId{0, v}));
  j["classes"] = Json::array();
  for (int c = 0; c < static_cast<int>(h.class_count()); ++c) {
    const auto& ec = h.edge_class(c);
    j["classes"].push_back(Json{{"source", x.cell_id(CellId{0, ec.source})},
                                {"target", x.cell_id(CellId{0, ec.target})},
                                {"representative", x.describe(ec.members.front())},
                                {"members", ec.members.size()},
                                {"identity", h.identity(ec.source) == c},
                                {"isomorphism", h.is_isomorphism(c)}});
  }
  j["compose"] = Json::array();
  for (int s = 0; s < h.object_count(); ++s) {
    for (int t = 0; t < h.object_count(); ++t) {
      for (int u = 0; u < h.object_count(); ++u) {
        for (int a : h.hom(s, t)) {
          for (int b : h.hom(t, u)) j["compose"].push_back(Json::array({a, b, h.compose(a, b)}));
        }
      }
    }
  }
  return j;
}

Json from_tau0(const HoCategory& h, const std::vector<std::vector<int>>& groups) {
  Json j;
  j["classes"] = Json::array();
  for (const auto& g : groups) {
    Json ids = Json::array();
    for (int v : g) ids.push_back(h.sset().cell_id(CellId{0, v}));
    j["classes"].push_back(std::move(ids));
  }
  return j;
}

Json from_fibration_report(const SimplicialMap& p, const FibrationReport& r) {
  const SimplicialSet& x = p.domain();
  const SimplicialSet& b = p.codomain();
  auto counts = [](const SimplicialSet& s) {
    Json c = Json::array();
    for (int n = 0; n <= s.cap(); ++n) c.push_back(s.cell_count(n));
    return c;
  };
  auto lifting = [&](const std::optional<LiftingWitness>& w) -> Json {
    if (!w) return nullptr;
    return Json{{"horn", from_horn(x, w->horn)}, {"base_filler", b.describe(w->base_filler)}};
  };
  auto failure = [&](const std::optional<LiftFailure>& f) -> Json {
    if (!f) return nullptr;
    return Json{{"base_edge", b.describe(f->base_edge)},
                {"vertex", x.cell_id(CellId{0, f->vertex})},
                {"lifts", f->lifts},
                {"first_lift_horn", lifting(f->first_lift_horn)}};
  };
  Json preimage_witness = nullptr;
  if (r.preimage_witness_simplex && r.preimage_witness_horn) {
    const Preimage pre = Preimage::build(p, *r.preimage_witness_simplex, r.cap);
    preimage_witness = Json{{"base_simplex", b.describe(*r.preimage_witness_simplex)},
                            {"horn", from_horn(pre.sset(), *r.preimage_witness_horn)}};
  }
  Json j;
  j["direction"] = to_string(r.direction);
  j["cap"] = r.cap;
  j["map"] = Json{{"domain_cells", counts(x)}, {"codomain_cells", counts(b)}};
  j["inner_fibration"] = Json{
      {"checked", r.inner_checked},
      {"pass", r.inner_pass()},
      {"horn_lifting", Json{{"pass", r.inner_horn_pass}, {"horns_checked", r.inner_horns_checked}, {"witness", lifting(r.inner_horn_witness)}}},
      {"preimages", Json{{"pass", r.preimage_pass}, {"checked", r.preimages_checked}, {"witness", preimage_witness}}},
      {"characterizations_agree", r.characterizations_agree()}};
  j["cocartesian"] = Json{{"checked", r.cocartesian_checked},
                          {"pass", r.cocartesian_pass},
                          {"horns_checked", r.cocartesian_horns_checked},
                          {"lift_problems", r.lift_problems},
                          {"cocartesian_edges", r.cocartesian_edges},
                          {"witness", failure(r.cocartesian_witness)}};
  j["equivalence_lifts"] = Json{{"checked", r.equivalence_checked}, {"pass", r.equivalence_pass}, {"witness", failure(r.equivalence_witness)}};
  j["pass"] = r.pass() && r.cocartesian_checked;
  return j;
}

}  // namespace ainerve::json
