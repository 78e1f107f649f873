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

#include "ainerve/fibration.hpp"

#include <algorithm>
#include <unordered_map>

#include "ainerve/error.hpp"

namespace ainerve {

std::string to_string(Direction d) { return d == Direction::co ? "co" : "contra"; }

Direction parse_direction(std::string_view text) {
  if (text == "co") return Direction::co;
  if (text == "contra") return Direction::contra;
  fail(Errc::invalid_argument, "direction must be co or contra");
}

// --- Preimage ----------------------------------------------------------------------

Preimage Preimage::build(const SimplicialMap& p, const SimplexRef& sigma, int cap) {
  const SimplicialSet& x = p.domain();
  const SimplicialSet& b = p.codomain();
  require(cap >= 0 && cap <= x.cap(), Errc::invalid_argument, "cap exceeds the truncation of the domain");
  require(sigma.dim() <= b.cap(), Errc::invalid_argument, "base simplex above the base truncation");
  Preimage out;
  out.x_ = &x;
  out.sigma_ = sigma;
  out.sset_ = std::make_shared<SimplicialSet>(cap);
  out.index_.resize(static_cast<std::size_t>(cap) + 1);
  const int n = sigma.dim();
  for (int k = 0; k <= cap; ++k) {
    const auto alphas = monotone_maps(k, n);
    std::vector<SimplexRef> targets;
    for (const auto& alpha : alphas) targets.push_back(b.act(sigma, alpha));
    for (const SimplexRef& s : x.simplices(k)) {
      const SimplexRef image = p.apply(s);
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        if (targets[a] != image) continue;
        const auto& alpha = alphas[a];
        bool degenerate = false;
        for (int i = 0; i < k && !degenerate; ++i) {
          degenerate = s.degeneracy.values[static_cast<std::size_t>(i)] == s.degeneracy.values[static_cast<std::size_t>(i) + 1] &&
                       alpha.values[static_cast<std::size_t>(i)] == alpha.values[static_cast<std::size_t>(i) + 1];
        }
        if (degenerate) continue;
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= k && k > 0; ++i) {
          faces.push_back(*out.locate(x.face(s, i), compose(alpha, OrdinalMap::coface(k, i))));
        }
        std::string id = x.describe(s) + "|";
        for (int v : alpha.values) id += std::to_string(v);
        const int index = out.sset_->add_cell(k, id, std::move(faces));
        out.index_[static_cast<std::size_t>(k)].emplace(std::make_pair(s, alpha.values), index);
      }
    }
  }
  return out;
}

std::optional<SimplexRef> Preimage::locate(const SimplexRef& s, const OrdinalMap& alpha) const {
  const int k = s.dim();
  require(alpha.source_dim == k && alpha.target_dim == sigma_.dim(), Errc::invalid_argument, "pair of mismatched dimensions");
  if (k > sset_->cap()) fail(Errc::cap_exceeded, "simplex dimension exceeds the preimage cap");
  const auto& idx = index_[static_cast<std::size_t>(k)];
  if (const auto it = idx.find(std::make_pair(s, alpha.values)); it != idx.end()) return SimplexRef::nondegenerate(k, it->second);
  for (int i = 0; i < k; ++i) {
    if (s.degeneracy.values[static_cast<std::size_t>(i)] == s.degeneracy.values[static_cast<std::size_t>(i) + 1] &&
        alpha.values[static_cast<std::size_t>(i)] == alpha.values[static_cast<std::size_t>(i) + 1]) {
      const auto face = locate(x_->face(s, i), compose(alpha, OrdinalMap::coface(k, i)));
      if (!face) return std::nullopt;
      return sset_->degeneracy(*face, i);
    }
  }
  return std::nullopt;
}

// --- relative horn lifting ---------------------------------------------------------

namespace {

class Lifter {
 public:
  explicit Lifter(const SimplicialMap& p) : p_(p), hx_(p.domain()), hb_(p.codomain()) {}

  HornSearch& domain() { return hx_; }

  const std::vector<SimplexRef>& images(int n) {
    auto& v = images_[n];
    if (v.empty()) {
      for (const auto& s : hx_.simplices(n)) v.push_back(p_.apply(s));
    }
    return v;
  }

  /// Every base filler of p(horn) is the image of a filler of the horn.
  bool lifts(int n, int k, const std::vector<SimplexRef>& faces, LiftingWitness* witness) {
    std::vector<SimplexRef> base_faces(faces.size(), SimplexRef{-1, {}});
    for (int i = 0; i <= n; ++i) {
      if (i != k) base_faces[static_cast<std::size_t>(i)] = p_.apply(faces[static_cast<std::size_t>(i)]);
    }
    const std::vector<int> base_fillers = hb_.fillers(n, k, base_faces);
    const std::vector<int> fillers = hx_.fillers(n, k, faces);
    const auto& img = images(n);
    for (int bf : base_fillers) {
      const SimplexRef& target = hb_.simplices(n)[static_cast<std::size_t>(bf)];
      const bool found = std::any_of(fillers.begin(), fillers.end(),
                                     [&](int f) { return img[static_cast<std::size_t>(f)] == target; });
      if (!found) {
        if (witness) *witness = LiftingWitness{HornWitness{n, k, faces}, target};
        return false;
      }
    }
    return true;
  }

 private:
  const SimplicialMap& p_;
  HornSearch hx_;
  HornSearch hb_;
  std::map<int, std::vector<SimplexRef>> images_;
};

void check_map(const SimplicialMap& p, int cap) {
  std::string why;
  require(p.is_simplicial(&why), Errc::invalid_input, "map is not simplicial: " + why);
  require(cap >= 0 && cap <= p.domain().cap() && cap <= p.codomain().cap(), Errc::invalid_argument,
          "cap exceeds the truncation of the map");
}

// Edge {0,1} (co) or {n-1,n} (contra) of a horn Lambda^n_0 / Lambda^n_n.
SimplexRef distinguished_edge(const SimplicialSet& x, int n, const std::vector<SimplexRef>& faces, Direction d) {
  if (d == Direction::co) return x.act(faces[static_cast<std::size_t>(n)], OrdinalMap::from_image(n - 1, {0, 1}));
  return x.act(faces[0], OrdinalMap::from_image(n - 1, {n - 2, n - 1}));
}

// Domain edges that fail some outer lifting problem, with the first failure.
std::map<SimplexRef, LiftingWitness> failing_edges(Lifter& lifter, const SimplicialSet& x, int cap, Direction d,
                                                   std::size_t* horns, const std::optional<SimplexRef>& only = {}) {
  std::map<SimplexRef, LiftingWitness> bad;
  for (int n = 2; n <= cap; ++n) {
    const int k = d == Direction::co ? 0 : n;
    lifter.domain().for_each_horn(n, k, [&](const std::vector<SimplexRef>& faces) {
      const SimplexRef e = distinguished_edge(x, n, faces, d);
      if ((only && e != *only) || bad.count(e)) return true;
      if (horns) ++*horns;
      LiftingWitness w;
      if (!lifter.lifts(n, k, faces, &w)) {
        bad.emplace(e, std::move(w));
        if (only) return false;
      }
      return true;
    });
    if (only && bad.count(*only)) break;
  }
  return bad;
}

}  // namespace

FibrationReport is_inner_fibration(const SimplicialMap& p, int cap) {
  check_map(p, cap);
  FibrationReport report;
  report.cap = cap;
  report.inner_checked = true;
  Lifter lifter(p);
  for (int n = 2; n <= cap && report.inner_horn_pass; ++n) {
    for (int k = 1; k < n && report.inner_horn_pass; ++k) {
      lifter.domain().for_each_horn(n, k, [&](const std::vector<SimplexRef>& faces) {
        ++report.inner_horns_checked;
        LiftingWitness w;
        if (lifter.lifts(n, k, faces, &w)) return true;
        report.inner_horn_pass = false;
        report.inner_horn_witness = std::move(w);
        return false;
      });
    }
  }
  const SimplicialSet& b = p.codomain();
  for (int n = 0; n <= b.cap() && report.preimage_pass; ++n) {
    for (int c = 0; c < static_cast<int>(b.cell_count(n)); ++c) {
      const SimplexRef sigma = SimplexRef::nondegenerate(n, c);
      const Preimage pre = Preimage::build(p, sigma, cap);
      ++report.preimages_checked;
      HornWitness w;
      if (!is_quasi_category(pre.sset(), cap, &w)) {
        report.preimage_pass = false;
        report.preimage_witness_simplex = sigma;
        report.preimage_witness_horn = std::move(w);
        break;
      }
    }
  }
  return report;
}

bool is_cocartesian_edge(const SimplicialMap& p, const SimplexRef& e, int cap, Direction direction,
                         LiftingWitness* witness) {
  check_map(p, cap);
  require(e.dim() == 1, Errc::invalid_argument, "not an edge");
  Lifter lifter(p);
  auto bad = failing_edges(lifter, p.domain(), cap, direction, nullptr, e);
  if (bad.empty()) return true;
  if (witness) *witness = bad.begin()->second;
  return false;
}

FibrationReport has_cocartesian_lifts(const SimplicialMap& p, int cap, Direction direction,
                                      const EquivalenceTest& equivalence) {
  check_map(p, cap);
  require(cap >= 2, Errc::invalid_argument, "co-Cartesian lifts need cap >= 2");
  FibrationReport report;
  report.direction = direction;
  report.cap = cap;
  report.cocartesian_checked = true;
  report.equivalence_checked = static_cast<bool>(equivalence);
  const SimplicialSet& x = p.domain();
  const SimplicialSet& b = p.codomain();
  Lifter lifter(p);
  const auto bad = failing_edges(lifter, x, cap, direction, &report.cocartesian_horns_checked);
  const auto& edges = lifter.domain().simplices(1);
  const auto& edge_images = lifter.images(1);
  report.cocartesian_edges = edges.size() - bad.size();
  const int end = direction == Direction::co ? 1 : 0;  // face that gives the fixed end
  for (const SimplexRef& m : b.simplices(1)) {
    const SimplexRef base_vertex = b.face(m, end);
    for (int a = 0; a < static_cast<int>(x.cell_count(0)); ++a) {
      if (p.apply(SimplexRef::nondegenerate(0, a)) != base_vertex) continue;
      ++report.lift_problems;
      std::vector<SimplexRef> lifts;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edge_images[i] == m && x.face(edges[i], end).base == a) lifts.push_back(edges[i]);
      }
      const bool cocartesian = std::any_of(lifts.begin(), lifts.end(), [&](const SimplexRef& e) { return !bad.count(e); });
      if (!cocartesian && report.cocartesian_pass) {
        report.cocartesian_pass = false;
        LiftFailure f{m, a, lifts.size(), std::nullopt};
        if (!lifts.empty()) f.first_lift_horn = bad.at(lifts.front());
        report.cocartesian_witness = std::move(f);
      }
      if (!equivalence) continue;
      if (!std::any_of(lifts.begin(), lifts.end(), equivalence) && report.equivalence_pass) {
        report.equivalence_pass = false;
        report.equivalence_witness = LiftFailure{m, a, lifts.size(), std::nullopt};
      }
    }
  }
  return report;
}

FibrationReport check_fibration(const SimplicialMap& p, int cap, Direction direction, const EquivalenceTest& equivalence) {
  FibrationReport report = is_inner_fibration(p, cap);
  report.direction = direction;
  if (!report.inner_pass() || cap < 2) return report;
  const FibrationReport lifts = has_cocartesian_lifts(p, cap, direction, equivalence);
  report.cocartesian_checked = true;
  report.equivalence_checked = lifts.equivalence_checked;
  report.cocartesian_pass = lifts.cocartesian_pass;
  report.equivalence_pass = lifts.equivalence_pass;
  report.cocartesian_horns_checked = lifts.cocartesian_horns_checked;
  report.lift_problems = lifts.lift_problems;
  report.cocartesian_edges = lifts.cocartesian_edges;
  report.cocartesian_witness = lifts.cocartesian_witness;
  report.equivalence_witness = lifts.equivalence_witness;
  return report;
}

EquivalenceTest colimit_equivalence_test(std::shared_ptr<const GlobalComplex> l) {
  auto cache = std::make_shared<std::map<CellId, CohomologyCategory>>();
  return [l, cache](const SimplexRef& edge) {
    require(edge.dim() == 1, Errc::invalid_argument, "not an edge");
    const GlobalComplex::Cell c = l->realize(edge);
    const CellId sigma = c.sigma.cell();
    auto it = cache->find(sigma);
    if (it == cache->end()) it = cache->emplace(sigma, CohomologyCategory(l->diagram().category(sigma))).first;
    const int s = c.g.vertices[0];
    const int t = c.g.vertices[1];
    return it->second.is_isomorphism(s, t, it->second.classify(s, t, c.g.at(0b11)));
  };
}

FibrationReport check_fibration(std::shared_ptr<const GlobalComplex> l, int cap, Direction direction) {
  return check_fibration(l->projection(), cap, direction, colimit_equivalence_test(l));
}

}  // namespace ainerve
