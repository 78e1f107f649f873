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

#include "ainerve/nerve.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include <boost/container/small_vector.hpp>

#include "ainerve/error.hpp"

namespace ainerve {

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxNerveDim) {
    fail(Errc::invalid_argument, "nerve dimension must lie in [0, " + std::to_string(kMaxNerveDim) + "]");
  }
}

SubsetMask bit(int i) { return SubsetMask{1} << i; }

using Elems = boost::container::small_vector<int, kMaxNerveDim + 1>;

Elems elements_of(SubsetMask mask) {
  Elems out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Mask of the elements of `elems` at positions first..last.
SubsetMask block_mask(std::span<const int> elems, int first, int last) {
  SubsetMask m = 0;
  for (int p = first; p <= last; ++p) m |= bit(elems[static_cast<std::size_t>(p)]);
  return m;
}

// Calls f(objects, masks) for the decompositions of the subset `elems`
// selected by interior cut bit patterns in [lo, hi).
template <typename F>
void for_each_decomposition(const NerveSimplex& c, std::span<const int> elems, std::uint32_t lo, std::uint32_t hi,
                            F&& f) {
  const int m = static_cast<int>(elems.size()) - 1;
  boost::container::small_vector<int, kMaxNerveDim + 1> objs;
  boost::container::small_vector<SubsetMask, kMaxNerveDim> masks;
  for (std::uint32_t cuts = lo; cuts < hi; ++cuts) {
    objs.assign(1, c.vertices[static_cast<std::size_t>(elems.front())]);
    masks.clear();
    int start = 0;
    for (int p = 1; p <= m; ++p) {
      if (p == m || ((cuts >> (p - 1)) & 1U)) {
        masks.push_back(block_mask(elems, start, p));
        objs.push_back(c.vertices[static_cast<std::size_t>(elems[static_cast<std::size_t>(p)])]);
        start = p;
      }
    }
    f(std::span<const int>(objs.data(), objs.size()), std::span<const SubsetMask>(masks.data(), masks.size()));
  }
}

[[noreturn]] [[gnu::noinline]] void missing_value(SubsetMask mask) {
  fail(Errc::invalid_argument, "nerve simplex has no value at {" + subset_name(mask) + "}");
}

inline const Gf2Vector& need(const NerveSimplex& c, SubsetMask mask) {
  if (!c.has(mask)) [[unlikely]] missing_value(mask);
  return *c.f[mask];
}

}  // namespace

std::vector<int> subset_elements(SubsetMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

SubsetMask subset_mask(const std::vector<int>& elements) {
  SubsetMask m = 0;
  for (int e : elements) {
    require(e >= 0 && e <= kMaxNerveDim, Errc::invalid_argument, "subset element out of range");
    m |= bit(e);
  }
  return m;
}

std::string subset_name(SubsetMask mask) {
  std::string out;
  for (int e : subset_elements(mask)) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

SubsetMask parse_subset_name(const std::string& name) {
  SubsetMask m = 0;
  int prev = -1;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const auto comma = std::min(name.find(',', pos), name.size());
    const std::string part = name.substr(pos, comma - pos);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        part.size() > 2) {
      fail(Errc::invalid_input, "malformed subset '" + name + "'");
    }
    const int e = std::stoi(part);
    if (e <= prev || e > kMaxNerveDim) fail(Errc::invalid_input, "subset '" + name + "' is not strictly increasing");
    m |= bit(e);
    prev = e;
    pos = comma + 1;
  }
  return m;
}

const std::vector<SubsetMask>& nerve_subsets(int n) {
  check_dim(n);
  static const auto table = [] {
    std::array<std::vector<SubsetMask>, kMaxNerveDim + 1> out;
    for (int d = 0; d <= kMaxNerveDim; ++d) {
      auto& v = out[static_cast<std::size_t>(d)];
      for (SubsetMask m = 1; m < bit(d + 1); ++m) {
        if (std::popcount(m) >= 2) v.push_back(m);
      }
      std::stable_sort(v.begin(), v.end(), [](SubsetMask x, SubsetMask y) { return std::popcount(x) < std::popcount(y); });
    }
    return out;
  }();
  return table[static_cast<std::size_t>(n)];
}

std::vector<std::pair<int, int>> WedgeDecomposition::blocks() const {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int c : cuts) {
    out.emplace_back(start, c);
    start = c;
  }
  out.emplace_back(start, n);
  return out;
}

std::vector<WedgeDecomposition> wedge_decompositions(int n) {
  require(n >= 1, Errc::invalid_argument, "wedge decompositions need n >= 1");
  check_dim(n);
  std::vector<WedgeDecomposition> out;
  for (std::uint32_t cuts = 1; cuts < (std::uint32_t{1} << (n - 1)); ++cuts) {
    WedgeDecomposition w{n, {}};
    for (int p = 1; p < n; ++p) {
      if ((cuts >> (p - 1)) & 1U) w.cuts.push_back(p);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// --- NerveSimplex ------------------------------------------------------------------

NerveSimplex NerveSimplex::blank(std::vector<int> vertices) {
  require(!vertices.empty(), Errc::invalid_argument, "a simplex needs at least one vertex");
  const int n = static_cast<int>(vertices.size()) - 1;
  check_dim(n);
  NerveSimplex c;
  c.dim = n;
  c.vertices = std::move(vertices);
  c.f.resize(static_cast<std::size_t>(bit(n + 1)));
  return c;
}

const Gf2Vector& NerveSimplex::at(SubsetMask mask) const { return need(*this, mask); }

void NerveSimplex::set(SubsetMask mask, Gf2Vector value) {
  require(mask < f.size() && std::popcount(mask) >= 2, Errc::invalid_argument, "subset outside the simplex");
  f[mask] = std::move(value);
}

std::string NerveSimplex::key() const {
  std::string out;
  auto put = [&](std::uint64_t v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(static_cast<std::uint64_t>(dim));
  for (int v : vertices) put(static_cast<std::uint64_t>(v));
  for (std::size_t m = 0; m < f.size(); ++m) {
    if (!f[m]) {
      out.push_back('\0');
      continue;
    }
    out.push_back('\1');
    for (auto w : f[m]->words()) put(w);
  }
  return out;
}

// --- equations ---------------------------------------------------------------------

Gf2Vector simplex_rhs(const AInfCategory& a, const NerveSimplex& c, SubsetMask mask) {
  require((mask & (mask - 1)) != 0 && mask < c.f.size(), Errc::invalid_argument, "equation needs a subset of size >= 2");
  // elems lists the subset; upto[p] is the mask of its first p elements.
  std::array<int, kMaxNerveDim + 1> elems{};
  std::array<SubsetMask, kMaxNerveDim + 2> upto{};
  int count = 0;
  for (SubsetMask r = mask; r != 0; r &= r - 1, ++count) {
    elems[static_cast<std::size_t>(count)] = std::countr_zero(r);
    upto[static_cast<std::size_t>(count) + 1] = upto[static_cast<std::size_t>(count)] | (r & ~(r - 1));
  }
  const int m = count - 1;
  auto vertex = [&](int p) { return c.vertices[static_cast<std::size_t>(elems[static_cast<std::size_t>(p)])]; };
  Gf2Vector out = a.zero(vertex(0), vertex(m));
  for (int i = 1; i < m; ++i) out += need(c, mask & ~bit(elems[static_cast<std::size_t>(i)]));
  const int max_s = a.max_arity();
  std::array<int, kMaxNerveDim + 1> objs{};
  std::array<const Gf2Vector*, kMaxNerveDim> args{};
  // mu is multilinear, so decompositions with a zero block contribute nothing.
  for (std::uint32_t cuts = 1; m >= 2 && cuts < (std::uint32_t{1} << (m - 1)); ++cuts) {
    if (max_s < m && std::popcount(cuts) + 1 > max_s) continue;
    objs[0] = vertex(0);
    std::size_t blocks = 0;
    bool zero = false;
    int start = 0;
    for (int p = 1; p <= m && !zero; ++p) {
      if (p < m && ((cuts >> (p - 1)) & 1U) == 0) continue;
      const Gf2Vector& v = need(c, upto[static_cast<std::size_t>(p) + 1] & ~upto[static_cast<std::size_t>(start)]);
      zero = v.is_zero();
      args[blocks++] = &v;
      objs[blocks] = vertex(p);
      start = p;
    }
    if (zero) continue;
    out += a.mu(std::span<const int>(objs.data(), blocks + 1), std::span<const Gf2Vector* const>(args.data(), blocks));
  }
  return out;
}

Gf2Vector simplex_residual(const AInfCategory& a, const NerveSimplex& c, SubsetMask mask) {
  require((mask & (mask - 1)) != 0 && mask < c.f.size(), Errc::invalid_argument, "equation needs a subset of size >= 2");
  const int s = c.vertices[static_cast<std::size_t>(std::countr_zero(mask))];
  const int t = c.vertices[static_cast<std::size_t>(std::bit_width(mask) - 1)];
  Gf2Vector out = simplex_rhs(a, c, mask);
  a.add_differential(s, t, need(c, mask), out);
  return out;
}

namespace {

// Sets f_[n] = 0 and solves the top equation for f_[n]-{k}. The top
// equation with f_[n] = 0 is linear in f_[n]-{k}, which appears once among
// the inner deletions.
void apply_filler(const AInfCategory& a, NerveSimplex& c, int k) {
  const SubsetMask full = c.full();
  const SubsetMask missing = full & ~bit(k);
  c.f[full] = a.zero(c.vertices.front(), c.vertices.back());
  c.f[missing] = a.zero(c.vertices.front(), c.vertices.back());
  c.f[missing] = simplex_rhs(a, c, full);
}

}  // namespace

bool is_nerve_simplex(const AInfCategory& a, const NerveSimplex& c, std::optional<SubsetMask>* witness) {
  if (c.dim < 0 || c.dim > kMaxNerveDim || c.vertices.size() != static_cast<std::size_t>(c.dim) + 1 ||
      c.f.size() != static_cast<std::size_t>(bit(c.dim + 1))) {
    return false;
  }
  for (int v : c.vertices) {
    if (v < 0 || v >= a.object_count()) return false;
  }
  for (SubsetMask m : nerve_subsets(c.dim)) {
    const int s = c.vertices[static_cast<std::size_t>(std::countr_zero(m))];
    const int t = c.vertices[static_cast<std::size_t>(std::bit_width(m) - 1)];
    if (!c.has(m) || c.f[m]->size() != static_cast<std::size_t>(a.hom_dim(s, t))) {
      if (witness) *witness = m;
      return false;
    }
  }
  for (SubsetMask m : nerve_subsets(c.dim)) {
    if (!simplex_residual(a, c, m).is_zero()) {
      if (witness) *witness = m;
      return false;
    }
  }
  return true;
}

NerveSimplex fill_inner_horn(const AInfCategory& a, const NerveSimplex& horn, int k) {
  const int n = horn.dim;
  require(n >= 1 && k >= 0 && k <= n, Errc::invalid_argument, "horn index out of range");
  require(k > 0 && k < n, Errc::precondition, "outer horns have no canonical filler");
  require(horn.vertices.size() == static_cast<std::size_t>(n) + 1 && horn.f.size() == static_cast<std::size_t>(bit(n + 1)),
          Errc::invalid_input, "horn has inconsistent size");
  for (int v : horn.vertices) require(v >= 0 && v < a.object_count(), Errc::invalid_input, "horn vertex out of range");
  const SubsetMask full = horn.full();
  const SubsetMask missing = full & ~bit(k);
  require(!horn.has(full) && !horn.has(missing), Errc::invalid_input,
          "horn must omit the top simplex and face " + std::to_string(k));
  for (SubsetMask m : nerve_subsets(n)) {
    if (m == full || m == missing) continue;
    const int s = horn.vertices[static_cast<std::size_t>(std::countr_zero(m))];
    const int t = horn.vertices[static_cast<std::size_t>(std::bit_width(m) - 1)];
    if (!horn.has(m) || horn.f[m]->size() != static_cast<std::size_t>(a.hom_dim(s, t))) {
      fail(Errc::invalid_input, "horn is missing a valid value at {" + subset_name(m) + "}");
    }
    if (!simplex_residual(a, horn, m).is_zero()) {
      fail(Errc::invalid_input, "horn face equation fails at {" + subset_name(m) + "}");
    }
  }
  NerveSimplex out = horn;
  apply_filler(a, out, k);
  // The horn equations were checked above; only the two new subsets remain.
  for (SubsetMask m : {missing, full}) {
    if (!simplex_residual(a, out, m).is_zero()) {
      fail(Errc::internal, "horn filler violates the simplex equation at {" + subset_name(m) + "}");
    }
  }
  return out;
}

// --- simplicial structure ----------------------------------------------------------

NerveSimplex nerve_face(const NerveSimplex& c, const OrdinalMap& mono) {
  require(mono.is_mono() && mono.target_dim == c.dim, Errc::invalid_argument, "face needs a monomorphism into the simplex");
  std::vector<int> verts;
  for (int v : mono.values) verts.push_back(c.vertices[static_cast<std::size_t>(v)]);
  NerveSimplex out = NerveSimplex::blank(std::move(verts));
  for (SubsetMask m : nerve_subsets(out.dim)) {
    SubsetMask image = 0;
    for (int e : subset_elements(m)) image |= bit(mono.values[static_cast<std::size_t>(e)]);
    if (c.has(image)) out.f[m] = c.f[image];
  }
  return out;
}

NerveSimplex nerve_degenerate(const AInfCategory& a, const NerveSimplex& c, const OrdinalMap& epi) {
  require(epi.is_epi() && epi.target_dim == c.dim, Errc::invalid_argument, "degeneracy needs a surjection onto the simplex");
  std::vector<int> verts;
  for (int v : epi.values) verts.push_back(c.vertices[static_cast<std::size_t>(v)]);
  NerveSimplex out = NerveSimplex::blank(std::move(verts));
  for (SubsetMask m : nerve_subsets(out.dim)) {
    const auto elems = subset_elements(m);
    SubsetMask image = 0;
    for (int e : elems) image |= bit(epi.values[static_cast<std::size_t>(e)]);
    if (std::popcount(image) == static_cast<int>(elems.size())) {
      out.f[m] = need(c, image);
    } else if (elems.size() == 2) {
      out.f[m] = a.unit(out.vertices[static_cast<std::size_t>(elems.front())]);
    } else {
      out.f[m] = a.zero(out.vertices[static_cast<std::size_t>(elems.front())], out.vertices[static_cast<std::size_t>(elems.back())]);
    }
  }
  return out;
}

NerveSimplex nerve_degeneracy(const AInfCategory& a, const NerveSimplex& c, int i) {
  require(i >= 0 && i <= c.dim, Errc::invalid_argument, "degeneracy index out of range");
  return nerve_degenerate(a, c, OrdinalMap::codegeneracy(c.dim, i));
}

NerveSimplex nerve_act(const AInfCategory& a, const NerveSimplex& c, const OrdinalMap& m) {
  require(m.target_dim == c.dim, Errc::invalid_argument, "ordinal map target does not match simplex dimension");
  const auto [epi, mono] = epi_mono(m);
  return nerve_degenerate(a, nerve_face(c, mono), epi);
}

bool nerve_is_degenerate(const AInfCategory& a, const NerveSimplex& c) {
  for (int i = 0; i < c.dim; ++i) {
    const NerveSimplex y = nerve_face(c, OrdinalMap::coface(c.dim, i));
    if (nerve_degenerate(a, y, OrdinalMap::codegeneracy(c.dim - 1, i)) == c) return true;
  }
  return false;
}

// --- enumeration -------------------------------------------------------------------

void for_each_nerve_simplex(const AInfCategory& a, int n, const EnumerationConstraints& constraints,
                            const std::function<bool(const NerveSimplex&)>& visit) {
  check_dim(n);
  require(constraints.allowed_objects.empty() || constraints.allowed_objects.size() == static_cast<std::size_t>(n) + 1,
          Errc::invalid_argument, "allowed objects must be given for every vertex");
  const auto& subsets = nerve_subsets(n);
  std::vector<char> skip(static_cast<std::size_t>(bit(n + 1)), 0);
  for (SubsetMask m : constraints.skip) skip.at(m) = 1;
  std::vector<const Gf2Vector*> fixed(static_cast<std::size_t>(bit(n + 1)), nullptr);
  for (const auto& [m, v] : constraints.fixed) fixed.at(m) = &v;

  std::size_t found = 0;
  bool stop = false;
  NerveSimplex c;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (stop) return;
    if (idx == subsets.size()) {
      ++found;
      if (constraints.limit != 0 && found > constraints.limit) {
        fail(Errc::cap_exceeded, "more than " + std::to_string(constraints.limit) + " nerve simplices in dimension " +
                                     std::to_string(n));
      }
      if (!visit(c)) stop = true;
      return;
    }
    const SubsetMask m = subsets[idx];
    if (skip[m]) {
      c.f[m].reset();
      self(self, idx + 1);
      return;
    }
    const int s = c.vertices[static_cast<std::size_t>(std::countr_zero(m))];
    const int t = c.vertices[static_cast<std::size_t>(std::bit_width(m) - 1)];
    const Gf2Vector rhs = simplex_rhs(a, c, m);
    if (const Gf2Vector* v = fixed[m]) {
      require(v->size() == static_cast<std::size_t>(a.hom_dim(s, t)), Errc::invalid_argument,
              "fixed value at {" + subset_name(m) + "} has the wrong length");
      if (a.differential(s, t, *v) != rhs) return;
      c.f[m] = *v;
      self(self, idx + 1);
      return;
    }
    const AffineSolver& solver = a.differential_solver(s, t);
    const auto particular = solver.particular(rhs);
    if (!particular) return;
    for_each_in_coset(*particular, solver.kernel_basis(), [&](const Gf2Vector& x) {
      if (stop) return;
      c.f[m] = x;
      self(self, idx + 1);
    });
    c.f[m].reset();
  };

  std::vector<int> verts(static_cast<std::size_t>(n) + 1);
  auto choose = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v > n) {
      c = NerveSimplex::blank(verts);
      fill(fill, 0);
      return;
    }
    const bool any = constraints.allowed_objects.empty() || constraints.allowed_objects[static_cast<std::size_t>(v)].empty();
    const int count = any ? a.object_count() : static_cast<int>(constraints.allowed_objects[static_cast<std::size_t>(v)].size());
    for (int i = 0; i < count && !stop; ++i) {
      const int obj = any ? i : constraints.allowed_objects[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      require(obj >= 0 && obj < a.object_count(), Errc::invalid_argument, "allowed object out of range");
      verts[static_cast<std::size_t>(v)] = obj;
      self(self, v + 1);
    }
  };
  choose(choose, 0);
}

std::vector<NerveSimplex> enumerate_simplices(const AInfCategory& a, int n, const EnumerationConstraints& constraints) {
  std::vector<NerveSimplex> out;
  for_each_nerve_simplex(a, n, constraints, [&](const NerveSimplex& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

void for_each_inner_horn(const AInfCategory& a, int n, int k,
                         const std::function<bool(const NerveSimplex&)>& visit) {
  require(n >= 2 && k > 0 && k < n, Errc::invalid_argument, "inner horns need 0 < k < n");
  EnumerationConstraints constraints;
  const SubsetMask full = bit(n + 1) - 1;
  constraints.skip = {full, full & ~bit(k)};
  for_each_nerve_simplex(a, n, constraints, visit);
}

void for_each_filled_inner_horn(const AInfCategory& a, int n, int k,
                                const std::function<bool(const NerveSimplex&, const NerveSimplex&)>& visit) {
  NerveSimplex filler;
  for_each_inner_horn(a, n, k, [&](const NerveSimplex& horn) {
    filler = horn;
    apply_filler(a, filler, k);
    return visit(horn, filler);
  });
}

NerveSimplex nerve_of_functor(const AInfFunctor& f, const NerveSimplex& c) {
  std::vector<int> verts;
  for (int v : c.vertices) verts.push_back(f.object_map.at(static_cast<std::size_t>(v)));
  NerveSimplex out = NerveSimplex::blank(std::move(verts));
  std::vector<const Gf2Vector*> args;
  for (SubsetMask m : nerve_subsets(c.dim)) {
    const auto elems = elements_of(m);
    const int m_len = static_cast<int>(elems.size()) - 1;
    Gf2Vector value = f.target->zero(out.vertices[static_cast<std::size_t>(elems.front())],
                                     out.vertices[static_cast<std::size_t>(elems.back())]);
    for_each_decomposition(c, std::span<const int>(elems.data(), elems.size()), 0, std::uint32_t{1} << (m_len - 1),
                           [&](std::span<const int> objs, std::span<const SubsetMask> masks) {
                             args.clear();
                             for (SubsetMask b : masks) args.push_back(&need(c, b));
                             value += f.apply(objs, args);
                           });
    out.f[m] = std::move(value);
  }
  return out;
}

// --- NerveComplex ------------------------------------------------------------------

NerveComplex NerveComplex::build(std::shared_ptr<const AInfCategory> category, int cap, std::size_t limit) {
  require(cap >= 0 && cap <= kMaxNerveDim, Errc::invalid_argument, "nerve cap out of range");
  for (int x = 0; x < category->object_count(); ++x) {
    require(category->has_unit(x), Errc::precondition, "the nerve needs a unit for every object");
  }
  NerveComplex out;
  out.category_ = std::move(category);
  out.sset_ = std::make_shared<SimplicialSet>(cap);
  out.cells_.resize(static_cast<std::size_t>(cap) + 1);
  out.index_.resize(static_cast<std::size_t>(cap) + 1);
  const AInfCategory& a = *out.category_;
  for (int n = 0; n <= cap; ++n) {
    EnumerationConstraints constraints;
    constraints.limit = limit;
    for_each_nerve_simplex(a, n, constraints, [&](const NerveSimplex& c) {
      if (n > 0 && nerve_is_degenerate(a, c)) return true;
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= n && n > 0; ++i) faces.push_back(out.locate(nerve_face(c, OrdinalMap::coface(n, i))));
      auto& cells = out.cells_[static_cast<std::size_t>(n)];
      const int index = static_cast<int>(cells.size());
      out.sset_->add_cell(n, std::to_string(n) + ":" + std::to_string(index), std::move(faces));
      out.index_[static_cast<std::size_t>(n)].emplace(c.key(), index);
      cells.push_back(c);
      return true;
    });
  }
  return out;
}

const NerveSimplex& NerveComplex::cell(CellId id) const {
  return cells_.at(static_cast<std::size_t>(id.dim)).at(static_cast<std::size_t>(id.index));
}

NerveSimplex NerveComplex::realize(const SimplexRef& s) const {
  return nerve_degenerate(*category_, cell(s.cell()), s.degeneracy);
}

std::optional<CellId> NerveComplex::find_cell(const NerveSimplex& c) const {
  if (c.dim < 0 || c.dim > cap()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(c.dim)];
  const auto it = idx.find(c.key());
  if (it == idx.end()) return std::nullopt;
  return CellId{c.dim, it->second};
}

SimplexRef NerveComplex::locate(const NerveSimplex& c) const {
  if (c.dim > cap()) fail(Errc::cap_exceeded, "simplex dimension exceeds the nerve cap");
  if (const auto id = find_cell(c)) return SimplexRef::nondegenerate(id->dim, id->index);
  for (int i = 0; i < c.dim; ++i) {
    const NerveSimplex y = nerve_face(c, OrdinalMap::coface(c.dim, i));
    if (nerve_degenerate(*category_, y, OrdinalMap::codegeneracy(c.dim - 1, i)) == c) {
      return sset_->act(locate(y), OrdinalMap::codegeneracy(c.dim - 1, i));
    }
  }
  fail(Errc::invalid_argument, "simplex does not belong to the nerve truncation");
}

}  // namespace ainerve
