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

#include "ainerve/generate.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ainerve/error.hpp"

namespace ainerve {

namespace {

std::string digits(int i, int j) { return std::to_string(i) + std::to_string(j); }

Gf2Matrix inverse(const Gf2Matrix& p) {
  const AffineSolver solver(p);
  require(solver.rank() == p.cols() && p.rows() == p.cols(), Errc::invalid_argument, "basis change is not invertible");
  std::vector<Gf2Vector> cols;
  for (std::size_t j = 0; j < p.rows(); ++j) cols.push_back(*solver.particular(Gf2Vector::unit(p.rows(), j)));
  return Gf2Matrix::from_columns(p.rows(), cols);
}

Gf2Vector evaluate(const AInfCategory& a, const MultilinearTable& table, const std::vector<int>& objs,
                   const std::vector<Gf2Vector>& args) {
  std::vector<const Gf2Vector*> ptrs;
  std::vector<int> offsets;
  for (std::size_t k = 0; k < args.size(); ++k) {
    ptrs.push_back(&args[k]);
    offsets.push_back(a.hom_offset(objs[k], objs[k + 1]));
  }
  return table.evaluate(ptrs, offsets, static_cast<std::size_t>(a.hom_dim(objs.front(), objs.back())));
}

std::shared_ptr<const AInfCategory> rebuild(const AInfCategory& a, const MultilinearTable& ops) {
  AInfCategory::Builder builder(a);
  builder.clear_mu();
  for (const auto& [key, value] : ops.sorted_entries()) {
    std::vector<std::string> inputs;
    for (int l : key) inputs.push_back(a.label(l).name);
    builder.set_mu(std::move(inputs), a.label_names(a.label(key.front()).source, a.label(key.back()).target, value));
  }
  return builder.build();
}

std::vector<bool> unit_mask(const AInfCategory& a) {
  std::vector<bool> mask(static_cast<std::size_t>(a.label_count()), false);
  for (int x = 0; x < a.object_count(); ++x) {
    if (a.has_unit(x)) mask[static_cast<std::size_t>(a.unit_label(x))] = true;
  }
  return mask;
}

// Longest chain of composable non-unit labels; fails if such chains are unbounded.
int longest_chain(const AInfCategory& a, const std::vector<bool>& is_unit) {
  const int n = a.object_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 active, 2 done
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  auto visit = [&](auto&& self, int x) -> int {
    auto& st = state[static_cast<std::size_t>(x)];
    if (st == 2) return depth[static_cast<std::size_t>(x)];
    require(st == 0, Errc::precondition, "non-unit morphisms form a cycle");
    st = 1;
    int best = 0;
    for (int y = 0; y < n; ++y) {
      bool has = false;
      for (int j = 0; j < a.hom_dim(x, y); ++j) has = has || !is_unit[static_cast<std::size_t>(a.hom_offset(x, y) + j)];
      if (has) best = std::max(best, 1 + self(self, y));
    }
    st = 2;
    depth[static_cast<std::size_t>(x)] = best;
    return best;
  };
  int best = 0;
  for (int x = 0; x < n; ++x) best = std::max(best, visit(visit, x));
  return best;
}

}  // namespace

std::shared_ptr<const AInfCategory> poset_category(int n) {
  require(n >= 0 && n <= 9, Errc::invalid_argument, "poset size must lie in [0, 9]");
  AInfCategory::Builder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  for (int i = 0; i <= n; ++i) {
    b.set_hom(std::to_string(i), std::to_string(i), {"e" + std::to_string(i)});
    b.set_unit(std::to_string(i), "e" + std::to_string(i));
    for (int j = i + 1; j <= n; ++j) b.set_hom(std::to_string(i), std::to_string(j), {"a" + digits(i, j)});
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) b.set_mu({"a" + digits(i, j), "a" + digits(j, k)}, {"a" + digits(i, k)});
    }
  }
  b.add_unit_laws();
  return b.build();
}

std::shared_ptr<const AInfCategory> discrete_category(int objects) {
  AInfCategory::Builder b;
  for (int i = 0; i < objects; ++i) {
    const std::string x = "X" + std::to_string(i);
    b.add_object(x);
    b.set_hom(x, x, {"e" + std::to_string(i)});
    b.set_unit(x, "e" + std::to_string(i));
  }
  b.add_unit_laws();
  return b.build();
}

Gf2Matrix random_invertible(std::mt19937_64& rng, std::size_t n, int keep) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    Gf2Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, coin(rng));
    }
    if (keep >= 0) {
      for (std::size_t r = 0; r < n; ++r) m.set(r, static_cast<std::size_t>(keep), r == static_cast<std::size_t>(keep));
    }
    if (m.rank() == n) return m;
  }
}

std::shared_ptr<const AInfCategory> change_basis(const AInfCategory& a,
                                                 const std::function<Gf2Matrix(int, int)>& change) {
  const int n = a.object_count();
  std::vector<Gf2Matrix> fwd;
  std::vector<Gf2Matrix> inv;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      Gf2Matrix p = change(s, t);
      const auto dim = static_cast<std::size_t>(a.hom_dim(s, t));
      require(p.rows() == dim && p.cols() == dim, Errc::invalid_argument, "basis change has the wrong size");
      if (s == t && a.has_unit(s)) {
        const Gf2Vector e = a.unit(s);
        require(p * e == e, Errc::invalid_argument, "basis change must fix the unit");
      }
      inv.push_back(inverse(p));
      fwd.push_back(std::move(p));
    }
  }
  auto id = [n](int s, int t) { return static_cast<std::size_t>(s * n + t); };
  MultilinearTable ops;
  for (int d = 1; d <= a.max_arity(); ++d) {
    for_each_composable_tuple(a, d, [&](std::span<const int> tuple) {
      std::vector<int> objs{a.label(tuple.front()).source};
      std::vector<Gf2Vector> args;
      for (int l : tuple) {
        const auto& lab = a.label(l);
        objs.push_back(lab.target);
        args.push_back(fwd[id(lab.source, lab.target)].column(static_cast<std::size_t>(lab.index)));
      }
      ops.set(LabelTuple(tuple.begin(), tuple.end()),
              inv[id(objs.front(), objs.back())] * evaluate(a, a.operations(), objs, args));
      return true;
    });
  }
  return rebuild(a, ops);
}

std::shared_ptr<const AInfCategory> transport(const AInfCategory& a, const MultilinearTable& phi) {
  const auto is_unit = unit_mask(a);
  const int longest = longest_chain(a, is_unit);
  const int dmax = std::max({2, longest, a.max_arity()});
  MultilinearTable out;
  for (int d = 1; d <= dmax; ++d) {
    for_each_composable_tuple(a, d, [&](std::span<const int> tuple) {
      if (d >= 3 && std::any_of(tuple.begin(), tuple.end(), [&](int l) { return is_unit[static_cast<std::size_t>(l)]; })) {
        return true;
      }
      std::vector<int> objs{a.label(tuple.front()).source};
      for (int l : tuple) objs.push_back(a.label(l).target);
      auto basis = [&](std::size_t k) { return a.basis_vector(tuple[k]); };
      const auto ud = static_cast<std::size_t>(d);

      Gf2Vector value = a.mu_labels(tuple);
      if (d >= 2) {
        const Gf2Vector head = a.mu_labels(tuple.first(ud - 1));
        const Gf2Vector tail = a.mu_labels(tuple.last(ud - 1));
        value += evaluate(a, phi, {objs.front(), objs[ud - 1], objs.back()}, {head, basis(ud - 1)});
        value += evaluate(a, phi, {objs.front(), objs[1], objs.back()}, {basis(0), tail});
      }
      // Compositions of d into parts of size 1 and 2 with at least one 2.
      std::vector<int> parts;
      auto recurse = [&](auto&& self, int used) -> void {
        if (used == d) {
          if (static_cast<int>(parts.size()) == d) return;
          std::vector<int> block_objs{objs.front()};
          std::vector<Gf2Vector> args;
          std::size_t pos = 0;
          for (int p : parts) {
            if (p == 1) {
              args.push_back(basis(pos));
            } else {
              args.push_back(evaluate(a, phi, {objs[pos], objs[pos + 1], objs[pos + 2]}, {basis(pos), basis(pos + 1)}));
            }
            pos += static_cast<std::size_t>(p);
            block_objs.push_back(objs[pos]);
          }
          value += evaluate(a, out, block_objs, args);
          return;
        }
        for (int p = 1; p <= 2 && used + p <= d; ++p) {
          parts.push_back(p);
          self(self, used + p);
          parts.pop_back();
        }
      };
      recurse(recurse, 0);
      out.set(LabelTuple(tuple.begin(), tuple.end()), std::move(value));
      return true;
    });
  }
  return rebuild(a, out);
}

std::shared_ptr<const AInfCategory> random_category(std::uint64_t seed, const GeneratorOptions& options) {
  require(options.min_objects >= 1 && options.min_objects <= options.max_objects && options.max_objects <= 9,
          Errc::invalid_argument, "object bounds must satisfy 1 <= min <= max <= 9");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const int n = std::uniform_int_distribution<int>(options.min_objects, options.max_objects)(rng);

  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::bernoulli_distribution edge(0.6);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = edge(rng);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
      }
    }
  }
  auto obj = [](int i) { return "X" + std::to_string(i); };
  auto has = [&](int i, int j) { return rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };

  AInfCategory::Builder b;
  for (int i = 0; i < n; ++i) b.add_object(obj(i));
  std::uniform_int_distribution<int> noise(0, std::max(0, options.max_noise_pairs));
  for (int i = 0; i < n; ++i) {
    b.set_hom(obj(i), obj(i), {"e" + std::to_string(i)});
    b.set_unit(obj(i), "e" + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      std::vector<std::string> labels;
      if (has(i, j)) labels.push_back("a" + digits(i, j));
      const int pairs = noise(rng);
      for (int k = 0; k < pairs; ++k) {
        const std::string u = "u" + digits(i, j) + "_" + std::to_string(k);
        const std::string v = "v" + digits(i, j) + "_" + std::to_string(k);
        labels.push_back(u);
        labels.push_back(v);
        b.set_mu({u}, {v});
      }
      if (!labels.empty()) b.set_hom(obj(i), obj(j), std::move(labels));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (has(i, j) && has(j, k)) b.set_mu({"a" + digits(i, j), "a" + digits(j, k)}, {"a" + digits(i, k)});
      }
    }
  }
  b.add_unit_laws();
  auto cat = b.build();

  if (options.quadratic_gauge) {
    const auto is_unit = unit_mask(*cat);
    MultilinearTable phi;
    for_each_composable_tuple(*cat, 2, [&](std::span<const int> pair) {
      if (is_unit[static_cast<std::size_t>(pair[0])] || is_unit[static_cast<std::size_t>(pair[1])]) return true;
      const int s = cat->label(pair[0]).source;
      const int t = cat->label(pair[1]).target;
      Gf2Vector v = cat->zero(s, t);
      for (std::size_t k = 0; k < v.size(); ++k) v.set(k, coin(rng));
      phi.set(LabelTuple(pair.begin(), pair.end()), std::move(v));
      return true;
    });
    cat = transport(*cat, phi);
  }
  if (options.scramble_basis) {
    const AInfCategory& c = *cat;
    cat = change_basis(c, [&](int s, int t) {
      const int keep = (s == t && c.has_unit(s)) ? c.label(c.unit_label(s)).index : -1;
      return random_invertible(rng, static_cast<std::size_t>(c.hom_dim(s, t)), keep);
    });
  }
  if (options.duplicate_object && coin(rng)) {
    const int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    auto [sub, inclusion] = full_subcategory(cat, {x});
    cat = degenerate_extension(cat, sub, inclusion, "dup").category;
  }

  const int dmax = std::max(2, 2 * cat->max_arity());
  require(check_ainf_relations(*cat, dmax).pass && check_strict_units(*cat).pass, Errc::internal,
          "generated category failed validation");
  return cat;
}

}  // namespace ainerve
