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

// Stock categories and a seeded generator of valid A-infinity categories.

#include <cstdint>
#include <memory>
#include <random>

#include "ainerve/ainf.hpp"

namespace ainerve {

/// The poset [n] as a strict category: objects "0".."n", labels "aij" for
/// i < j, units "ei", and mu^2(aij, ajk) = aik.
std::shared_ptr<const AInfCategory> poset_category(int n);

/// Objects only, each hom(X, X) spanned by its unit.
std::shared_ptr<const AInfCategory> discrete_category(int objects);

/// Rewrites every hom in a new basis: basis element j of hom(s, t) becomes
/// change(s, t) * e_j. Each change must be invertible and fix the unit.
std::shared_ptr<const AInfCategory> change_basis(const AInfCategory& a,
                                                 const std::function<Gf2Matrix(int, int)>& change);

/// Transports the operations along the formal diffeomorphism with identity
/// linear part and quadratic part phi (keys of arity 2, units excluded).
/// Requires a category whose chains of non-unit labels have bounded length.
std::shared_ptr<const AInfCategory> transport(const AInfCategory& a, const MultilinearTable& phi);

struct GeneratorOptions {
  int min_objects = 2;
  int max_objects = 4;
  int max_noise_pairs = 1;  // acyclic pairs u -> mu^1(u) added per hom
  bool quadratic_gauge = true;
  bool scramble_basis = true;
  bool duplicate_object = true;
};

/// Valid, strictly unital category. Starts from a transitively closed
/// directed poset with acyclic noise, applies a random quadratic gauge and a
/// random basis change, and may adjoin an isomorphic copy of one object.
/// The result is checked before it is returned.
std::shared_ptr<const AInfCategory> random_category(std::uint64_t seed, const GeneratorOptions& options = {});

/// Random invertible matrix; if keep >= 0 that column is the unit vector.
Gf2Matrix random_invertible(std::mt19937_64& rng, std::size_t n, int keep = -1);

}  // namespace ainerve
