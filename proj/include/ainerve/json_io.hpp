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

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ainerve/ainf.hpp"
#include "ainerve/colimit.hpp"
#include "ainerve/fibration.hpp"
#include "ainerve/homotopy.hpp"
#include "ainerve/nerve.hpp"
#include "ainerve/simplicial.hpp"

// JSON forms of every object kind. Output keys keep insertion order, so
// serialize -> load -> serialize is byte-identical. Loaders throw
// Error(invalid_input) on schema violations.
namespace ainerve::json {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json from_category(const AInfCategory& a);
std::shared_ptr<const AInfCategory> to_category(const Json& j);

Json from_sset(const SimplicialSet& x);
SimplicialSet to_sset(const Json& j);
/// "id" for a cell, "id^[w]" for a degenerate simplex with word w.
SimplexRef to_simplex(const SimplicialSet& x, const Json& j);

/// Missing subsets are omitted; values are label lists.
Json from_nerve_simplex(const AInfCategory& a, const NerveSimplex& c);
NerveSimplex to_nerve_simplex(const AInfCategory& a, const Json& j);

Json from_functor(const StrictFunctor& f);
StrictFunctor to_functor(std::shared_ptr<const AInfCategory> source, std::shared_ptr<const AInfCategory> target,
                         const Json& j);

Json from_diagram(const AInfDiagram& d);
std::shared_ptr<AInfDiagram> to_diagram(const Json& j);

Json from_map(const SimplicialMap& p);
SimplicialMap to_map(const Json& j);

Json from_colimit(const GlobalComplex& l);
/// Rebuilds L from the stored diagram and cap and checks that it matches.
GlobalComplex to_colimit(const Json& j);

Json from_horn(const SimplicialSet& x, const HornWitness& w);
HornWitness to_horn(const SimplicialSet& x, const Json& j);

Json from_relation_report(const RelationReport& r);
Json from_unit_report(const UnitReport& r);
Json from_horn_report(const SimplicialSet& x, const HornReport& r);
Json from_tau(const HoCategory& h);
Json from_tau0(const HoCategory& h, const std::vector<std::vector<int>>& groups);
Json from_fibration_report(const SimplicialMap& p, const FibrationReport& r);

}  // namespace ainerve::json
