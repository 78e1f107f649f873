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

#include "ainerve/ainerve.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "ainerve/error.hpp"
#include "ainerve/generate.hpp"
#include "ainerve/json_io.hpp"

using namespace ainerve;
using ainerve::json::Json;

struct ainerve_category {
  std::shared_ptr<const AInfCategory> value;
};
struct ainerve_sset {
  std::shared_ptr<const SimplicialSet> value;
};
struct ainerve_diagram {
  std::shared_ptr<const AInfDiagram> value;
};
struct ainerve_colimit {
  std::shared_ptr<const GlobalComplex> value;
};

namespace {

thread_local std::string last_error;

ainerve_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return AINERVE_INVALID_ARGUMENT;
    case Errc::invalid_input: return AINERVE_INVALID_INPUT;
    case Errc::precondition: return AINERVE_PRECONDITION;
    case Errc::cap_exceeded: return AINERVE_CAP_EXCEEDED;
    case Errc::internal: return AINERVE_INTERNAL_ERROR;
  }
  return AINERVE_INTERNAL_ERROR;
}

template <class F>
ainerve_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return AINERVE_INTERNAL_ERROR;
}

void require_ptr(const void* p, const char* what) {
  require(p != nullptr, Errc::invalid_argument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  require_ptr(out, "output");
  *out = copy_string(json::dump(j));
}

ainerve_status verdict(bool pass) { return pass ? AINERVE_OK : AINERVE_CHECK_FAILED; }

Json nerve_json(const NerveComplex& nc) {
  Json j;
  j["kind"] = "nerve";
  j["cap"] = nc.cap();
  j["category"] = json::from_category(nc.category());
  j["complex"] = json::from_sset(nc.sset());
  j["simplices"] = Json::array();
  for (int n = 0; n <= nc.cap(); ++n) {
    Json level = Json::array();
    for (int c = 0; c < static_cast<int>(nc.sset().cell_count(n)); ++c) {
      level.push_back(json::from_nerve_simplex(nc.category(), nc.cell(CellId{n, c})));
    }
    j["simplices"].push_back(std::move(level));
  }
  return j;
}

Direction direction_of(ainerve_direction d) {
  require(d == AINERVE_CO || d == AINERVE_CONTRA, Errc::invalid_argument, "unknown direction");
  return d == AINERVE_CO ? Direction::co : Direction::contra;
}

}  // namespace

extern "C" {

const char* ainerve_last_error(void) { return last_error.c_str(); }

const char* ainerve_version(void) { return "0.1.0"; }

void ainerve_string_free(char* s) { std::free(s); }

// --- categories --------------------------------------------------------------------

ainerve_status ainerve_category_from_json(const char* text, ainerve_category** out) {
  return guard([&] {
    require_ptr(text, "text");
    require_ptr(out, "output");
    *out = new ainerve_category{json::to_category(json::parse(text))};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_category_to_json(const ainerve_category* c, char** out) {
  return guard([&] {
    require_ptr(c, "category");
    emit(json::from_category(*c->value), out);
    return AINERVE_OK;
  });
}

void ainerve_category_free(ainerve_category* c) { delete c; }

ainerve_status ainerve_category_generate(uint64_t seed, int max_objects, ainerve_category** out) {
  return guard([&] {
    require_ptr(out, "output");
    GeneratorOptions options;
    if (max_objects > 0) {
      options.max_objects = max_objects;
      options.min_objects = std::min(options.min_objects, max_objects);
    }
    *out = new ainerve_category{random_category(seed, options)};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_check_ainf(const ainerve_category* c, int dmax, char** report) {
  return guard([&] {
    require_ptr(c, "category");
    require(dmax >= 1, Errc::invalid_argument, "dmax must be positive");
    const auto relations = check_ainf_relations(*c->value, dmax);
    const auto units = check_strict_units(*c->value);
    Json j;
    j["check"] = "ainf";
    j["relations"] = json::from_relation_report(relations);
    j["units"] = json::from_unit_report(units);
    j["pass"] = relations.pass && units.pass;
    emit(j, report);
    return verdict(relations.pass && units.pass);
  });
}

ainerve_status ainerve_nerve(const ainerve_category* c, int cap, size_t limit, ainerve_sset** out_complex, char** out_json) {
  return guard([&] {
    require_ptr(c, "category");
    require(cap >= 0, Errc::invalid_argument, "negative cap");
    const auto nc = NerveComplex::build(c->value, cap, limit);
    if (out_json) emit(nerve_json(nc), out_json);
    if (out_complex) *out_complex = new ainerve_sset{nc.sset_ptr()};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_fill_horn(const ainerve_category* c, const char* horn_json, int n, int k, char** filler_json) {
  return guard([&] {
    require_ptr(c, "category");
    require_ptr(horn_json, "horn");
    const AInfCategory& a = *c->value;
    const NerveSimplex horn = json::to_nerve_simplex(a, json::parse(horn_json));
    require(horn.dim == n, Errc::invalid_input, "horn has " + std::to_string(horn.dim + 1) + " vertices, expected n + 1");
    require(k >= 0 && k <= n, Errc::invalid_argument, "k out of range");
    emit(json::from_nerve_simplex(a, fill_inner_horn(a, horn, k)), filler_json);
    return AINERVE_OK;
  });
}

ainerve_status ainerve_enumerate(const ainerve_category* c, int n, size_t limit, char** out_json) {
  return guard([&] {
    require_ptr(c, "category");
    require(n >= 0, Errc::invalid_argument, "negative dimension");
    EnumerationConstraints constraints;
    constraints.limit = limit;
    Json list = Json::array();
    for_each_nerve_simplex(*c->value, n, constraints, [&](const NerveSimplex& s) {
      list.push_back(json::from_nerve_simplex(*c->value, s));
      return true;
    });
    Json j;
    j["n"] = n;
    j["count"] = list.size();
    j["simplices"] = std::move(list);
    emit(j, out_json);
    return AINERVE_OK;
  });
}

// --- simplicial sets ---------------------------------------------------------------

ainerve_status ainerve_sset_from_json(const char* text, ainerve_sset** out) {
  return guard([&] {
    require_ptr(text, "text");
    require_ptr(out, "output");
    *out = new ainerve_sset{std::make_shared<const SimplicialSet>(json::to_sset(json::parse(text)))};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_sset_load(const char* text, int cap, ainerve_sset** out) {
  return guard([&] {
    require_ptr(text, "text");
    require_ptr(out, "output");
    const Json j = json::parse(text);
    require(j.is_object(), Errc::invalid_input, "expected a JSON object");
    std::shared_ptr<const SimplicialSet> x;
    if (j.contains("kind") && j["kind"] == "colimit") {
      x = json::to_colimit(j).sset_ptr();
    } else if (j.contains("kind") && j["kind"] == "nerve") {
      x = std::make_shared<const SimplicialSet>(json::to_sset(j["complex"]));
    } else if (j.contains("objects")) {
      require(cap >= 0, Errc::invalid_argument, "negative cap");
      x = NerveComplex::build(json::to_category(j), cap).sset_ptr();
    } else {
      x = std::make_shared<const SimplicialSet>(json::to_sset(j));
    }
    *out = new ainerve_sset{std::move(x)};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_sset_to_json(const ainerve_sset* x, char** out) {
  return guard([&] {
    require_ptr(x, "simplicial set");
    emit(json::from_sset(*x->value), out);
    return AINERVE_OK;
  });
}

void ainerve_sset_free(ainerve_sset* x) { delete x; }

ainerve_status ainerve_check_qcat(const ainerve_sset* x, int cap, char** report) {
  return guard([&] {
    require_ptr(x, "simplicial set");
    const auto r = check_quasi_category(*x->value, cap);
    emit(json::from_horn_report(*x->value, r), report);
    return verdict(r.pass);
  });
}

ainerve_status ainerve_check_kan(const ainerve_sset* x, int cap, char** report) {
  return guard([&] {
    require_ptr(x, "simplicial set");
    const auto r = check_kan(*x->value, cap);
    emit(json::from_horn_report(*x->value, r), report);
    return verdict(r.pass);
  });
}

ainerve_status ainerve_tau(const ainerve_sset* x, char** out_json) {
  return guard([&] {
    require_ptr(x, "simplicial set");
    emit(json::from_tau(tau(x->value)), out_json);
    return AINERVE_OK;
  });
}

ainerve_status ainerve_tau0(const ainerve_sset* x, char** out_json) {
  return guard([&] {
    require_ptr(x, "simplicial set");
    const auto h = tau(x->value);
    emit(json::from_tau0(h, tau0(h)), out_json);
    return AINERVE_OK;
  });
}

ainerve_status ainerve_kan_subcomplex(const ainerve_sset* x, ainerve_sset** out) {
  return guard([&] {
    require_ptr(x, "simplicial set");
    require_ptr(out, "output");
    *out = new ainerve_sset{std::make_shared<const SimplicialSet>(maximal_kan_subcomplex(tau(x->value)))};
    return AINERVE_OK;
  });
}

// --- diagrams and colimits ---------------------------------------------------------

ainerve_status ainerve_diagram_from_json(const char* text, ainerve_diagram** out) {
  return guard([&] {
    require_ptr(text, "text");
    require_ptr(out, "output");
    std::shared_ptr<const AInfDiagram> d = json::to_diagram(json::parse(text));
    d->validate();
    *out = new ainerve_diagram{std::move(d)};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_diagram_to_json(const ainerve_diagram* d, char** out) {
  return guard([&] {
    require_ptr(d, "diagram");
    emit(json::from_diagram(*d->value), out);
    return AINERVE_OK;
  });
}

void ainerve_diagram_free(ainerve_diagram* d) { delete d; }

ainerve_status ainerve_colimit_build(const ainerve_diagram* d, int cap, size_t limit, ainerve_colimit** out) {
  return guard([&] {
    require_ptr(d, "diagram");
    require_ptr(out, "output");
    *out = new ainerve_colimit{std::make_shared<const GlobalComplex>(GlobalComplex::build(d->value, cap, limit))};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_colimit_from_json(const char* text, ainerve_colimit** out) {
  return guard([&] {
    require_ptr(text, "text");
    require_ptr(out, "output");
    *out = new ainerve_colimit{std::make_shared<const GlobalComplex>(json::to_colimit(json::parse(text)))};
    return AINERVE_OK;
  });
}

ainerve_status ainerve_colimit_to_json(const ainerve_colimit* l, char** out) {
  return guard([&] {
    require_ptr(l, "colimit");
    emit(json::from_colimit(*l->value), out);
    return AINERVE_OK;
  });
}

void ainerve_colimit_free(ainerve_colimit* l) { delete l; }

ainerve_status ainerve_check_fibration(const ainerve_colimit* l, int cap, ainerve_direction direction, char** report) {
  return guard([&] {
    require_ptr(l, "colimit");
    const auto r = check_fibration(l->value, cap, direction_of(direction));
    emit(json::from_fibration_report(l->value->projection(), r), report);
    return verdict(r.pass() && r.cocartesian_checked);
  });
}

ainerve_status ainerve_check_fibration_json(const char* text, int cap, ainerve_direction direction, char** report) {
  return guard([&] {
    require_ptr(text, "text");
    const Json j = json::parse(text);
    if (j.is_object() && j.contains("kind") && j["kind"] == "colimit") {
      auto l = std::make_shared<const GlobalComplex>(json::to_colimit(j));
      const auto r = check_fibration(l, cap, direction_of(direction));
      emit(json::from_fibration_report(l->projection(), r), report);
      return verdict(r.pass() && r.cocartesian_checked);
    }
    const SimplicialMap p = json::to_map(j);
    const auto r = check_fibration(p, cap, direction_of(direction));
    emit(json::from_fibration_report(p, r), report);
    return verdict(r.pass() && r.cocartesian_checked);
  });
}

}  // extern "C"
