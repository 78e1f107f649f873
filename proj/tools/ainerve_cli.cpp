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

// Command-line front end over the C API. All state goes through files and
// flags; reports are JSON, written atomically when --out is given.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ainerve/ainerve.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out.flush()) throw InputError("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot write " + path);
  }
}

// Owns a string returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { ainerve_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using Category = Handle<ainerve_category, ainerve_category_free>;
using Sset = Handle<ainerve_sset, ainerve_sset_free>;
using Diagram = Handle<ainerve_diagram, ainerve_diagram_free>;
using Colimit = Handle<ainerve_colimit, ainerve_colimit_free>;

// Library failures other than a failed check are input errors for the CLI.
void ok(ainerve_status s) {
  if (s != AINERVE_OK && s != AINERVE_CHECK_FAILED) throw InputError(ainerve_last_error());
}

struct Options {
  std::string input;
  std::string second;
  std::optional<std::string> out;
  int cap = 3;
  int dmax = 4;
  int n = -1;
  int k = -1;
  std::size_t limit = 0;
  std::uint64_t seed = 1;
  int max_objects = 0;
  std::string direction = "co";
};

std::string pass_fail(const nlohmann::json& j, const char* key) { return j.at(key).get<bool>() ? "pass" : "fail"; }

// Emits the JSON result: to --out with a one-line summary on stdout, or to stdout.
void deliver(const Options& o, const std::string& json, const std::string& summary) {
  if (o.out) {
    write_atomic(*o.out, json);
    if (!summary.empty()) std::cout << summary << "\n";
  } else {
    std::cout << json;
    if (!summary.empty()) std::cerr << summary << "\n";
  }
}

int finish(ainerve_status s) { return s == AINERVE_CHECK_FAILED ? kExitFail : kExitPass; }

Category load_category(const std::string& path) {
  Category c;
  ok(ainerve_category_from_json(read_file(path).c_str(), &c.p));
  return c;
}

Sset load_sset(const Options& o) {
  Sset x;
  ok(ainerve_sset_load(read_file(o.input).c_str(), o.cap, &x.p));
  return x;
}

int run(const std::string& command, const Options& o) {
  Text out;
  if (command == "check-ainf") {
    auto c = load_category(o.input);
    const auto s = ainerve_check_ainf(c.p, o.dmax, &out.p);
    ok(s);
    const auto j = nlohmann::json::parse(out.str());
    deliver(o, out.str(), "relations: " + pass_fail(j["relations"], "pass") + ", units: " + pass_fail(j["units"], "pass"));
    return finish(s);
  }
  if (command == "nerve") {
    auto c = load_category(o.input);
    ok(ainerve_nerve(c.p, o.cap, o.limit, nullptr, &out.p));
    deliver(o, out.str(), "");
    return kExitPass;
  }
  if (command == "fill-horn") {
    auto c = load_category(o.input);
    ok(ainerve_fill_horn(c.p, read_file(o.second).c_str(), o.n, o.k, &out.p));
    deliver(o, out.str(), "");
    return kExitPass;
  }
  if (command == "enumerate") {
    auto c = load_category(o.input);
    ok(ainerve_enumerate(c.p, o.n, o.limit, &out.p));
    deliver(o, out.str(), "count: " + std::to_string(nlohmann::json::parse(out.str())["count"].get<std::size_t>()));
    return kExitPass;
  }
  if (command == "tau" || command == "tau0") {
    auto x = load_sset(o);
    ok(command == "tau" ? ainerve_tau(x.p, &out.p) : ainerve_tau0(x.p, &out.p));
    deliver(o, out.str(), "");
    return kExitPass;
  }
  if (command == "kan-subcomplex") {
    auto x = load_sset(o);
    Sset k;
    ok(ainerve_kan_subcomplex(x.p, &k.p));
    ok(ainerve_sset_to_json(k.p, &out.p));
    deliver(o, out.str(), "");
    return kExitPass;
  }
  if (command == "check-qcat" || command == "check-kan") {
    auto x = load_sset(o);
    const auto s = command == "check-qcat" ? ainerve_check_qcat(x.p, o.cap, &out.p) : ainerve_check_kan(x.p, o.cap, &out.p);
    ok(s);
    const auto j = nlohmann::json::parse(out.str());
    deliver(o, out.str(),
            j["check"].get<std::string>() + ": " + pass_fail(j, "pass") + " (" + std::to_string(j["horns_checked"].get<std::size_t>()) +
                " horns up to dimension " + std::to_string(o.cap) + ")");
    return finish(s);
  }
  if (command == "colimit") {
    Diagram d;
    ok(ainerve_diagram_from_json(read_file(o.input).c_str(), &d.p));
    Colimit l;
    ok(ainerve_colimit_build(d.p, o.cap, o.limit, &l.p));
    ok(ainerve_colimit_to_json(l.p, &out.p));
    deliver(o, out.str(), "");
    return kExitPass;
  }
  if (command == "check-fibration") {
    if (o.direction != "co" && o.direction != "contra") throw InputError("--direction must be co or contra");
    const auto s = ainerve_check_fibration_json(read_file(o.input).c_str(), o.cap,
                                                o.direction == "co" ? AINERVE_CO : AINERVE_CONTRA, &out.p);
    ok(s);
    const auto j = nlohmann::json::parse(out.str());
    std::string summary = "inner_fibration: " + pass_fail(j["inner_fibration"], "pass") +
                          ", cocartesian: " + pass_fail(j["cocartesian"], "pass");
    if (j["equivalence_lifts"]["checked"].get<bool>()) summary += ", equivalence_lifts: " + pass_fail(j["equivalence_lifts"], "pass");
    deliver(o, out.str(), summary);
    return finish(s);
  }
  if (command == "generate") {
    Category c;
    ok(ainerve_category_generate(o.seed, o.max_objects, &c.p));
    ok(ainerve_category_to_json(c.p, &out.p));
    deliver(o, out.str(), "");
    return kExitPass;
  }
  throw InputError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite A-infinity categories over F2: nerves, horns, homotopy categories, colimits and fibrations."};
  app.require_subcommand(1);
  Options o;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write the JSON result here (atomically)"); };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "Truncation dimension")->capture_default_str(); };

  auto* check_ainf = app.add_subcommand("check-ainf", "Check the A-infinity relations and strict units");
  check_ainf->add_option("category", o.input)->required();
  check_ainf->add_option("--dmax", o.dmax, "Highest relation arity")->capture_default_str();
  add_out(check_ainf);

  auto* nerve = app.add_subcommand("nerve", "Nerve truncation of a category");
  nerve->add_option("category", o.input)->required();
  add_cap(nerve);
  nerve->add_option("--limit", o.limit, "Fail once a dimension has more simplices (0 = none)");
  add_out(nerve);

  auto* fill = app.add_subcommand("fill-horn", "Fill an inner horn of the nerve");
  fill->add_option("category", o.input)->required();
  fill->add_option("horn", o.second, "Nerve simplex with the two top entries missing")->required();
  fill->add_option("--n", o.n)->required();
  fill->add_option("--k", o.k)->required();
  add_out(fill);

  auto* enumerate = app.add_subcommand("enumerate", "List the n-simplices of the nerve");
  enumerate->add_option("category", o.input)->required();
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--limit", o.limit, "Fail beyond this many simplices (0 = none)");
  add_out(enumerate);

  for (const char* name : {"tau", "tau0", "kan-subcomplex", "check-qcat", "check-kan"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "tau"            ? "Homotopy category"
                                         : std::string(name) == "tau0"         ? "Isomorphism classes of objects"
                                         : std::string(name) == "kan-subcomplex" ? "Maximal Kan subcomplex"
                                         : std::string(name) == "check-qcat"   ? "Inner horn filling up to the cap"
                                                                               : "Horn filling up to the cap");
    sub->add_option("input", o.input, "Simplicial set, nerve, colimit or category file")->required();
    add_cap(sub);
    add_out(sub);
  }

  auto* colimit = app.add_subcommand("colimit", "Colimit of the nerves of a diagram");
  colimit->add_option("diagram", o.input)->required();
  add_cap(colimit);
  colimit->add_option("--limit", o.limit, "Fail once a base simplex has more simplices (0 = none)");
  add_out(colimit);

  auto* fib = app.add_subcommand("check-fibration", "Inner and co-Cartesian fibration checks");
  fib->add_option("input", o.input, "Colimit file or map file")->required();
  add_cap(fib);
  fib->add_option("--direction", o.direction, "co or contra")->capture_default_str();
  add_out(fib);

  auto* gen = app.add_subcommand("generate", "Random valid category");
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_option("--max-objects", o.max_objects, "Upper bound on objects (0 = generator default)");
  add_out(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
