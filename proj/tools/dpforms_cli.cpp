// Copyright 2026 The dpforms Authors
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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "dpforms/dpforms.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { dpf_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SubgroupDeleter {
  void operator()(dpf_subgroup* g) const { dpf_subgroup_free(g); }
};
using OwnedSubgroup = std::unique_ptr<dpf_subgroup, SubgroupDeleter>;

struct ModelDeleter {
  void operator()(dpf_model* m) const { dpf_model_free(m); }
};
using OwnedModel = std::unique_ptr<dpf_model, ModelDeleter>;

// Thrown on a failed C call; carries the exit code.
struct Failure {
  int code;
};

const char* KindName(dpf_status s) {
  switch (s) {
    case DPF_ERR_DOMAIN: return "domain";
    case DPF_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DPF_ERR_INTERNAL: return "internal";
    default: return "ok";
  }
}

void Check(dpf_status s) {
  if (s == DPF_OK) return;
  Json err{{"error", {{"kind", KindName(s)}, {"message", dpf_last_error()}}}};
  if (s == DPF_ERR_INVALID_ARGUMENT) {
    std::cerr << err.dump() << "\n";
    throw Failure{kExitUsage};
  }
  std::cout << err.dump(2) << "\n";
  throw Failure{kExitDomain};
}

Json TakeJson(char* raw) {
  OwnedString s(raw);
  return Json::parse(s.get());
}

OwnedSubgroup ParseGroup(const std::string& gens, int degree) {
  dpf_subgroup* g = nullptr;
  Check(dpf_subgroup_parse(gens.c_str(), degree, &g));
  return OwnedSubgroup(g);
}

std::string Pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size() + 2, ' ');
}

int RunClasses(int degree, bool json) {
  char* raw = nullptr;
  Check(dpf_classes_json(degree, &raw));
  Json j = TakeJson(raw);
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t w = 5;
  for (const auto& row : j["classes"]) w = std::max(w, row["label"].get<std::string>().size());
  std::cout << Pad("type", w) << "order  generators\n";
  for (const auto& row : j["classes"]) {
    std::ostringstream order;
    order << std::setw(5) << row["order"].get<int>();
    std::cout << Pad(row["label"].get<std::string>(), w) << order.str() << "  "
              << row["generators"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int RunAutTable(bool json) {
  char* raw = nullptr;
  Check(dpf_aut_table_json(&raw));
  Json j = TakeJson(raw);
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t w = 4;
  for (const auto& row : j["rows"]) w = std::max(w, row["type"].get<std::string>().size());
  std::cout << Pad("type", w) << "Aut\n";
  for (const auto& row : j["rows"]) {
    std::cout << Pad(row["type"].get<std::string>(), w) << row["aut"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int RunGraph(int degree, const std::string& orbits, bool have_orbits) {
  char* raw = nullptr;
  Check(dpf_graph_dot(degree, have_orbits ? orbits.c_str() : nullptr, &raw));
  OwnedString s(raw);
  std::cout << s.get();
  return kExitOk;
}

int RunRealize(const std::string& field, int degree, const std::string& type) {
  dpf_model* m = nullptr;
  Check(dpf_realize(field.c_str(), degree, type.c_str(), &m));
  OwnedModel model(m);
  char* raw = nullptr;
  Check(dpf_model_to_json(model.get(), &raw));
  OwnedString s(raw);
  std::cout << s.get() << "\n";
  return kExitOk;
}

int RunVerify(const std::string& input, bool json) {
  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "cannot read " << input << "\n";
      return kExitUsage;
    }
    buf << f.rdbuf();
  }
  dpf_model* m = nullptr;
  Check(dpf_model_from_json(buf.str().c_str(), &m));
  OwnedModel model(m);
  int all = 0;
  char* raw = nullptr;
  Check(dpf_model_verify(model.get(), &all, &raw));
  Json report = TakeJson(raw);
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& c : report["checks"]) {
      std::cout << c["result"].get<std::string>() << "  " << c["check"].get<std::string>();
      std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) std::cout << "  " << detail;
      std::cout << "\n";
    }
    std::cout << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? kExitOk : kExitDomain;
}

int RunMinimal(const std::string& group, const std::string& galois, const std::string& capability) {
  auto g = ParseGroup(group, 5);
  char* raw = nullptr;
  if (!capability.empty()) {
    Check(dpf_g_minimal_exists_json(g.get(), capability.c_str(), &raw));
  } else {
    auto h = ParseGroup(galois, 5);
    Check(dpf_minimal_json(g.get(), h.get(), &raw));
  }
  std::cout << TakeJson(raw).dump(2) << "\n";
  return kExitOk;
}

int RunBlowdown(const std::string& subgroup, const std::string& vertex) {
  auto h = ParseGroup(subgroup, 5);
  char* raw = nullptr;
  Check(dpf_blowdown_json(h.get(), vertex.c_str(), &raw));
  std::cout << TakeJson(raw).dump(2) << "\n";
  return kExitOk;
}

int RunCheckPaper(bool json) {
  int all = 0;
  char* raw = nullptr;
  Check(dpf_check_paper_json(&all, &raw));
  Json j = TakeJson(raw);
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : j["criteria"]) {
      std::ostringstream line;
      line << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << std::setw(2)
           << c["criterion"].get<int>() << "  " << c["title"].get<std::string>() << "  ("
           << std::fixed << std::setprecision(3) << c["seconds"].get<double>() << " s";
      if (c["budget_seconds"].get<double>() > 0) {
        line << " of " << std::setprecision(0) << c["budget_seconds"].get<double>() << " s";
      }
      line << ")  " << c["detail"].get<std::string>();
      std::cout << line.str() << "\n";
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  }
  return all ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois types of del Pezzo surfaces of degree 5 and 6"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dpf_version());

  int degree = 5;
  bool json = false;

  auto* classes = app.add_subcommand("classes", "List the conjugacy classes of types");
  classes->add_option("--degree", degree, "5 or 6")->check(CLI::IsMember({5, 6}));
  classes->add_flag("--json", json, "JSON output");

  auto* aut = app.add_subcommand("aut-table", "Automorphism group of each degree 5 type");
  aut->add_flag("--json", json, "JSON output");

  std::string orbits;
  auto* graph = app.add_subcommand("graph", "Graph of (-1)-curves in DOT form");
  graph->add_option("--degree", degree, "5 or 6")->check(CLI::IsMember({5, 6}));
  graph->add_flag("--dot", "DOT output (the only format)");
  auto* orbits_opt = graph->add_option("--orbits", orbits, "generators coloring vertex orbits");

  std::string field, type;
  auto* realize = app.add_subcommand("realize", "Realize a type over a finite field");
  realize->add_option("--field", field, "base field size, e.g. 4 or 2^2")->required();
  realize->add_option("--degree", degree, "5 or 6")->check(CLI::IsMember({5, 6}));
  realize->add_option("--type", type, "type label, e.g. \"[Z/3Z]\"")->required();
  realize->add_flag("--json", "JSON output (the only format)");

  std::string input;
  auto* verify = app.add_subcommand("verify", "Recheck a surface model");
  verify->add_option("--input", input, "model JSON file, - for stdin")->required();
  verify->add_flag("--json", json, "JSON report");

  std::string group, galois = "()", capability;
  auto* minimal = app.add_subcommand("minimal", "G-minimality of a surface");
  minimal->add_option("--group", group, "generators of G")->required();
  auto* galois_opt = minimal->add_option("--galois", galois, "generators of the Galois image");
  minimal->add_option("--capability", capability,
                      "instead decide existence: finite:Q, number_field or custom:[A],...")
      ->excludes(galois_opt);

  std::string subgroup, vertex;
  auto* blowdown = app.add_subcommand("blowdown", "Degree 6 type after blowing down a vertex");
  blowdown->add_option("--subgroup", subgroup, "generators in S5")->required();
  blowdown->add_option("--vertex", vertex, "invariant vertex, e.g. {4,5}")->required();

  auto* check = app.add_subcommand("check-paper", "Run the acceptance suite");
  check->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classes) return RunClasses(degree, json);
    if (*aut) return RunAutTable(json);
    if (*graph) return RunGraph(degree, orbits, orbits_opt->count() > 0);
    if (*realize) return RunRealize(field, degree, type);
    if (*verify) return RunVerify(input, json);
    if (*minimal) return RunMinimal(group, galois, capability);
    if (*blowdown) return RunBlowdown(subgroup, vertex);
    if (*check) return RunCheckPaper(json);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
