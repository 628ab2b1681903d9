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

#include "dpforms/dpforms.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/acceptance.hpp"
#include "core/classes.hpp"
#include "core/construct.hpp"
#include "core/curve_graph.hpp"
#include "core/error.hpp"
#include "core/picard.hpp"
#include "core/serialize.hpp"
#include "core/typing.hpp"

struct dpf_subgroup {
  dpforms::Subgroup group;
};

struct dpf_model {
  dpforms::SurfaceModel model;
};

namespace {

using dpforms::Json;

thread_local std::string g_last_error;

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
dpf_status Guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return DPF_OK;
  } catch (const dpforms::Error& e) {
    g_last_error = e.what();
    switch (e.kind()) {
      case dpforms::ErrorKind::kDomain: return DPF_ERR_DOMAIN;
      case dpforms::ErrorKind::kInvalidArgument: return DPF_ERR_INVALID_ARGUMENT;
      case dpforms::ErrorKind::kInternal: return DPF_ERR_INTERNAL;
    }
    return DPF_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("bad JSON: ") + e.what();
    return DPF_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPF_ERR_INTERNAL;
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) dpforms::ThrowInvalid(std::string(what) + " is null");
}

std::string GeneratorText(const std::vector<dpforms::Perm>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ",") + g.ToString();
  return s.empty() ? "()" : s;
}

void Emit(const Json& j, char** out) { *out = Dup(j.dump(2)); }

}  // namespace

extern "C" {

const char* dpf_version(void) { return "0.1.0"; }

const char* dpf_last_error(void) { return g_last_error.c_str(); }

void dpf_string_free(char* s) { std::free(s); }

dpf_status dpf_subgroup_parse(const char* generators, int degree, dpf_subgroup** out) {
  return Guard([&] {
    Require(generators, "generators");
    Require(out, "out");
    if (degree < 1 || degree > dpforms::kMaxDegree) dpforms::ThrowInvalid("unsupported degree");
    auto gens = dpforms::ParseGenerators(generators, degree);
    *out = new dpf_subgroup{dpforms::Generate(gens, degree)};
  });
}

void dpf_subgroup_free(dpf_subgroup* g) { delete g; }

dpf_status dpf_subgroup_order(const dpf_subgroup* g, size_t* out) {
  return Guard([&] {
    Require(g, "subgroup");
    Require(out, "out");
    *out = g->group.order();
  });
}

dpf_status dpf_subgroup_label(const dpf_subgroup* g, int degree_context, char** out) {
  return Guard([&] {
    Require(g, "subgroup");
    Require(out, "out");
    *out = Dup(dpforms::LabelOf(g->group, degree_context).name);
  });
}

dpf_status dpf_classes_json(int degree_context, char** out) {
  return Guard([&] {
    Require(out, "out");
    if (degree_context != 5 && degree_context != 6) {
      dpforms::ThrowInvalid("unsupported degree " + std::to_string(degree_context));
    }
    Emit(dpforms::ClassesJson(degree_context), out);
  });
}

dpf_status dpf_aut_table_json(char** out) {
  return Guard([&] {
    Require(out, "out");
    Emit(dpforms::AutTableJson(), out);
  });
}

dpf_status dpf_graph_dot(int degree_context, const char* orbit_generators, char** out) {
  return Guard([&] {
    Require(out, "out");
    const dpforms::CurveGraph& graph = dpforms::GetCurveGraph(degree_context);
    if (orbit_generators == nullptr) {
      *out = Dup(dpforms::ToDot(graph));
      return;
    }
    dpforms::Subgroup on_vertices(static_cast<int>(graph.vertices.size()));
    if (degree_context == 5) {
      auto gens = dpforms::ParseGenerators(orbit_generators, 5);
      on_vertices = dpforms::GraphActionGroup(dpforms::Generate(gens, 5));
    } else {
      auto gens = dpforms::ParseGenerators(orbit_generators, 6);
      for (const auto& g : gens) {
        if (!graph.Preserves(g)) {
          dpforms::ThrowInvalid(g.ToString() + " is not a hexagon automorphism");
        }
      }
      on_vertices = dpforms::Generate(gens, 6);
    }
    *out = Dup(dpforms::ToDot(graph, &on_vertices));
  });
}

dpf_status dpf_realize(const char* field, int degree, const char* type_label, dpf_model** out) {
  return Guard([&] {
    Require(field, "field");
    Require(type_label, "type");
    Require(out, "out");
    dpforms::FieldRef base = dpforms::ParseBaseField(field);
    if (degree != 5 && degree != 6) dpforms::ThrowInvalid("degree must be 5 or 6");
    dpforms::ClassLabel label = dpforms::FindClass(degree, type_label).label;
    auto model = degree == 5 ? dpforms::RealizeDp5(base, label) : dpforms::RealizeDp6(base, label);
    *out = new dpf_model{std::move(model)};
  });
}

dpf_status dpf_model_from_json(const char* json, dpf_model** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new dpf_model{dpforms::ModelFromJson(Json::parse(json))};
  });
}

dpf_status dpf_model_to_json(const dpf_model* m, char** out) {
  return Guard([&] {
    Require(m, "model");
    Require(out, "out");
    Emit(dpforms::ToJson(m->model), out);
  });
}

void dpf_model_free(dpf_model* m) { delete m; }

dpf_status dpf_model_verify(const dpf_model* m, int* all_passed, char** report_json) {
  return Guard([&] {
    Require(m, "model");
    Require(all_passed, "all_passed");
    Require(report_json, "report_json");
    Json report = dpforms::ToJson(dpforms::VerifyModel(m->model));
    *all_passed = report["passed"].get<bool>() ? 1 : 0;
    Emit(report, report_json);
  });
}

dpf_status dpf_minimal_json(const dpf_subgroup* g, const dpf_subgroup* galois, char** out) {
  return Guard([&] {
    Require(g, "group");
    Require(galois, "galois");
    Require(out, "out");
    auto report = dpforms::AnalyzeMinimality(g->group, galois->group);
    Emit(Json{{"minimal", report.minimal},
              {"delta", GeneratorText(dpforms::GreedyGenerators(report.delta))},
              {"delta_order", report.delta.order()},
              {"delta_type", dpforms::LabelOf(report.delta, 5).name},
              {"invariant_rank", report.invariant_rank}},
         out);
  });
}

dpf_status dpf_blowdown_json(const dpf_subgroup* h, const char* vertex, char** out) {
  return Guard([&] {
    Require(h, "subgroup");
    Require(vertex, "vertex");
    Require(out, "out");
    auto v = dpforms::Vertex::Parse(vertex);
    auto result = dpforms::BlowdownAction(h->group, v);
    Emit(Json{{"vertex", v.ToString()},
              {"degree5_type", dpforms::LabelOf(h->group, 5).name},
              {"type", result.label.name},
              {"hexagon_generators",
               GeneratorText(dpforms::GreedyGenerators(result.hexagon_group))},
              {"order", result.hexagon_group.order()},
              {"conjugator", result.conjugator.ToString()}},
         out);
  });
}

dpf_status dpf_g_minimal_exists_json(const dpf_subgroup* g, const char* capability,
                                     char** out) {
  return Guard([&] {
    Require(g, "group");
    Require(capability, "capability");
    Require(out, "out");
    auto cap = dpforms::FieldCapability::Parse(capability);
    auto ans = dpforms::GMinimalExists(g->group, cap);
    Json j{{"capability", cap.ToString()}, {"exists", ans.exists}};
    if (ans.exists) {
      j["condition"] = ans.condition;
      j["witness"] = ans.witness->name;
    }
    Emit(j, out);
  });
}

dpf_status dpf_check_paper_json(int* all_passed, char** out) {
  return Guard([&] {
    Require(all_passed, "all_passed");
    Require(out, "out");
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : dpforms::RunAcceptance()) {
      rows.push_back({{"criterion", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"correct", r.correct},
                      {"seconds", r.seconds},
                      {"budget_seconds", r.budget_seconds},
                      {"detail", r.detail}});
      all = all && r.passed;
    }
    *all_passed = all ? 1 : 0;
    Emit(Json{{"passed", all}, {"criteria", rows}}, out);
  });
}

}  // extern "C"
