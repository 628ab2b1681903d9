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

#include <doctest.h>

#include <json.hpp>

#include <string>

#include "dpforms/dpforms.h"

namespace {

using Json = nlohmann::json;

std::string Take(char* s) {
  std::string out = s ? s : "";
  dpf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("classes and aut table") {
  char* out = nullptr;
  REQUIRE(dpf_classes_json(5, &out) == DPF_OK);
  CHECK(Json::parse(Take(out))["classes"].size() == 19);
  REQUIRE(dpf_classes_json(6, &out) == DPF_OK);
  CHECK(Json::parse(Take(out))["classes"].size() == 10);
  CHECK(dpf_classes_json(7, &out) == DPF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dpf_last_error()).find("unsupported degree") != std::string::npos);
  REQUIRE(dpf_aut_table_json(&out) == DPF_OK);
  Json t = Json::parse(Take(out));
  CHECK(t["rows"].size() == 19);
  CHECK(t["rows"][0]["aut"] == "S5");
}

TEST_CASE("subgroup handles") {
  dpf_subgroup* g = nullptr;
  REQUIRE(dpf_subgroup_parse("(1 2 3),(1 2)(4 5)", 5, &g) == DPF_OK);
  size_t order = 0;
  CHECK(dpf_subgroup_order(g, &order) == DPF_OK);
  CHECK(order == 6);
  char* label = nullptr;
  REQUIRE(dpf_subgroup_label(g, 5, &label) == DPF_OK);
  CHECK(Take(label) == "[<(1,2,3),(1,2)(4,5)>]");
  dpf_subgroup_free(g);
  CHECK(dpf_subgroup_parse("(1 2", 5, &g) == DPF_ERR_INVALID_ARGUMENT);
  CHECK(dpf_subgroup_order(nullptr, &order) == DPF_ERR_INVALID_ARGUMENT);
  dpf_subgroup_free(nullptr);
}

TEST_CASE("realize, serialize and verify") {
  dpf_model* m = nullptr;
  REQUIRE(dpf_realize("2", 5, "[Z/3Z]", &m) == DPF_OK);
  char* json = nullptr;
  REQUIRE(dpf_model_to_json(m, &json) == DPF_OK);
  std::string text = Take(json);
  CHECK(Json::parse(text)["construction"] == "fourpoints");
  dpf_model_free(m);

  dpf_model* back = nullptr;
  REQUIRE(dpf_model_from_json(text.c_str(), &back) == DPF_OK);
  int ok = 0;
  char* report = nullptr;
  REQUIRE(dpf_model_verify(back, &ok, &report) == DPF_OK);
  CHECK(ok == 1);
  CHECK(Json::parse(Take(report))["passed"] == true);
  dpf_model_free(back);

  Json broken = Json::parse(text);
  broken["type"] = "[Z/6Z]";
  REQUIRE(dpf_model_from_json(broken.dump().c_str(), &back) == DPF_OK);
  REQUIRE(dpf_model_verify(back, &ok, &report) == DPF_OK);
  CHECK(ok == 0);
  Take(report);
  dpf_model_free(back);

  CHECK(dpf_model_from_json("{", &back) == DPF_ERR_INVALID_ARGUMENT);
  CHECK(dpf_realize("2", 5, "[S4]", &m) == DPF_ERR_DOMAIN);
  CHECK(std::string(dpf_last_error()) ==
        "type [S4] not realizable over a finite field: H must be cyclic");
  CHECK(dpf_realize("6", 5, "[e]", &m) == DPF_ERR_INVALID_ARGUMENT);
  CHECK(dpf_realize("2", 6, "[Z/6]", &m) == DPF_OK);
  dpf_model_free(m);
}

TEST_CASE("minimality and blow-down") {
  dpf_subgroup* g = nullptr;
  dpf_subgroup* h = nullptr;
  REQUIRE(dpf_subgroup_parse("()", 5, &g) == DPF_OK);
  REQUIRE(dpf_subgroup_parse("(1 2 3 4 5)", 5, &h) == DPF_OK);
  char* out = nullptr;
  REQUIRE(dpf_minimal_json(g, h, &out) == DPF_OK);
  Json j = Json::parse(Take(out));
  CHECK(j["minimal"] == true);
  CHECK(j["invariant_rank"] == 1);
  REQUIRE(dpf_g_minimal_exists_json(g, "finite:4", &out) == DPF_OK);
  CHECK(Json::parse(Take(out))["witness"] == "[Z/5Z]");
  CHECK(dpf_blowdown_json(h, "{4,5}", &out) == DPF_ERR_DOMAIN);
  CHECK(std::string(dpf_last_error()) == "not in stabilizer");
  dpf_subgroup_free(g);
  dpf_subgroup_free(h);

  REQUIRE(dpf_subgroup_parse("(4 5)", 5, &g) == DPF_OK);
  REQUIRE(dpf_blowdown_json(g, "{4,5}", &out) == DPF_OK);
  CHECK(Json::parse(Take(out))["type"] == "[<(id,1)>]");
  dpf_subgroup_free(g);
}

TEST_CASE("graph export") {
  char* out = nullptr;
  REQUIRE(dpf_graph_dot(5, nullptr, &out) == DPF_OK);
  CHECK(Take(out).find("graph dp5_curves") == 0);
  REQUIRE(dpf_graph_dot(6, "(1 4)(2 5)(3 6)", &out) == DPF_OK);
  CHECK(Take(out).find("orbit=2") != std::string::npos);
  CHECK(dpf_graph_dot(3, nullptr, &out) == DPF_ERR_INVALID_ARGUMENT);
}
