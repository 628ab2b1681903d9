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

#include "serialize.hpp"

#include "error.hpp"

namespace dpforms {

namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.contains(key)) ThrowInvalid(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    ThrowInvalid(std::string("bad value for '") + key + "'");
  }
}

FFElem ElemFromJson(const FieldRef& field, const Json& j) {
  if (!j.is_array()) ThrowInvalid("element must be a coefficient list");
  FpPoly coeffs;
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
      ThrowInvalid("coefficients must be nonnegative integers");
    }
    std::uint64_t v = c.get<std::uint64_t>();
    if (v >= field->p) ThrowInvalid("coefficient " + std::to_string(v) + " out of range");
    coeffs.push_back(static_cast<std::uint32_t>(v));
  }
  if (coeffs.size() > static_cast<std::size_t>(field->m)) {
    ThrowInvalid("element has more than " + std::to_string(field->m) + " coefficients");
  }
  return FFElem::FromCoeffs(field, coeffs);
}

Json PolyJson(const FpPoly& p) {
  Json arr = Json::array();
  for (auto c : p) arr.push_back(c);
  return arr;
}

}  // namespace

Json ToJson(const PicClass& c) {
  return Json{{"basis", BasisName(c.degree_context)}, {"coords", c.coords}};
}

PicClass PicClassFromJson(const Json& j) {
  std::string basis = Field<std::string>(j, "basis");
  int ctx = basis == BasisName(5) ? 5 : basis == BasisName(6) ? 6 : 0;
  if (ctx == 0) ThrowInvalid("unknown basis '" + basis + "'");
  PicClass c{ctx, Field<std::vector<long long>>(j, "coords")};
  if (static_cast<int>(c.coords.size()) != PicardRank(ctx)) ThrowInvalid("wrong coordinate count");
  return c;
}

Json ToJson(const SurfaceModel& m) {
  Json j;
  j["degree"] = m.degree;
  j["field"] = m.field->ToString();
  j["modulus"] = PolyJson(m.field->modulus);
  j["construction"] = ConstructionName(m.construction);
  Json pts = Json::array();
  for (const PlanePoint& p : m.config.points) {
    Json pt = Json::array();
    for (const FFElem& c : p.coords()) pt.push_back(c.ToCoeffList());
    pts.push_back(pt);
  }
  j["points"] = pts;
  j["on_conic"] = m.config.on_conic;
  j["frobenius_perm"] = m.frobenius_perm.ToString();
  j["type"] = m.type_label.name;
  if (m.degree == 6) {
    if (m.degree5_label) j["degree5_type"] = m.degree5_label->name;
    if (m.blowdown_vertex) j["blowdown_vertex"] = m.blowdown_vertex->ToString();
    if (m.hexagon_perm) j["hexagon_perm"] = m.hexagon_perm->ToString();
  }
  return j;
}

SurfaceModel ModelFromJson(const Json& j) {
  if (!j.is_object()) ThrowInvalid("model must be a JSON object");
  SurfaceModel m;
  m.degree = Field<int>(j, "degree");
  if (m.degree != 5 && m.degree != 6) ThrowInvalid("degree must be 5 or 6");
  m.field = ParseFieldLiteral(Field<std::string>(j, "field"));
  if (j.contains("modulus") && Field<FpPoly>(j, "modulus") != m.field->modulus) {
    ThrowInvalid("modulus does not match the canonical modulus of " + m.field->ToString());
  }
  m.construction = ParseConstruction(Field<std::string>(j, "construction"));
  m.config.field = m.field;
  m.config.on_conic = Field<bool>(j, "on_conic");
  const Json& pts = j.at("points");
  if (!pts.is_array()) ThrowInvalid("points must be a list");
  for (const Json& pt : pts) {
    if (!pt.is_array() || pt.size() != 3) ThrowInvalid("each point needs three coordinates");
    m.config.points.emplace_back(ElemFromJson(m.field, pt[0]), ElemFromJson(m.field, pt[1]),
                                 ElemFromJson(m.field, pt[2]));
  }
  m.frobenius_perm = Perm::Parse(Field<std::string>(j, "frobenius_perm"), 5);
  m.type_label = FindClass(m.degree, Field<std::string>(j, "type")).label;
  if (m.degree == 6) {
    if (j.contains("degree5_type")) {
      m.degree5_label = FindClass(5, Field<std::string>(j, "degree5_type")).label;
    }
    if (j.contains("blowdown_vertex")) {
      m.blowdown_vertex = Vertex::Parse(Field<std::string>(j, "blowdown_vertex"));
    }
    if (j.contains("hexagon_perm")) {
      m.hexagon_perm = Perm::Parse(Field<std::string>(j, "hexagon_perm"), 6);
    }
  }
  return m;
}

Json ToJson(const std::vector<Check>& checks) {
  Json arr = Json::array();
  bool all = true;
  for (const Check& c : checks) {
    arr.push_back({{"check", c.name}, {"result", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}});
    all = all && c.passed;
  }
  return Json{{"passed", all}, {"checks", arr}};
}

Json ClassesJson(int degree_context) {
  Json arr = Json::array();
  for (const SubgroupClass& c : SubgroupClasses(degree_context)) {
    Json row{{"label", c.label.name},
             {"order", c.representative.order()},
             {"generators", RepresentativeText(c)},
             {"class_size", c.size},
             {"cyclic", c.representative.IsCyclic()}};
    if (c.embedded) {
      std::string gens;
      for (const Perm& g : c.embedded->generators()) gens += (gens.empty() ? "" : ",") + g.ToString();
      row["generators_in_s5"] = gens.empty() ? "()" : gens;
    } else {
      row["structure"] = StructureName(c.representative);
      row["complexity"] = Complexity(c.representative);
    }
    arr.push_back(row);
  }
  return Json{{"degree", degree_context}, {"classes", arr}};
}

Json AutTableJson() {
  Json arr = Json::array();
  for (const AutDescription& row : AutTable()) {
    std::string gens;
    for (const Perm& g : row.aut_group.generators()) gens += (gens.empty() ? "" : ",") + g.ToString();
    arr.push_back({{"type", row.label.name},
                   {"aut", row.aut_name},
                   {"order", row.aut_group.order()},
                   {"generators", gens.empty() ? "()" : gens}});
  }
  return Json{{"rows", arr}};
}

}  // namespace dpforms
