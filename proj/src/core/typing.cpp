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

#include "typing.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "error.hpp"
#include "finite_field.hpp"
#include "perm.hpp"

namespace dpforms {

FieldCapability FieldCapability::Finite(std::uint64_t q) {
  FieldCapability c;
  c.kind = Kind::kFinite;
  c.q = q;
  return c;
}

FieldCapability FieldCapability::NumberField() {
  FieldCapability c;
  c.kind = Kind::kNumberField;
  return c;
}

FieldCapability FieldCapability::Custom(std::vector<std::string> groups) {
  FieldCapability c;
  c.kind = Kind::kCustom;
  for (auto& g : groups) c.groups.push_back(FindClass(5, g).label.name);
  return c;
}

FieldCapability FieldCapability::Parse(std::string_view text) {
  if (text == "number_field") return NumberField();
  if (text.starts_with("finite:")) {
    auto rest = text.substr(7);
    std::uint64_t q = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), q);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      ThrowInvalid("bad field size in '" + std::string(text) + "'");
    }
    // Validates that q is a prime power.
    ParseBaseField(rest);
    return Finite(q);
  }
  if (text.starts_with("custom:")) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : text.substr(7)) {
      cur += ch;
      if (ch == ']') {
        while (!cur.empty() && (cur.front() == ',' || cur.front() == ' ')) cur.erase(0, 1);
        names.push_back(cur);
        cur.clear();
      }
    }
    return Custom(std::move(names));
  }
  ThrowInvalid("unknown field capability '" + std::string(text) + "'");
}

std::string FieldCapability::ToString() const {
  switch (kind) {
    case Kind::kFinite: return "finite:" + std::to_string(q);
    case Kind::kNumberField: return "number_field";
    case Kind::kCustom: {
      std::string s = "custom:";
      for (std::size_t i = 0; i < groups.size(); ++i) s += (i ? "," : "") + groups[i];
      return s;
    }
  }
  return "?";
}

bool Realizable(const ClassLabel& label, const FieldCapability& cap) {
  const SubgroupClass& c = FindClass(label.degree_context, label.name);
  switch (cap.kind) {
    case FieldCapability::Kind::kFinite:
      return c.representative.IsCyclic();
    case FieldCapability::Kind::kNumberField:
      // Solvable groups by Shafarevich, A5 and S5 classically.
      return true;
    case FieldCapability::Kind::kCustom: {
      // The trivial extension is always there.
      if (c.representative.IsTrivial()) return true;
      auto profile = ElementOrderProfile(c.representative);
      return std::any_of(cap.groups.begin(), cap.groups.end(), [&](const std::string& g) {
        return ElementOrderProfile(FindClass(5, g).representative) == profile;
      });
    }
  }
  return false;
}

std::string StructureName(const Subgroup& g) {
  static const std::map<std::vector<int>, std::string> kNames = [] {
    std::map<std::vector<int>, std::string> names;
    auto add = [&](std::string_view gens, const std::string& name) {
      Subgroup h = Generate(ParseGenerators(gens, 5), 5);
      names.emplace(ElementOrderProfile(h), name);
    };
    add("", "e");
    add("(1 2)", "Z/2Z");
    add("(1 2 3)", "Z/3Z");
    add("(1 2 3 4)", "Z/4Z");
    add("(1 2),(3 4)", "Z/2ZxZ/2Z");
    add("(1 2 3 4 5)", "Z/5Z");
    add("(1 2 3)(4 5)", "Z/6Z");
    add("(1 2 3),(1 2)", "S3");
    add("(1 2 3 4),(1 3)", "D4");
    add("(1 2 3 4 5),(2 5)(3 4)", "D5");
    add("(1 2 3),(1 2),(4 5)", "S3xZ/2Z");
    add("(1 2 3),(1 2)(3 4)", "A4");
    add("(1 2 3 4 5),(2 3 5 4)", "GA(1,5)");
    add("(1 2 3 4),(1 2)", "S4");
    add("(1 2 3 4 5),(1 2 3)", "A5");
    add("(1 2 3 4 5),(1 2)", "S5");
    return names;
  }();
  auto it = kNames.find(ElementOrderProfile(g));
  if (it == kNames.end()) ThrowInvalid("unrecognized group of order " + std::to_string(g.order()));
  return it->second;
}

const std::vector<AutDescription>& AutTable() {
  static const std::vector<AutDescription> table = [] {
    std::vector<AutDescription> rows;
    for (const SubgroupClass& c : SubgroupClasses(5)) {
      Subgroup cent = Centralizer(c.representative);
      rows.push_back({c.label, StructureName(cent), cent});
    }
    return rows;
  }();
  return table;
}

GMinimalAnswer GMinimalExists(const Subgroup& g, const FieldCapability& cap) {
  if (g.degree() != 5) ThrowInvalid("G must be a subgroup of S5");
  GMinimalAnswer answer;
  if (ContainsOrder5(g)) {
    // Type [e] exists over every field, with automorphism group S5.
    answer.exists = true;
    answer.condition = 1;
    answer.witness = ClassLabel{5, "[e]"};
    return answer;
  }
  if (!g.IsTrivial()) return answer;
  for (const SubgroupClass& c : SubgroupClasses(5)) {
    if (ContainsOrder5(c.representative) && Realizable(c.label, cap)) {
      answer.exists = true;
      answer.condition = 2;
      answer.witness = c.label;
      return answer;
    }
  }
  return answer;
}

}  // namespace dpforms
