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

#include "classes.hpp"

#include <algorithm>

#include "curve_graph.hpp"
#include "error.hpp"

namespace dpforms {

namespace {

struct ClassSeed {
  const char* name;
  const char* generators;  // in S5
};

// Degree 5: every conjugacy class of subgroups of S5, with the generators
// that name it.
constexpr ClassSeed kDegree5Seeds[] = {
    {"[e]", ""},
    {"[<(1,2)>]", "(1 2)"},
    {"[<(1,2)(3,4)>]", "(1 2)(3 4)"},
    {"[<(1,2),(3,4)>]", "(1 2),(3 4)"},
    {"[<(1,2)(3,4),(1,3)(2,4)>]", "(1 2)(3 4),(1 3)(2 4)"},
    {"[Z/3Z]", "(1 2 3)"},
    {"[Z/4Z]", "(1 2 3 4)"},
    {"[Z/5Z]", "(1 2 3 4 5)"},
    {"[Z/6Z]", "(1 2 3)(4 5)"},
    {"[D4]", "(1 2 3 4),(1 3)"},
    {"[D5]", "(1 2 3 4 5),(2 5)(3 4)"},
    {"[<(1,2,3),(1,2)>]", "(1 2 3),(1 2)"},
    {"[<(1,2,3),(1,2)(4,5)>]", "(1 2 3),(1 2)(4 5)"},
    {"[S3xZ/2Z]", "(1 2 3),(1 2),(4 5)"},
    {"[A4]", "(1 2 3),(1 2)(3 4)"},
    {"[A5]", "(1 2 3 4 5),(1 2 3)"},
    {"[S4]", "(1 2 3 4),(1 2)"},
    {"[S5]", "(1 2 3 4 5),(1 2)"},
    {"[GA(1,5)]", "(1 2 3 4 5),(2 3 5 4)"},
};

// Degree 6: S3 x Z/2 written through the standard embedding into S5, where
// S3 permutes {1,2,3} and the Z/2 factor is generated by (4 5).
constexpr ClassSeed kDegree6Seeds[] = {
    {"[e]", ""},
    {"[<((1,2),0)>]", "(1 2)"},
    {"[<((1,2),1)>]", "(1 2)(4 5)"},
    {"[<(id,1)>]", "(4 5)"},
    {"[Z/2xZ/2]", "(1 2),(4 5)"},
    {"[Z/3]", "(1 2 3)"},
    {"[Z/6]", "(1 2 3)(4 5)"},
    {"[<((1,2,3),0),((1,2),0)>]", "(1 2 3),(1 2)"},
    {"[<((1,2,3),0),((1,2),1)>]", "(1 2 3),(1 2)(4 5)"},
    {"[S3xZ/2]", "(1 2 3),(1 2),(4 5)"},
};

void CheckContext(int degree_context) {
  if (degree_context != 5 && degree_context != 6) {
    ThrowInvalid("unsupported degree " + std::to_string(degree_context));
  }
}

std::vector<SubgroupClass> BuildCatalog(int degree_context) {
  const Subgroup& ambient = AmbientGroup(degree_context);
  const auto& subgroups = AllAmbientSubgroups(degree_context);
  std::vector<SubgroupClass> out;
  std::vector<int> owner(subgroups.size(), -1);

  auto add = [&](const ClassSeed& seed) {
    SubgroupClass c;
    c.label = {degree_context, seed.name};
    Subgroup s5 = Generate(ParseGenerators(seed.generators, 5), 5);
    if (degree_context == 5) {
      c.representative = s5;
    } else {
      std::vector<Perm> gens;
      for (const Perm& g : s5.generators()) gens.push_back(HexagonRestriction(g));
      c.representative = Generate(gens, 6);
      c.embedded = s5;
    }
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      if (!ConjugatingElement(c.representative, subgroups[i], ambient)) continue;
      if (owner[i] >= 0) ThrowInternal("conjugacy classes overlap at " + c.label.name);
      owner[i] = static_cast<int>(out.size());
      ++c.size;
    }
    out.push_back(std::move(c));
  };
  if (degree_context == 5) {
    for (const auto& seed : kDegree5Seeds) add(seed);
  } else {
    for (const auto& seed : kDegree6Seeds) add(seed);
  }
  if (std::count(owner.begin(), owner.end(), -1) != 0) {
    ThrowInternal("some subgroup has no conjugacy class label");
  }
  return out;
}

}  // namespace

const Subgroup& AmbientGroup(int degree_context) {
  CheckContext(degree_context);
  if (degree_context == 5) return FullSymmetricGroup(5);
  static const Subgroup kHexagon =
      Generate(BruteForceAutomorphisms(GetCurveGraph(6)), 6);
  return kHexagon;
}

const std::vector<Subgroup>& AllAmbientSubgroups(int degree_context) {
  CheckContext(degree_context);
  static const std::vector<Subgroup> kDegree5 = AllSubgroups(AmbientGroup(5));
  static const std::vector<Subgroup> kDegree6 = AllSubgroups(AmbientGroup(6));
  return degree_context == 5 ? kDegree5 : kDegree6;
}

const std::vector<SubgroupClass>& SubgroupClasses(int degree_context) {
  CheckContext(degree_context);
  static const std::vector<SubgroupClass> kDegree5 = BuildCatalog(5);
  static const std::vector<SubgroupClass> kDegree6 = BuildCatalog(6);
  return degree_context == 5 ? kDegree5 : kDegree6;
}

ClassLabel LabelOf(const Subgroup& h, int degree_context) {
  const Subgroup& ambient = AmbientGroup(degree_context);
  if (!h.IsSubgroupOf(ambient)) {
    ThrowInvalid("group is not a subgroup of the degree " +
                 std::to_string(degree_context) + " ambient group");
  }
  const auto profile = ElementOrderProfile(h);
  for (const SubgroupClass& c : SubgroupClasses(degree_context)) {
    if (c.representative.order() != h.order()) continue;
    if (ElementOrderProfile(c.representative) != profile) continue;
    if (ConjugatingElement(h, c.representative, ambient)) return c.label;
  }
  ThrowInternal("subgroup matches no conjugacy class");
}

const SubgroupClass& FindClass(int degree_context, std::string_view name) {
  std::string key(name);
  key.erase(0, key.find_first_not_of(" \t"));
  key.erase(key.find_last_not_of(" \t") + 1);
  if (key.empty() || key.front() != '[') key = "[" + key + "]";
  for (const SubgroupClass& c : SubgroupClasses(degree_context)) {
    if (c.label.name == key) return c;
  }
  ThrowInvalid("unknown degree " + std::to_string(degree_context) + " type '" +
               std::string(name) + "'");
}

std::string RepresentativeText(const SubgroupClass& c) {
  const Subgroup& g = c.embedded ? *c.embedded : c.representative;
  if (g.generators().empty()) return "()";
  std::string s;
  for (const Perm& p : g.generators()) {
    if (!s.empty()) s += ", ";
    s += p.ToString();
  }
  return s;
}

}  // namespace dpforms
