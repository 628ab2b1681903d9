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

#ifndef DPFORMS_CORE_CLASSES_HPP_
#define DPFORMS_CORE_CLASSES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subgroup.hpp"

namespace dpforms {

// Name of a conjugacy class of subgroups: of S5 when degree_context is 5,
// of the hexagon automorphism group (S3 x Z/2) when it is 6.
struct ClassLabel {
  int degree_context = 5;
  std::string name;

  bool operator==(const ClassLabel&) const = default;
};

struct SubgroupClass {
  ClassLabel label;
  // Fixed representative. For degree 6 this acts on the six hexagon vertices.
  Subgroup representative;
  // Number of subgroups in the class.
  std::size_t size = 0;
  // Degree 6 only: the same subgroup pulled back to S5 through the standard
  // embedding (S3 on {1,2,3}, Z/2 generated by (4 5)).
  std::optional<Subgroup> embedded;
};

// S5 for degree 5; the twelve automorphisms of the hexagon for degree 6.
const Subgroup& AmbientGroup(int degree_context);

// Every subgroup of the ambient group (156 for S5, 16 for the hexagon group).
const std::vector<Subgroup>& AllAmbientSubgroups(int degree_context);

// One entry per conjugacy class in a fixed order (19 for degree 5, 10 for
// degree 6). Computed by exhaustive enumeration and conjugacy partition.
const std::vector<SubgroupClass>& SubgroupClasses(int degree_context);

ClassLabel LabelOf(const Subgroup& h, int degree_context);

// Accepts the canonical name with or without the surrounding brackets.
const SubgroupClass& FindClass(int degree_context, std::string_view name);

// Canonical generator list of the representative, in cycle notation.
std::string RepresentativeText(const SubgroupClass& c);

}  // namespace dpforms

#endif  // DPFORMS_CORE_CLASSES_HPP_
