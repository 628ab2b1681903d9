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

#ifndef DPFORMS_CORE_TYPING_HPP_
#define DPFORMS_CORE_TYPING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classes.hpp"
#include "subgroup.hpp"

namespace dpforms {

// Which Galois groups a base field admits.
struct FieldCapability {
  enum class Kind { kFinite, kNumberField, kCustom };
  Kind kind = Kind::kFinite;
  std::uint64_t q = 2;  // kFinite only
  // kCustom only: degree 5 class names whose representatives occur as
  // Galois groups. Matching is up to isomorphism; the trivial group is
  // always included.
  std::vector<std::string> groups;

  static FieldCapability Finite(std::uint64_t q);
  static FieldCapability NumberField();
  static FieldCapability Custom(std::vector<std::string> groups);
  // "finite:Q", "number_field" or "custom:[A],[B],..."
  static FieldCapability Parse(std::string_view text);
  std::string ToString() const;
};

// Whether a surface of this type exists over a field with the capability,
// i.e. whether the field has a Galois extension with group isomorphic to the
// class representative.
bool Realizable(const ClassLabel& label, const FieldCapability& cap);

struct AutDescription {
  ClassLabel label;
  std::string aut_name;  // e.g. "S3xZ/2Z"
  Subgroup aut_group;    // the centralizer of the representative
};

// Structural name of a subgroup of S5 up to isomorphism.
std::string StructureName(const Subgroup& g);

// One row per degree 5 class, in class order.
const std::vector<AutDescription>& AutTable();

struct GMinimalAnswer {
  bool exists = false;
  std::optional<ClassLabel> witness;
  int condition = 0;  // 1 or 2 when exists
};

GMinimalAnswer GMinimalExists(const Subgroup& g, const FieldCapability& cap);

}  // namespace dpforms

#endif  // DPFORMS_CORE_TYPING_HPP_
