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

#ifndef DPFORMS_CORE_SERIALIZE_HPP_
#define DPFORMS_CORE_SERIALIZE_HPP_

#include <json.hpp>

#include "construct.hpp"
#include "picard.hpp"
#include "typing.hpp"

namespace dpforms {

using Json = nlohmann::ordered_json;

Json ToJson(const PicClass& c);
PicClass PicClassFromJson(const Json& j);

// {"degree", "field", "modulus", "construction", "points", "on_conic",
//  "frobenius_perm", "type"} plus, for degree 6, "degree5_type",
// "blowdown_vertex" and "hexagon_perm". Points are lists of three
// little-endian coefficient lists.
Json ToJson(const SurfaceModel& m);
// Rejects malformed documents and a modulus that disagrees with the field
// literal. Points are taken as given (normalized); nothing is re-derived.
SurfaceModel ModelFromJson(const Json& j);

Json ToJson(const std::vector<Check>& checks);
Json ClassesJson(int degree_context);
Json AutTableJson();

}  // namespace dpforms

#endif  // DPFORMS_CORE_SERIALIZE_HPP_
