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

#include <set>
#include <string>

#include "core/classes.hpp"
#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/picard.hpp"
#include "core/typing.hpp"

using namespace dpforms;

namespace {

Subgroup G(const char* gens) { return Generate(ParseGenerators(gens, 5), 5); }

std::string AutOf(const char* label) {
  for (const auto& row : AutTable()) {
    if (row.label.name == label) return row.aut_name;
  }
  return "?";
}

}  // namespace

TEST_CASE("automorphism table") {
  CHECK(AutTable().size() == 19);
  CHECK(AutOf("[e]") == "S5");
  CHECK(AutOf("[Z/3Z]") == "Z/6Z");
  CHECK(AutOf("[D4]") == "Z/2Z");
  std::set<std::string> trivial;
  for (const auto& row : AutTable()) {
    const Subgroup& rep = FindClass(5, row.label.name).representative;
    CHECK(row.aut_group == Centralizer(rep));
    CHECK(StructureName(row.aut_group) == row.aut_name);
    if (row.aut_group.IsTrivial()) trivial.insert(row.label.name);
    if (ContainsOrder5(rep)) CHECK((row.aut_name == "e" || row.aut_name == "Z/5Z"));
  }
  CHECK(trivial == std::set<std::string>{"[S5]", "[A5]", "[S4]", "[A4]", "[D5]", "[GA(1,5)]"});
}

TEST_CASE("realizability") {
  CHECK_FALSE(Realizable({5, "[S5]"}, FieldCapability::Finite(7)));
  CHECK(Realizable({5, "[A5]"}, FieldCapability::NumberField()));
  CHECK(Realizable({5, "[Z/6Z]"}, FieldCapability::Finite(2)));
  CHECK(RealizeDp5(ParseBaseField("2"), ClassLabel{5, "[Z/6Z]"}).type_label.name == "[Z/6Z]");
  CHECK(Realizable({6, "[Z/6]"}, FieldCapability::Finite(3)));
  CHECK_FALSE(Realizable({6, "[Z/2xZ/2]"}, FieldCapability::Finite(3)));

  // A field with only quadratic extensions and Klein four groups.
  auto two = FieldCapability::Custom({"[<(1,2)>]", "[<(1,2),(3,4)>]"});
  CHECK(Realizable({5, "[<(1,2)(3,4)>]"}, two));
  CHECK(Realizable({5, "[<(1,2)(3,4),(1,3)(2,4)>]"}, two));
  CHECK(Realizable({6, "[Z/2xZ/2]"}, two));
  CHECK_FALSE(Realizable({5, "[Z/4Z]"}, two));
  CHECK(Realizable({5, "[e]"}, FieldCapability::Custom({})));
}

TEST_CASE("capability text") {
  CHECK(FieldCapability::Parse("finite:9").q == 9);
  CHECK(FieldCapability::Parse("number_field").kind == FieldCapability::Kind::kNumberField);
  CHECK(FieldCapability::Parse("custom:[<(1,2)>],[A5]").groups.size() == 2);
  CHECK(FieldCapability::Parse("custom:[<(1,2)>],[A5]").ToString() == "custom:[<(1,2)>],[A5]");
  CHECK_THROWS_AS(FieldCapability::Parse("finite:6"), Error);
  CHECK_THROWS_AS(FieldCapability::Parse("reals"), Error);
}

TEST_CASE("G-minimal existence") {
  auto a = GMinimalExists(G("(1 2 3 4 5)"), FieldCapability::Finite(2));
  CHECK(a.exists);
  CHECK(a.witness->name == "[e]");
  auto b = GMinimalExists(Subgroup(5), FieldCapability::Finite(3));
  CHECK(b.exists);
  CHECK(b.witness->name == "[Z/5Z]");
  CHECK_FALSE(GMinimalExists(G("(1 2)"), FieldCapability::Finite(3)).exists);
  // Only 2-groups: no order five anywhere.
  auto two = FieldCapability::Custom({"[<(1,2)>]", "[Z/4Z]", "[D4]"});
  CHECK_FALSE(GMinimalExists(Subgroup(5), two).exists);
  auto d5 = GMinimalExists(Subgroup(5), FieldCapability::Custom({"[D5]"}));
  CHECK(d5.witness->name == "[D5]");
}

TEST_CASE("existence agrees with a search over Galois images") {
  for (const auto& cap : {FieldCapability::Finite(2), FieldCapability::NumberField(),
                          FieldCapability::Custom({"[<(1,2)>]", "[Z/4Z]"})}) {
    for (const Subgroup& g : AllAmbientSubgroups(5)) {
      bool brute = false;
      for (const Subgroup& h : AllAmbientSubgroups(5)) {
        if (!Realizable(LabelOf(h, 5), cap) || !g.IsSubgroupOf(Centralizer(h))) continue;
        if (IsGMinimal(g, h)) {
          brute = true;
          break;
        }
      }
      CHECK(GMinimalExists(g, cap).exists == brute);
    }
  }
}
