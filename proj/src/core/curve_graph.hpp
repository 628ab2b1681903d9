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

#ifndef DPFORMS_CORE_CURVE_GRAPH_HPP_
#define DPFORMS_CORE_CURVE_GRAPH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "classes.hpp"
#include "perm.hpp"
#include "subgroup.hpp"

namespace dpforms {

// A vertex is a 2-subset {a, b} of {1..5}, a < b.
struct Vertex {
  int a = 0;
  int b = 0;

  static Vertex Of(int x, int y);
  // Parses "{i,j}" (braces optional).
  static Vertex Parse(std::string_view text);
  std::string ToString() const;
  bool Disjoint(const Vertex& o) const {
    return a != o.a && a != o.b && b != o.a && b != o.b;
  }
  auto operator<=>(const Vertex&) const = default;
};

// Intersection graph of (-1)-curves. Degree 5: the Kneser graph KG(5,2) on all
// ten 2-subsets in lexicographic order. Degree 6: the hexagon on {i,4},{i,5}
// (i = 1,2,3) listed in cycle order. Adjacency is disjointness in both cases.
struct CurveGraph {
  int degree_context = 5;
  std::vector<Vertex> vertices;
  std::vector<std::vector<bool>> adjacency;

  int IndexOf(const Vertex& v) const;
  std::size_t EdgeCount() const;
  bool Preserves(const Perm& vertex_perm) const;
};

const CurveGraph& GetCurveGraph(int degree_context);

// Induced action {i,j} -> {s(i), s(j)} on the ten Kneser vertices.
Perm GraphAction(const Perm& s);
Subgroup GraphActionGroup(const Subgroup& h);

// Automorphisms found by backtracking over vertex assignments, independent of
// any group-theoretic description of the graph. Sorted.
std::vector<Perm> BruteForceAutomorphisms(const CurveGraph& g);

std::vector<Vertex> InvariantVertices(const Subgroup& h);

// Smallest nonempty h-invariant independent vertex set (ties broken by the
// lowest bitmask), or nullopt when none exists.
std::optional<std::vector<Vertex>> InvariantIndependentSet(const Subgroup& h);

Subgroup VertexStabilizer(const Vertex& v);

// Smallest s in S5 (image order) with s({4,5}) == v.
Perm StandardPositionConjugator(const Vertex& v);

// For s fixing {4,5}: its action on the hexagon of vertices meeting {4,5} in
// one point, as a permutation of hexagon positions.
Perm HexagonRestriction(const Perm& s);

struct BlowdownResult {
  Subgroup hexagon_group;
  ClassLabel label;
  Perm conjugator;  // s with s({4,5}) == v used to reach standard position
};

// Throws "not in stabilizer" unless every element of h fixes v.
BlowdownResult BlowdownAction(const Subgroup& h, const Vertex& v);

// Graphviz export. With `orbit_group` (acting on vertex positions), vertices
// are filled by orbit.
std::string ToDot(const CurveGraph& g, const Subgroup* orbit_group = nullptr);

}  // namespace dpforms

#endif  // DPFORMS_CORE_CURVE_GRAPH_HPP_
