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

#ifndef DPFORMS_CORE_PICARD_HPP_
#define DPFORMS_CORE_PICARD_HPP_

#include <span>
#include <string>
#include <vector>

#include "curve_graph.hpp"
#include "perm.hpp"
#include "subgroup.hpp"

namespace dpforms {

using IntMatrix = std::vector<std::vector<long long>>;

// A class in Pic of the blow-up model, in the basis (H, E1, ..., Er):
// r = 4 for degree 5 and r = 3 for degree 6. H.H = 1, Ei.Ei = -1, all other
// basis products vanish.
struct PicClass {
  int degree_context = 5;
  std::vector<long long> coords;

  static PicClass Zero(int degree_context);
  static PicClass H(int degree_context);
  static PicClass E(int degree_context, int i);  // i is 1-based

  PicClass operator+(const PicClass& o) const;
  PicClass operator-(const PicClass& o) const;
  PicClass operator*(long long k) const;
  bool operator==(const PicClass&) const = default;

  // e.g. "H-E1-E2", "2H-E1-E2-E3-E4", "-3H+E1+E2+E3+E4".
  std::string ToString() const;
};

int PicardRank(int degree_context);
long long Intersect(const PicClass& a, const PicClass& b);
// K = -3H + sum Ei
PicClass CanonicalClass(int degree_context);
// "H,E1,E2,E3,E4" or "H,E1,E2,E3"
std::string BasisName(int degree_context);

struct LabeledClass {
  PicClass cls;
  Vertex label;
};

// The (-1)-classes with their graph labels: Ei -> {i,5}; H-Ei-Ej -> the
// complement of {i,j} in {1,2,3,4} (degree 5) or {m,4} with {i,j,m} =
// {1,2,3} (degree 6).
std::vector<LabeledClass> MinusOneClasses(int degree_context);

// Degree 5: H-E1, ..., H-E4, 2H-E1-E2-E3-E4. Entry k corresponds to point
// k+1 of {1..5}.
std::vector<PicClass> ConicClasses();

// Integer matrix whose columns are the images of the basis classes.
struct LatticeAction {
  int degree_context = 5;
  IntMatrix matrix;

  PicClass Apply(const PicClass& c) const;
  bool PreservesForm() const;
  bool FixesCanonical() const;
};

// Unique lattice automorphism permuting the (-1)-classes like `vertex_perm`
// permutes the curve-graph vertices.
LatticeAction LatticeActionOnVertices(int degree_context, const Perm& vertex_perm);
// Degree 5, through GraphAction.
LatticeAction InducedLatticeAction(const Perm& s);

// Rank over Q of an integer matrix, by fraction-free elimination.
int IntegerRank(IntMatrix rows);

// Rank of the sublattice fixed by every action. With
// `orthogonal_to_canonical`, only fixed classes orthogonal to K count.
int FixedRank(std::span<const LatticeAction> actions, bool orthogonal_to_canonical = false);

// Rank of the sublattice of Pic fixed by every element of h (degree 5).
int InvariantRank(const Subgroup& h);

// Orbit count of h on the five conic classes, via the lattice action.
int ConicOrbitCount(const Subgroup& h);

struct MinimalityReport {
  bool minimal = false;
  Subgroup delta;
  int invariant_rank = 0;
};

// G-minimality for automorphism group G and Galois image, both in S5. Throws
// a domain error unless G centralizes the Galois image. The order-5 criterion
// is cross-checked against the invariant rank.
MinimalityReport AnalyzeMinimality(const Subgroup& g, const Subgroup& galois_image);
bool IsGMinimal(const Subgroup& g, const Subgroup& galois_image);

}  // namespace dpforms

#endif  // DPFORMS_CORE_PICARD_HPP_
