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

#ifndef DPFORMS_CORE_CONSTRUCT_HPP_
#define DPFORMS_CORE_CONSTRUCT_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "classes.hpp"
#include "curve_graph.hpp"
#include "finite_field.hpp"
#include "perm.hpp"
#include "subgroup.hpp"

namespace dpforms {

// Projective plane point, first nonzero coordinate scaled to 1.
class PlanePoint {
 public:
  PlanePoint(FFElem x, FFElem y, FFElem z);

  const std::array<FFElem, 3>& coords() const { return c_; }
  const FieldRef& field() const { return c_[0].field(); }
  bool operator==(const PlanePoint& o) const { return c_ == o.c_; }
  std::string ToString() const;

 private:
  std::array<FFElem, 3> c_;
};

PlanePoint FrobeniusPoint(const PlanePoint& p);
// Whether y^2 = x z, the conic traced by t -> (1 : t : t^2).
bool OnStandardConic(const PlanePoint& p);

struct PointConfig {
  FieldRef field;
  std::vector<PlanePoint> points;
  bool on_conic = false;
};

// Result of the orbit-by-orbit point construction on the affine line.
struct PointsWithAction {
  FieldRef field;            // F_{q^N}, N the order of the generator
  Perm generator;            // acts as Frobenius: frob(beta_i) = beta_{g(i)}
  std::vector<FFElem> betas;  // indexed by the points 0..n-1
  struct OrbitStep {
    std::vector<int> orbit;
    int seed_rank = 0;       // 0 when the first degree-l element was used
    int scalars_tried = 0;   // scalars tried for the accepted seed
    bool first_seed_blocked_by_shared_orbit = false;
  };
  std::vector<OrbitStep> steps;
};

// Builds n distinct elements permuted by Frobenius exactly as `generator`
// permutes {1..n}. Orbits are handled by (length, smallest point); each is
// seeded with a degree-l element scaled by the first nonzero base scalar that
// avoids the points already placed. If every scalar collides, the next
// degree-l element is tried. Requires q > complexity(<generator>).
PointsWithAction PointsWithActionFor(const FieldRef& base, const Perm& generator);
// Uses the canonical generator of a cyclic h.
PointsWithAction PointsWithActionFor(const FieldRef& base, const Subgroup& h);

// Points (1 : b : b^2) on the standard conic; asserts general position.
PointConfig ConicConfig(const std::vector<FFElem>& betas);

// No three of the points collinear. Needs at least three points.
bool GeneralPosition(const std::vector<PlanePoint>& points);

// i -> j with frob(P_i) = P_j. Throws if the set is not Frobenius-stable.
Perm FrobeniusPermutation(const PointConfig& config);

enum class Construction {
  kConic5,
  kFourPoints,
  kConic5Blowdown,
  kFourPointsBlowdown,
};

std::string ConstructionName(Construction c);
Construction ParseConstruction(std::string_view name);

struct SurfaceModel {
  int degree = 5;
  FieldRef field;  // the field the points live in, with its base field marked
  PointConfig config;
  Perm frobenius_perm;  // Galois generator as an element of S5
  ClassLabel type_label;
  Construction construction = Construction::kConic5;

  // Degree 6 only.
  std::optional<ClassLabel> degree5_label;
  std::optional<Vertex> blowdown_vertex;
  std::optional<Perm> hexagon_perm;
};

// Blow-up of four points in general position. The S5 element is read off
// the Frobenius action on E1..E4 and the six lines via the Kneser labels
// Ei -> {i,5}, L_ij -> {1,2,3,4} \ {i,j}.
SurfaceModel Dp5FromFourPoints(const PointConfig& config);

// Degree 5 surface over F_q whose type is the class of `target` (cyclic).
// For q > c(target) the Frobenius generator is literally the canonical
// generator of `target`; otherwise a four-point construction is used.
SurfaceModel RealizeDp5(const FieldRef& base, const Subgroup& target);
SurfaceModel RealizeDp5(const FieldRef& base, const ClassLabel& label);

SurfaceModel RealizeDp6(const FieldRef& base, const ClassLabel& label6);

// The fixed four-point configurations for small fields.
PointConfig FramePoints(const FieldRef& base);                 // type [e]
PointConfig ConjugatePairWithFrame(const FieldRef& base);      // [<(1,2)>]
PointConfig TwoConjugatePairs(const FieldRef& base);           // [<(1,2)(3,4)>]
PointConfig CubicOrbitPlusRationalPoint(const FieldRef& base);  // [Z/3Z]

// All F_q-points of the plane in canonical order, inside `field`.
std::vector<PlanePoint> BaseFieldPlanePoints(const FieldRef& field);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Recomputes everything a model claims from its points alone.
std::vector<Check> VerifyModel(const SurfaceModel& model);

}  // namespace dpforms

#endif  // DPFORMS_CORE_CONSTRUCT_HPP_
