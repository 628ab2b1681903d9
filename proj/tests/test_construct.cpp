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
#include <vector>

#include "core/classes.hpp"
#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/serialize.hpp"

using namespace dpforms;

namespace {

Subgroup G(const char* gens) { return Generate(ParseGenerators(gens, 5), 5); }

FieldRef Base(int q) { return ParseBaseField(std::to_string(q)); }

PlanePoint Pt(const FieldRef& f, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  return PlanePoint(FFElem::FromIndex(f, x), FFElem::FromIndex(f, y), FFElem::FromIndex(f, z));
}

bool AllPass(const SurfaceModel& m) {
  for (const Check& c : VerifyModel(m)) {
    if (!c.passed) {
      MESSAGE(c.name << ": " << c.detail);
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("plane points normalize") {
  FieldRef f = MakeField(3, 1, 1);
  PlanePoint p = Pt(f, 0, 2, 1);
  CHECK(p.ToString() == "([0]:[1]:[2])");
  CHECK(PlanePoint(p.coords()[0], p.coords()[1], p.coords()[2]) == p);
  CHECK_THROWS_AS(Pt(f, 0, 0, 0), Error);
}

TEST_CASE("general position") {
  FieldRef f = MakeField(2, 1, 1);
  CHECK(GeneralPosition({Pt(f, 1, 0, 0), Pt(f, 0, 1, 0), Pt(f, 0, 0, 1), Pt(f, 1, 1, 1)}));
  CHECK_FALSE(GeneralPosition({Pt(f, 1, 0, 0), Pt(f, 0, 1, 0), Pt(f, 1, 1, 0)}));
  CHECK_THROWS_AS(GeneralPosition({Pt(f, 1, 0, 0)}), Error);

  // Two conjugate pairs over F_4, w^2 = w + 1; every 3x3 determinant by hand
  // is +-w(w - wbar) or similar, all nonzero.
  FieldRef f4 = MakeField(2, 1, 2);
  FFElem o(f4), i = FFElem::One(f4), w = FFElem::Generator(f4), wb = w * w;
  CHECK(wb == w + i);
  std::vector<PlanePoint> pts{{i, w, o}, {i, wb, o}, {i, o, w}, {i, o, wb}};
  auto det = [](const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
    const auto &x = a.coords(), &y = b.coords(), &z = c.coords();
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
           x[2] * (y[0] * z[1] - y[1] * z[0]);
  };
  CHECK(det(pts[0], pts[1], pts[2]) == w * (wb - w));
  CHECK(det(pts[0], pts[1], pts[3]) == wb * (wb - w));
  CHECK(det(pts[0], pts[2], pts[3]) == w * (w - wb));
  CHECK(det(pts[1], pts[2], pts[3]) == wb * (w - wb));
  CHECK(GeneralPosition(pts));
}

TEST_CASE("Frobenius permutation of a configuration") {
  FieldRef f = MakeField(3, 1, 2);
  FFElem o(f), i = FFElem::One(f), w = ElementOfDegree(f, 2), wb = Frobenius(w);
  PointConfig rational{f, {{i, o, o}, {o, i, o}, {o, o, i}, {i, i, i}}, false};
  CHECK(FrobeniusPermutation(rational).IsIdentity());
  PointConfig pair{f, {{i, o, o}, {o, i, o}, {i, w, i}, {i, wb, i}}, false};
  CHECK(FrobeniusPermutation(pair) == Perm::Parse("(3 4)", 4));
  PointConfig broken{f, {{i, o, o}, {i, w, i}}, false};
  CHECK_THROWS_WITH(FrobeniusPermutation(broken),
                    "configuration not defined over the base field");
  // With (0:1:0) the conjugate pair is collinear with it on x = z.
  CHECK_FALSE(GeneralPosition(pair.points));
}

TEST_CASE("points with a prescribed Frobenius action") {
  auto trivial = PointsWithActionFor(Base(7), Perm(5));
  for (const FFElem& b : trivial.betas) CHECK(InBaseField(b));
  CHECK(std::set<FFElem>(trivial.betas.begin(), trivial.betas.end()).size() == 5);

  Perm five = Perm::Parse("(1 2 3 4 5)", 5);
  auto cyc = PointsWithActionFor(Base(2), five);
  CHECK(cyc.field->relative_degree() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(cyc.betas[i].Pow(32) == cyc.betas[i]);
    CHECK(FrobeniusOrbitSize(cyc.betas[i]) == 5);
    CHECK(Frobenius(cyc.betas[i]) == cyc.betas[five[i]]);
  }

  Perm dt = Perm::Parse("(1 2)(3 4)", 5);
  auto pairs = PointsWithActionFor(Base(4), dt);
  for (int i = 0; i < 5; ++i) CHECK(Frobenius(pairs.betas[i]) == pairs.betas[dt[i]]);
  CHECK(InBaseField(pairs.betas[4]));
  CHECK(std::set<FFElem>(pairs.betas.begin(), pairs.betas.end()).size() == 5);

  CHECK_THROWS_WITH(PointsWithActionFor(Base(2), Perm(5)),
                    doctest::Contains("field too small, use small_field_realize"));
}

TEST_CASE("a second seed is sometimes needed") {
  // Over F_3 the first degree-2 element of F_9 is x with x^2 = -1, whose
  // orbit {x, -x} already contains both base multiples when the second pair
  // is seeded.
  auto pwa = PointsWithActionFor(Base(3), Perm::Parse("(1 2)(3 4)", 5));
  bool reseeded = false;
  for (const auto& step : pwa.steps) {
    if (step.seed_rank > 0) {
      reseeded = true;
      CHECK(step.first_seed_blocked_by_shared_orbit);
    }
  }
  CHECK(reseeded);
}

TEST_CASE("seed and scalar bound over all small cases") {
  // When the first seed is usable, the scalar is found within c(H)+1 tries;
  // when it is not, an earlier orbit holds two of its base multiples.
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (const Subgroup& h : AllAmbientSubgroups(5)) {
      if (!h.IsCyclic() || q <= Complexity(h)) continue;
      for (const Perm& g : h.elements()) {
        if (static_cast<std::size_t>(g.Order()) != h.order()) continue;
        auto pwa = PointsWithActionFor(Base(q), g);
        for (const auto& step : pwa.steps) {
          if (step.seed_rank == 0) {
            CHECK(step.scalars_tried <= Complexity(h) + 1);
          } else {
            CHECK(step.first_seed_blocked_by_shared_orbit);
          }
        }
      }
    }
  }
}

TEST_CASE("conic configurations") {
  FieldRef f = MakeField(3, 1, 1);
  auto cfg = ConicConfig({FFElem::FromIndex(f, 0), FFElem::FromIndex(f, 1), FFElem::FromIndex(f, 2)});
  CHECK(cfg.points[0] == Pt(f, 1, 0, 0));
  CHECK(cfg.points[1] == Pt(f, 1, 1, 1));
  for (const auto& p : cfg.points) CHECK(OnStandardConic(p));
  CHECK_THROWS_AS(ConicConfig({FFElem::One(f), FFElem::One(f)}), Error);
  auto pwa = PointsWithActionFor(Base(4), Perm::Parse("(1 2 3)(4 5)", 5));
  auto five = ConicConfig(pwa.betas);
  CHECK(GeneralPosition(five.points));
  CHECK(FrobeniusPermutation(five) == Perm::Parse("(1 2 3)(4 5)", 5));
}

TEST_CASE("first construction examples") {
  CHECK(Dp5FromFourPoints(FramePoints(Base(2))).type_label.name == "[e]");
  auto two = Dp5FromFourPoints(ConjugatePairWithFrame(Base(3)));
  CHECK(two.type_label.name == "[<(1,2)>]");
  CHECK(two.config.field->ToString() == "3^2:base=1");
  auto dbl = Dp5FromFourPoints(TwoConjugatePairs(Base(2)));
  CHECK(dbl.type_label.name == "[<(1,2)(3,4)>]");
  CHECK(dbl.config.field->ToString() == "2^2:base=1");
  CHECK(Dp5FromFourPoints(CubicOrbitPlusRationalPoint(Base(2))).type_label.name == "[Z/3Z]");

  FieldRef f = MakeField(2, 1, 1);
  PointConfig bad{f, {Pt(f, 1, 0, 0), Pt(f, 0, 1, 0), Pt(f, 1, 1, 0), Pt(f, 0, 0, 1)}, false};
  CHECK_THROWS_WITH(Dp5FromFourPoints(bad), doctest::Contains("general position"));
}

TEST_CASE("four-point surfaces stay in the stabilizer of 5") {
  for (int q : {2, 3, 4, 5, 7}) {
    for (const PointConfig& cfg : {FramePoints(Base(q)), ConjugatePairWithFrame(Base(q)),
                                   TwoConjugatePairs(Base(q)), CubicOrbitPlusRationalPoint(Base(q))}) {
      auto m = Dp5FromFourPoints(cfg);
      CHECK(m.frobenius_perm[4] == 4);
    }
  }
}

TEST_CASE("every rational point completes the cubic orbit") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    auto triple = PointsWithActionFor(Base(q), Perm::FromCycles(3, {{1, 2, 3}}));
    auto cfg = ConicConfig(triple.betas);
    for (const PlanePoint& p : BaseFieldPlanePoints(cfg.field)) {
      auto pts = cfg.points;
      pts.push_back(p);
      CHECK(GeneralPosition(pts));
    }
    CHECK(BaseFieldPlanePoints(cfg.field).size() == static_cast<std::size_t>(q * q + q + 1));
  }
}

TEST_CASE("realize degree 5") {
  auto m = RealizeDp5(Base(7), ClassLabel{5, "[Z/5Z]"});
  CHECK(m.construction == Construction::kConic5);
  CHECK(m.frobenius_perm.Order() == 5);
  auto small = RealizeDp5(Base(2), ClassLabel{5, "[<(1,2)(3,4)>]"});
  CHECK(small.construction == Construction::kFourPoints);
  CHECK_THROWS_WITH(RealizeDp5(Base(2), ClassLabel{5, "[S5]"}),
                    doctest::Contains("not realizable over a finite field: H must be cyclic"));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (const auto& c : SubgroupClasses(5)) {
      if (!c.representative.IsCyclic()) continue;
      auto r = RealizeDp5(Base(q), c.label);
      CHECK(r.type_label == c.label);
      CHECK(AllPass(r));
    }
  }
}

TEST_CASE("realize degree 6") {
  auto m = RealizeDp6(Base(4), ClassLabel{6, "[<(id,1)>]"});
  CHECK(m.degree5_label->name == "[<(1,2)>]");
  CHECK(m.frobenius_perm == Perm::Parse("(4 5)", 5));
  CHECK(*m.blowdown_vertex == Vertex::Of(4, 5));
  CHECK(*m.hexagon_perm == Perm::Parse("(1 4)(2 5)(3 6)", 6));
  auto z3 = RealizeDp6(Base(2), ClassLabel{6, "[Z/3]"});
  CHECK(z3.degree5_label->name == "[Z/3Z]");
  CHECK(z3.construction == Construction::kFourPointsBlowdown);
  CHECK_THROWS_WITH(RealizeDp6(Base(5), ClassLabel{6, "[S3xZ/2]"}),
                    doctest::Contains("H must be cyclic"));
  for (int q : {2, 3, 4, 5, 7}) {
    for (const auto& c : SubgroupClasses(6)) {
      if (!c.representative.IsCyclic()) continue;
      auto r = RealizeDp6(Base(q), c.label);
      CHECK(r.type_label == c.label);
      CHECK(AllPass(r));
    }
  }
}

TEST_CASE("verify rejects perturbed models") {
  auto m = RealizeDp5(Base(5), ClassLabel{5, "[Z/4Z]"});
  Json j = ToJson(m);
  CHECK(AllPass(ModelFromJson(j)));

  // Change one coordinate: the set is no longer Frobenius-stable.
  Json unstable = j;
  unstable["points"][1][1] = Json::array({1});
  CHECK_FALSE(AllPass(ModelFromJson(unstable)));

  // Replace the rational point by a point on the line through two others.
  auto four = RealizeDp5(Base(5), ClassLabel{5, "[e]"});
  Json collinear = ToJson(four);
  collinear["points"][3] = Json::array({Json::array({1}), Json::array({1}), Json::array({0})});
  CHECK_FALSE(AllPass(ModelFromJson(collinear)));

  Json wrong_type = j;
  wrong_type["type"] = "[Z/5Z]";
  CHECK_FALSE(AllPass(ModelFromJson(wrong_type)));

  Json wrong_modulus = j;
  wrong_modulus["modulus"] = Json::array({1, 1});
  CHECK_THROWS_AS(ModelFromJson(wrong_modulus), Error);
}
