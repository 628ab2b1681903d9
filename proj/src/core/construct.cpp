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

#include "construct.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace dpforms {

namespace {

FFElem Det3(const std::array<FFElem, 3>& a, const std::array<FFElem, 3>& b,
            const std::array<FFElem, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Line through two points, as normalized dual coordinates.
PlanePoint LineThrough(const PlanePoint& p, const PlanePoint& q) {
  const auto& a = p.coords();
  const auto& b = q.coords();
  return PlanePoint(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]);
}

FieldRef BaseOf(const FieldRef& field) { return MakeField(field->p, field->base_degree, 1); }

FieldRef ExtensionOf(const FieldRef& base, int n) {
  return MakeField(base->p, base->base_degree, n);
}

}  // namespace

PlanePoint::PlanePoint(FFElem x, FFElem y, FFElem z)
    : c_{std::move(x), std::move(y), std::move(z)} {
  auto lead = std::find_if(c_.begin(), c_.end(), [](const FFElem& e) { return !e.IsZero(); });
  if (lead == c_.end()) ThrowInvalid("(0:0:0) is not a projective point");
  FFElem inv = lead->Inverse();
  for (auto& e : c_) e = e * inv;
}

std::string PlanePoint::ToString() const {
  return "(" + c_[0].ToString() + ":" + c_[1].ToString() + ":" + c_[2].ToString() + ")";
}

PlanePoint FrobeniusPoint(const PlanePoint& p) {
  const auto& c = p.coords();
  return PlanePoint(Frobenius(c[0]), Frobenius(c[1]), Frobenius(c[2]));
}

bool OnStandardConic(const PlanePoint& p) {
  const auto& c = p.coords();
  return c[1] * c[1] == c[0] * c[2];
}

PointsWithAction PointsWithActionFor(const FieldRef& base, const Perm& generator) {
  const int n = generator.degree();
  Subgroup h = Generate({generator}, n);
  const int complexity = Complexity(h);
  if (base->q() <= static_cast<std::uint64_t>(complexity)) {
    ThrowDomain("field too small, use small_field_realize (q = " + std::to_string(base->q()) +
                ", complexity " + std::to_string(complexity) + ")");
  }
  PointsWithAction out;
  out.field = ExtensionOf(base, generator.Order());
  out.generator = generator;

  auto orbits = Orbits(h);
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();  // ties keep the smallest-point order
  });

  std::vector<FFElem> scalars;
  for (const FFElem& a : BaseFieldElements(out.field)) {
    if (!a.IsZero()) scalars.push_back(a);
  }

  std::vector<std::optional<FFElem>> beta(n);
  std::vector<std::vector<FFElem>> placed_orbits;
  auto taken = [&](const FFElem& x) {
    return std::any_of(beta.begin(), beta.end(),
                       [&](const auto& b) { return b && *b == x; });
  };

  for (const auto& orbit : orbits) {
    const int l = static_cast<int>(orbit.size());
    PointsWithAction::OrbitStep step;
    step.orbit = orbit;
    DegreeEnumerator seeds(out.field, l);
    std::optional<FFElem> chosen;
    for (int rank = 0; !chosen; ++rank) {
      auto seed = seeds.Next();
      if (!seed) ThrowInternal("ran out of seeds for an orbit of length " + std::to_string(l));
      int tries = 0;
      for (const FFElem& a : scalars) {
        ++tries;
        FFElem x = a * *seed;
        if (!taken(x)) {
          chosen = x;
          break;
        }
      }
      if (chosen) {
        step.seed_rank = rank;
        step.scalars_tried = tries;
      } else if (rank == 0) {
        for (const auto& other : placed_orbits) {
          int proportional = 0;
          for (const FFElem& y : other) proportional += InBaseField(y / *seed);
          if (proportional >= 2) step.first_seed_blocked_by_shared_orbit = true;
        }
      }
    }
    // beta_{g^s(i1)} = frob^s(x)
    int point = orbit.front();
    FFElem x = *chosen;
    std::vector<FFElem> members;
    for (int s = 0; s < l; ++s) {
      beta[point] = x;
      members.push_back(x);
      point = generator[point];
      x = Frobenius(x);
    }
    placed_orbits.push_back(std::move(members));
    out.steps.push_back(std::move(step));
  }

  for (auto& b : beta) out.betas.push_back(*b);
  for (int i = 0; i < n; ++i) {
    if (!(Frobenius(out.betas[i]) == out.betas[generator[i]])) {
      ThrowInternal("constructed points are not Frobenius-equivariant");
    }
    for (int j = 0; j < i; ++j) {
      if (out.betas[i] == out.betas[j]) ThrowInternal("constructed points are not distinct");
    }
  }
  return out;
}

PointsWithAction PointsWithActionFor(const FieldRef& base, const Subgroup& h) {
  auto g = h.CanonicalGenerator();
  if (!g) ThrowDomain("the Galois image over a finite field must be cyclic");
  return PointsWithActionFor(base, *g);
}

PointConfig ConicConfig(const std::vector<FFElem>& betas) {
  if (betas.empty()) ThrowInvalid("no points given");
  PointConfig config{betas.front().field(), {}, true};
  for (std::size_t i = 0; i < betas.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (betas[i] == betas[j]) ThrowInvalid("duplicate betas");
    }
    config.points.emplace_back(FFElem::One(config.field), betas[i], betas[i] * betas[i]);
  }
  if (config.points.size() >= 3 && !GeneralPosition(config.points)) {
    ThrowInternal("three points of a smooth conic are collinear");
  }
  return config;
}

bool GeneralPosition(const std::vector<PlanePoint>& points) {
  if (points.size() < 3) ThrowInvalid("general position needs at least three points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (Det3(points[i].coords(), points[j].coords(), points[k].coords()).IsZero()) {
          return false;
        }
      }
    }
  }
  return true;
}

Perm FrobeniusPermutation(const PointConfig& config) {
  const auto& pts = config.points;
  std::vector<int> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto it = std::find(pts.begin(), pts.end(), FrobeniusPoint(pts[i]));
    if (it == pts.end()) ThrowDomain("configuration not defined over the base field");
    img[i] = static_cast<int>(it - pts.begin());
  }
  return Perm::FromImages(img);
}

std::string ConstructionName(Construction c) {
  switch (c) {
    case Construction::kConic5: return "conic5";
    case Construction::kFourPoints: return "fourpoints";
    case Construction::kConic5Blowdown: return "conic5_blowdown";
    case Construction::kFourPointsBlowdown: return "fourpoints_blowdown";
  }
  return "?";
}

Construction ParseConstruction(std::string_view name) {
  for (Construction c : {Construction::kConic5, Construction::kFourPoints,
                         Construction::kConic5Blowdown, Construction::kFourPointsBlowdown}) {
    if (ConstructionName(c) == name) return c;
  }
  ThrowInvalid("unknown construction '" + std::string(name) + "'");
}

SurfaceModel Dp5FromFourPoints(const PointConfig& config) {
  const auto& pts = config.points;
  if (pts.size() != 4) ThrowInvalid("the first construction needs exactly four points");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[i] == pts[j]) ThrowInvalid("points must be distinct");
    }
  }
  if (!GeneralPosition(pts)) {
    ThrowDomain("points not in general position: three of them are collinear");
  }
  Perm tau = FrobeniusPermutation(config);

  // Ten objects: E1..E4 then the lines L_ij.
  std::vector<std::pair<int, int>> pairs;
  std::vector<PlanePoint> lines;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      pairs.emplace_back(i, j);
      lines.push_back(LineThrough(pts[i], pts[j]));
    }
  }
  auto line_label = [&](std::size_t k) {
    std::vector<int> rest;
    for (int t = 0; t < 4; ++t) {
      if (t != pairs[k].first && t != pairs[k].second) rest.push_back(t + 1);
    }
    return Vertex::Of(rest[0], rest[1]);
  };
  const CurveGraph& graph = GetCurveGraph(5);
  std::vector<int> img(10, -1);
  for (int i = 0; i < 4; ++i) {
    img[graph.IndexOf(Vertex::Of(i + 1, 5))] = graph.IndexOf(Vertex::Of(tau[i] + 1, 5));
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    auto it = std::find(lines.begin(), lines.end(), FrobeniusPoint(lines[k]));
    if (it == lines.end()) ThrowInternal("Frobenius does not permute the six lines");
    img[graph.IndexOf(line_label(k))] = graph.IndexOf(line_label(it - lines.begin()));
  }
  Perm vertex_perm = Perm::FromImages(img);

  std::optional<Perm> sigma;
  for (const Perm& s : FullSymmetricGroup(5).elements()) {
    if (GraphAction(s) == vertex_perm) {
      sigma = s;
      break;
    }
  }
  if (!sigma) ThrowInternal("line permutation is not a graph automorphism");
  if ((*sigma)[4] != 4) ThrowInternal("four-point surface outside the stabilizer of 5");

  SurfaceModel model;
  model.degree = 5;
  model.field = config.field;
  model.config = config;
  model.frobenius_perm = *sigma;
  model.type_label = LabelOf(Generate({*sigma}, 5), 5);
  model.construction = Construction::kFourPoints;
  return model;
}

PointConfig FramePoints(const FieldRef& base) {
  FieldRef f = BaseOf(base);
  FFElem o(f), i = FFElem::One(f);
  return {f, {{i, o, o}, {o, i, o}, {o, o, i}, {i, i, i}}, false};
}

PointConfig ConjugatePairWithFrame(const FieldRef& base) {
  FieldRef f = ExtensionOf(base, 2);
  FFElem o(f), i = FFElem::One(f);
  FFElem w = ElementOfDegree(f, 2);
  FFElem wb = Frobenius(w);
  // (0:1:0) lies on the line x = z through the conjugate pair, so (0:0:1)
  // takes its place.
  return {f, {{i, o, o}, {o, o, i}, {i, w, i}, {i, wb, i}}, false};
}

PointConfig TwoConjugatePairs(const FieldRef& base) {
  FieldRef f = ExtensionOf(base, 2);
  FFElem o(f), i = FFElem::One(f);
  FFElem w = ElementOfDegree(f, 2);
  FFElem wb = Frobenius(w);
  return {f, {{i, w, o}, {i, wb, o}, {i, o, w}, {i, o, wb}}, false};
}

std::vector<PlanePoint> BaseFieldPlanePoints(const FieldRef& field) {
  auto elems = BaseFieldElements(field);
  FFElem o(field), i = FFElem::One(field);
  std::vector<PlanePoint> out{{o, o, i}};
  for (const FFElem& b : elems) out.emplace_back(o, i, b);
  for (const FFElem& a : elems) {
    for (const FFElem& b : elems) out.emplace_back(i, a, b);
  }
  return out;
}

PointConfig CubicOrbitPlusRationalPoint(const FieldRef& base) {
  PointsWithAction triple =
      PointsWithActionFor(BaseOf(base), Perm::FromCycles(3, {{1, 2, 3}}));
  PointConfig config = ConicConfig(triple.betas);
  config.on_conic = false;
  for (const PlanePoint& p : BaseFieldPlanePoints(config.field)) {
    auto candidate = config.points;
    candidate.push_back(p);
    if (GeneralPosition(candidate)) {
      config.points = std::move(candidate);
      return config;
    }
  }
  ThrowInternal("no rational point completes the cubic orbit");
}

SurfaceModel RealizeDp5(const FieldRef& base_in, const Subgroup& target) {
  if (target.degree() != 5) ThrowInvalid("target must be a subgroup of S5");
  FieldRef base = BaseOf(base_in);
  ClassLabel want = LabelOf(target, 5);
  if (!target.IsCyclic()) {
    ThrowDomain("type " + want.name +
                " not realizable over a finite field: H must be cyclic");
  }
  SurfaceModel model;
  if (base->q() > static_cast<std::uint64_t>(Complexity(target))) {
    PointsWithAction pwa = PointsWithActionFor(base, target);
    model.degree = 5;
    model.field = pwa.field;
    model.config = ConicConfig(pwa.betas);
    model.frobenius_perm = FrobeniusPermutation(model.config);
    if (!(model.frobenius_perm == pwa.generator)) {
      ThrowInternal("conic points do not carry the requested Frobenius action");
    }
    model.type_label = LabelOf(Generate({model.frobenius_perm}, 5), 5);
    model.construction = Construction::kConic5;
  } else if (want.name == "[e]") {
    model = Dp5FromFourPoints(FramePoints(base));
  } else if (want.name == "[<(1,2)>]") {
    model = Dp5FromFourPoints(ConjugatePairWithFrame(base));
  } else if (want.name == "[<(1,2)(3,4)>]") {
    model = Dp5FromFourPoints(TwoConjugatePairs(base));
  } else if (want.name == "[Z/3Z]") {
    model = Dp5FromFourPoints(CubicOrbitPlusRationalPoint(base));
  } else {
    ThrowInternal("no small-field construction for " + want.name);
  }
  if (!(model.type_label == want)) {
    ThrowInternal("realized type " + model.type_label.name + " differs from " + want.name);
  }
  return model;
}

SurfaceModel RealizeDp5(const FieldRef& base, const ClassLabel& label) {
  if (label.degree_context != 5) ThrowInvalid("expected a degree 5 type");
  const SubgroupClass& c = FindClass(5, label.name);
  if (!c.representative.IsCyclic()) {
    ThrowDomain("type " + c.label.name + " not realizable over a finite field: H must be cyclic");
  }
  return RealizeDp5(base, c.representative);
}

SurfaceModel RealizeDp6(const FieldRef& base, const ClassLabel& label6) {
  if (label6.degree_context != 6) ThrowInvalid("expected a degree 6 type");
  const SubgroupClass& c = FindClass(6, label6.name);
  if (!c.representative.IsCyclic()) {
    ThrowDomain("type " + c.label.name + " not realizable over a finite field: H must be cyclic");
  }
  const Subgroup& target = *c.embedded;
  SurfaceModel model5 = RealizeDp5(base, target);

  Subgroup galois = Generate({model5.frobenius_perm}, 5);
  auto s = ConjugatingElement(galois, target, FullSymmetricGroup(5));
  if (!s) ThrowInternal("realized Galois image is not conjugate to the target");
  const Vertex standard{4, 5};
  Perm inv = s->Inverse();
  Vertex v = Vertex::Of(inv[standard.a - 1] + 1, inv[standard.b - 1] + 1);
  auto fixed = InvariantVertices(galois);
  if (std::find(fixed.begin(), fixed.end(), v) == fixed.end()) {
    ThrowInternal("blow-down vertex is not Galois-invariant");
  }
  BlowdownResult blow = BlowdownAction(galois, v);
  if (!(blow.label == c.label)) {
    ThrowInternal("blow-down produced " + blow.label.name + " instead of " + c.label.name);
  }

  SurfaceModel model = model5;
  model.degree = 6;
  model.type_label = c.label;
  model.degree5_label = model5.type_label;
  model.blowdown_vertex = v;
  Perm c_inv = blow.conjugator.Inverse();
  model.hexagon_perm = HexagonRestriction(c_inv * model5.frobenius_perm * blow.conjugator);
  model.construction = model5.construction == Construction::kConic5
                           ? Construction::kConic5Blowdown
                           : Construction::kFourPointsBlowdown;
  return model;
}

std::vector<Check> VerifyModel(const SurfaceModel& model) {
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto&& fn) {
    Check c{name, false, ""};
    try {
      c.passed = fn(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
    return checks.back().passed;
  };
  const auto& pts = model.config.points;

  run("distinct_points", [&](std::string& d) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pts[i] == pts[j]) {
          d = "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide";
          return false;
        }
      }
    }
    return pts.size() == 4 || pts.size() == 5;
  });
  bool stable = run("frobenius_stable", [&](std::string& d) {
    d = FrobeniusPermutation(model.config).ToString();
    return true;
  });
  run("general_position", [&](std::string&) { return GeneralPosition(pts); });
  if (model.config.on_conic) {
    run("on_conic", [&](std::string& d) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!OnStandardConic(pts[i])) {
          d = "point " + std::to_string(i + 1) + " is off y^2 = xz";
          return false;
        }
      }
      return true;
    });
  }
  if (!stable) return checks;

  std::optional<Perm> sigma;
  run("frobenius_perm", [&](std::string& d) {
    if (pts.size() == 5) {
      sigma = FrobeniusPermutation(model.config);
    } else {
      sigma = Dp5FromFourPoints(model.config).frobenius_perm;
    }
    d = "recomputed " + sigma->ToString();
    return *sigma == model.frobenius_perm;
  });
  if (!sigma) return checks;
  Subgroup galois = Generate({*sigma}, 5);
  ClassLabel label5 = LabelOf(galois, 5);
  if (model.degree == 5) {
    run("type", [&](std::string& d) {
      d = "recomputed " + label5.name + ", claimed " + model.type_label.name;
      return label5 == model.type_label;
    });
    return checks;
  }
  run("degree5_type", [&](std::string& d) {
    d = "recomputed " + label5.name;
    return model.degree5_label && label5 == *model.degree5_label;
  });
  if (!model.blowdown_vertex) {
    checks.push_back({"blowdown_vertex", false, "missing"});
    return checks;
  }
  bool invariant = run("blowdown_vertex_invariant", [&](std::string& d) {
    auto fixed = InvariantVertices(galois);
    d = model.blowdown_vertex->ToString();
    return std::find(fixed.begin(), fixed.end(), *model.blowdown_vertex) != fixed.end();
  });
  if (!invariant) return checks;
  run("type", [&](std::string& d) {
    BlowdownResult blow = BlowdownAction(galois, *model.blowdown_vertex);
    d = "recomputed " + blow.label.name + ", claimed " + model.type_label.name;
    if (model.hexagon_perm) {
      Perm c_inv = blow.conjugator.Inverse();
      Perm hex = HexagonRestriction(c_inv * *sigma * blow.conjugator);
      if (!(hex == *model.hexagon_perm)) {
        d += ", hexagon permutation recomputed as " + hex.ToString();
        return false;
      }
    }
    return blow.label == model.type_label;
  });
  return checks;
}

}  // namespace dpforms
