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

#include "picard.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace dpforms {

namespace {

void CheckContext(int degree_context) {
  if (degree_context != 5 && degree_context != 6) {
    ThrowInvalid("unsupported degree " + std::to_string(degree_context));
  }
}

long long FormEntry(int i, int j) {
  if (i != j) return 0;
  return i == 0 ? 1 : -1;
}

}  // namespace

int PicardRank(int degree_context) {
  CheckContext(degree_context);
  return degree_context == 5 ? 5 : 4;
}

PicClass PicClass::Zero(int degree_context) {
  return {degree_context, std::vector<long long>(PicardRank(degree_context), 0)};
}

PicClass PicClass::H(int degree_context) {
  PicClass c = Zero(degree_context);
  c.coords[0] = 1;
  return c;
}

PicClass PicClass::E(int degree_context, int i) {
  PicClass c = Zero(degree_context);
  if (i < 1 || i >= static_cast<int>(c.coords.size())) ThrowInvalid("no exceptional class E" + std::to_string(i));
  c.coords[i] = 1;
  return c;
}

PicClass PicClass::operator+(const PicClass& o) const {
  if (degree_context != o.degree_context) ThrowInvalid("mismatched degree contexts");
  PicClass c = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) c.coords[i] += o.coords[i];
  return c;
}

PicClass PicClass::operator-(const PicClass& o) const { return *this + o * -1; }

PicClass PicClass::operator*(long long k) const {
  PicClass c = *this;
  for (auto& x : c.coords) x *= k;
  return c;
}

std::string PicClass::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    long long x = coords[i];
    if (x == 0) continue;
    if (x < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (std::llabs(x) != 1) s += std::to_string(std::llabs(x));
    s += i == 0 ? "H" : "E" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

long long Intersect(const PicClass& a, const PicClass& b) {
  if (a.degree_context != b.degree_context) ThrowInvalid("mismatched degree contexts");
  long long sum = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    sum += a.coords[i] * b.coords[i] * FormEntry(static_cast<int>(i), static_cast<int>(i));
  }
  return sum;
}

PicClass CanonicalClass(int degree_context) {
  PicClass k = PicClass::H(degree_context) * -3;
  for (int i = 1; i < PicardRank(degree_context); ++i) k = k + PicClass::E(degree_context, i);
  return k;
}

std::string BasisName(int degree_context) {
  std::string s = "H";
  for (int i = 1; i < PicardRank(degree_context); ++i) s += ",E" + std::to_string(i);
  return s;
}

std::vector<LabeledClass> MinusOneClasses(int degree_context) {
  const int r = PicardRank(degree_context) - 1;
  std::vector<LabeledClass> out;
  for (int i = 1; i <= r; ++i) {
    out.push_back({PicClass::E(degree_context, i), Vertex::Of(i, 5)});
  }
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      PicClass c = PicClass::H(degree_context) - PicClass::E(degree_context, i) -
                   PicClass::E(degree_context, j);
      std::vector<int> rest;
      for (int k = 1; k <= r; ++k) {
        if (k != i && k != j) rest.push_back(k);
      }
      Vertex label = degree_context == 5 ? Vertex::Of(rest[0], rest[1])
                                         : Vertex::Of(rest[0], 4);
      out.push_back({c, label});
    }
  }
  return out;
}

std::vector<PicClass> ConicClasses() {
  std::vector<PicClass> out;
  PicClass two_h = PicClass::H(5) * 2;
  for (int i = 1; i <= 4; ++i) {
    out.push_back(PicClass::H(5) - PicClass::E(5, i));
    two_h = two_h - PicClass::E(5, i);
  }
  out.push_back(two_h);
  return out;
}

PicClass LatticeAction::Apply(const PicClass& c) const {
  if (c.degree_context != degree_context) ThrowInvalid("mismatched degree contexts");
  PicClass out = PicClass::Zero(degree_context);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) out.coords[i] += matrix[i][j] * c.coords[j];
  }
  return out;
}

bool LatticeAction::PreservesForm() const {
  const int n = static_cast<int>(matrix.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      PicClass x = PicClass::Zero(degree_context), y = PicClass::Zero(degree_context);
      x.coords[a] = 1;
      y.coords[b] = 1;
      if (Intersect(Apply(x), Apply(y)) != FormEntry(a, b)) return false;
    }
  }
  return true;
}

bool LatticeAction::FixesCanonical() const {
  PicClass k = CanonicalClass(degree_context);
  return Apply(k) == k;
}

LatticeAction LatticeActionOnVertices(int degree_context, const Perm& vertex_perm) {
  const CurveGraph& g = GetCurveGraph(degree_context);
  if (vertex_perm.degree() != static_cast<int>(g.vertices.size())) {
    ThrowInvalid("vertex permutation has the wrong degree");
  }
  auto classes = MinusOneClasses(degree_context);
  auto class_of = [&](const Vertex& v) -> const PicClass& {
    for (const auto& lc : classes) {
      if (lc.label == v) return lc.cls;
    }
    ThrowInternal("no (-1)-class labeled " + v.ToString());
  };
  auto image = [&](const Vertex& v) { return class_of(g.vertices[vertex_perm[g.IndexOf(v)]]); };

  const int n = PicardRank(degree_context);
  std::vector<PicClass> columns(n);
  for (int i = 1; i < n; ++i) columns[i] = image(Vertex::Of(i, 5));
  // H = (H-E1-E2) + E1 + E2, and H-E1-E2 carries the label {3,4}.
  columns[0] = image(Vertex::Of(3, 4)) + columns[1] + columns[2];

  LatticeAction act{degree_context, IntMatrix(n, std::vector<long long>(n, 0))};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) act.matrix[i][j] = columns[j].coords[i];
  }
  for (const auto& lc : classes) {
    if (!(act.Apply(lc.cls) == image(lc.label))) {
      ThrowDomain("vertex permutation is not induced by a lattice automorphism");
    }
  }
  return act;
}

LatticeAction InducedLatticeAction(const Perm& s) {
  return LatticeActionOnVertices(5, GraphAction(s));
}

int IntegerRank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [c](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto& r = rows[i];
      if (r[c] == 0) continue;
      long long a = p[c], b = r[c];
      long long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        r[k] = a * r[k] - b * p[k];
        g = std::gcd(g, r[k]);
      }
      if (g > 1) {
        for (auto& x : r) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

int FixedRank(std::span<const LatticeAction> actions, bool orthogonal_to_canonical) {
  if (actions.empty()) ThrowInvalid("no lattice actions given");
  const int ctx = actions[0].degree_context;
  const int n = PicardRank(ctx);
  IntMatrix stacked;
  for (const auto& a : actions) {
    for (int i = 0; i < n; ++i) {
      auto row = a.matrix[i];
      row[i] -= 1;
      stacked.push_back(std::move(row));
    }
  }
  if (orthogonal_to_canonical) {
    // x.K = sum_i form_ii * K_i * x_i
    PicClass k = CanonicalClass(ctx);
    std::vector<long long> row(n);
    for (int i = 0; i < n; ++i) row[i] = FormEntry(i, i) * k.coords[i];
    stacked.push_back(std::move(row));
  }
  return n - IntegerRank(std::move(stacked));
}

int InvariantRank(const Subgroup& h) {
  if (h.degree() != 5) ThrowInvalid("invariant rank expects a subgroup of S5");
  std::vector<LatticeAction> actions;
  for (const Perm& s : h.elements()) actions.push_back(InducedLatticeAction(s));
  return FixedRank(actions);
}

int ConicOrbitCount(const Subgroup& h) {
  auto conics = ConicClasses();
  std::vector<int> image(conics.size());
  std::vector<Perm> perms;
  for (const Perm& s : h.generators()) {
    LatticeAction act = InducedLatticeAction(s);
    for (std::size_t k = 0; k < conics.size(); ++k) {
      auto it = std::find(conics.begin(), conics.end(), act.Apply(conics[k]));
      if (it == conics.end()) ThrowInternal("conic classes are not permuted");
      image[k] = static_cast<int>(it - conics.begin());
    }
    perms.push_back(Perm::FromImages(image));
  }
  return static_cast<int>(Orbits(Generate(perms, 5)).size());
}

MinimalityReport AnalyzeMinimality(const Subgroup& g, const Subgroup& galois_image) {
  if (g.degree() != 5 || galois_image.degree() != 5) {
    ThrowInvalid("minimality expects subgroups of S5");
  }
  for (const Perm& a : g.generators()) {
    for (const Perm& b : galois_image.generators()) {
      if (!(a * b == b * a)) ThrowDomain("G must centralize the Galois image");
    }
  }
  std::vector<Perm> gens = g.generators();
  gens.insert(gens.end(), galois_image.generators().begin(), galois_image.generators().end());
  MinimalityReport report;
  report.delta = Generate(gens, 5);
  report.invariant_rank = InvariantRank(report.delta);
  report.minimal = ContainsOrder5(report.delta);
  if (report.minimal != (report.invariant_rank == 1)) {
    ThrowInternal("order-5 criterion disagrees with the invariant Picard rank");
  }
  return report;
}

bool IsGMinimal(const Subgroup& g, const Subgroup& galois_image) {
  return AnalyzeMinimality(g, galois_image).minimal;
}

}  // namespace dpforms
