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

#include "curve_graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>

#include "error.hpp"

namespace dpforms {

Vertex Vertex::Of(int x, int y) {
  if (x == y || x < 1 || y < 1 || x > 5 || y > 5) {
    ThrowInvalid("a vertex is a 2-subset of {1..5}");
  }
  return x < y ? Vertex{x, y} : Vertex{y, x};
}

Vertex Vertex::Parse(std::string_view text) {
  std::vector<int> nums;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      nums.push_back(c - '0');
    } else if (c != '{' && c != '}' && c != ',' && c != ' ') {
      ThrowInvalid("malformed vertex '" + std::string(text) + "', expected {i,j}");
    }
  }
  if (nums.size() != 2) {
    ThrowInvalid("malformed vertex '" + std::string(text) + "', expected {i,j}");
  }
  return Of(nums[0], nums[1]);
}

std::string Vertex::ToString() const {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

int CurveGraph::IndexOf(const Vertex& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) ThrowInvalid("vertex " + v.ToString() + " not in graph");
  return static_cast<int>(it - vertices.begin());
}

std::size_t CurveGraph::EdgeCount() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) n += adjacency[i][j];
  }
  return n;
}

bool CurveGraph::Preserves(const Perm& p) const {
  if (p.degree() != static_cast<int>(vertices.size())) return false;
  for (int i = 0; i < p.degree(); ++i) {
    for (int j = 0; j < p.degree(); ++j) {
      if (adjacency[i][j] != adjacency[p[i]][p[j]]) return false;
    }
  }
  return true;
}

namespace {

CurveGraph BuildGraph(int degree_context) {
  CurveGraph g;
  g.degree_context = degree_context;
  if (degree_context == 5) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) g.vertices.push_back({a, b});
    }
  } else {
    g.vertices = {{1, 4}, {2, 5}, {3, 4}, {1, 5}, {2, 4}, {3, 5}};
  }
  const std::size_t n = g.vertices.size();
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.adjacency[i][j] = i != j && g.vertices[i].Disjoint(g.vertices[j]);
    }
  }
  return g;
}

Vertex Image(const Perm& s, const Vertex& v) {
  return Vertex::Of(s[v.a - 1] + 1, s[v.b - 1] + 1);
}

}  // namespace

const CurveGraph& GetCurveGraph(int degree_context) {
  static const CurveGraph kDegree5 = BuildGraph(5);
  static const CurveGraph kDegree6 = BuildGraph(6);
  if (degree_context == 5) return kDegree5;
  if (degree_context == 6) return kDegree6;
  ThrowInvalid("unsupported degree " + std::to_string(degree_context));
}

Perm GraphAction(const Perm& s) {
  if (s.degree() != 5) ThrowInvalid("graph action needs a permutation of degree 5");
  const CurveGraph& g = GetCurveGraph(5);
  std::vector<int> img(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    img[i] = g.IndexOf(Image(s, g.vertices[i]));
  }
  return Perm::FromImages(img);
}

Subgroup GraphActionGroup(const Subgroup& h) {
  std::vector<Perm> gens;
  for (const Perm& s : h.generators()) gens.push_back(GraphAction(s));
  return Generate(gens, 10);
}

std::vector<Perm> BruteForceAutomorphisms(const CurveGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<Perm> out;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int k) {
    if (k == n) {
      out.push_back(Perm::FromImages(img));
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        ok = g.adjacency[i][k] == g.adjacency[img[i]][t];
      }
      if (!ok) continue;
      img[k] = t;
      used[t] = true;
      extend(k + 1);
      used[t] = false;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> InvariantVertices(const Subgroup& h) {
  const CurveGraph& g = GetCurveGraph(5);
  std::vector<Vertex> out;
  for (const Vertex& v : g.vertices) {
    bool fixed = std::all_of(h.generators().begin(), h.generators().end(),
                             [&](const Perm& s) { return Image(s, v) == v; });
    if (fixed) out.push_back(v);
  }
  return out;
}

std::optional<std::vector<Vertex>> InvariantIndependentSet(const Subgroup& h) {
  const CurveGraph& g = GetCurveGraph(5);
  const int n = static_cast<int>(g.vertices.size());
  std::vector<Perm> actions;
  for (const Perm& s : h.generators()) actions.push_back(GraphAction(s));

  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
    return std::popcount(x) < std::popcount(y);
  });
  for (unsigned m : masks) {
    bool independent = true;
    for (int i = 0; i < n && independent; ++i) {
      if (!(m >> i & 1)) continue;
      for (int j = i + 1; j < n; ++j) {
        if ((m >> j & 1) && g.adjacency[i][j]) {
          independent = false;
          break;
        }
      }
    }
    if (!independent) continue;
    bool invariant = true;
    for (const Perm& a : actions) {
      for (int i = 0; i < n && invariant; ++i) {
        if ((m >> i & 1) && !(m >> a[i] & 1)) invariant = false;
      }
    }
    if (!invariant) continue;
    std::vector<Vertex> witness;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) witness.push_back(g.vertices[i]);
    }
    return witness;
  }
  return std::nullopt;
}

Subgroup VertexStabilizer(const Vertex& v) {
  std::vector<Perm> fixers;
  for (const Perm& s : FullSymmetricGroup(5).elements()) {
    if (Image(s, v) == v) fixers.push_back(s);
  }
  return Generate(fixers, 5);
}

Perm StandardPositionConjugator(const Vertex& v) {
  const Vertex standard{4, 5};
  for (const Perm& s : FullSymmetricGroup(5).elements()) {
    if (Image(s, standard) == v) return s;
  }
  ThrowInternal("S5 is not transitive on vertices");
}

Perm HexagonRestriction(const Perm& s) {
  if (s.degree() != 5) ThrowInvalid("hexagon restriction needs degree 5");
  if (!(Image(s, {4, 5}) == Vertex{4, 5})) ThrowDomain("not in stabilizer");
  const CurveGraph& hex = GetCurveGraph(6);
  std::vector<int> img(hex.vertices.size());
  for (std::size_t i = 0; i < hex.vertices.size(); ++i) {
    img[i] = hex.IndexOf(Image(s, hex.vertices[i]));
  }
  return Perm::FromImages(img);
}

BlowdownResult BlowdownAction(const Subgroup& h, const Vertex& v) {
  if (h.degree() != 5) ThrowInvalid("blow-down expects a subgroup of S5");
  for (const Perm& s : h.generators()) {
    if (!(Image(s, v) == v)) ThrowDomain("not in stabilizer");
  }
  Perm c = StandardPositionConjugator(v);
  Subgroup standard = h.Conjugate(c.Inverse());
  std::vector<Perm> gens;
  for (const Perm& s : standard.generators()) gens.push_back(HexagonRestriction(s));
  Subgroup hex = Generate(gens, 6);
  if (hex.order() != h.order()) ThrowInternal("hexagon restriction is not faithful");
  return {hex, LabelOf(hex, 6), c};
}

std::string ToDot(const CurveGraph& g, const Subgroup* orbit_group) {
  static const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                   "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                   "#d9d9d9", "#bc80bd"};
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> orbit_of(n, -1);
  if (orbit_group) {
    if (orbit_group->degree() != n) ThrowInvalid("orbit group acts on the wrong vertex count");
    auto orbits = Orbits(*orbit_group);
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      for (int i : orbits[k]) orbit_of[i] = static_cast<int>(k);
    }
  }
  std::ostringstream out;
  out << "graph dp" << g.degree_context << "_curves {\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < n; ++i) {
    out << "  v" << i << " [label=\"" << g.vertices[i].ToString() << "\"";
    if (orbit_of[i] >= 0) {
      out << ", style=filled, fillcolor=\"" << kPalette[orbit_of[i] % 10]
          << "\", orbit=" << orbit_of[i];
    }
    out << "];\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacency[i][j]) out << "  v" << i << " -- v" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dpforms
