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
#include "core/curve_graph.hpp"
#include "core/error.hpp"

using namespace dpforms;

namespace {

Subgroup G(const char* gens) { return Generate(ParseGenerators(gens, 5), 5); }

// Petersen automorphisms counted by assigning vertices one at a time,
// written without reference to the library's search.
int CountAutomorphisms(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  int count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[img[u]][w];
      if (!ok) continue;
      used[w] = true;
      img[v] = w;
      self(self, v + 1);
      used[w] = false;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("Kneser graph") {
  const CurveGraph& g = GetCurveGraph(5);
  CHECK(g.vertices.size() == 10);
  CHECK(g.EdgeCount() == 15);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK_FALSE(g.adjacency[i][i]);
    int deg = 0;
    for (std::size_t j = 0; j < 10; ++j) deg += g.adjacency[i][j];
    CHECK(deg == 3);
  }
  std::vector<std::string> nbrs;
  int v12 = g.IndexOf(Vertex::Of(1, 2));
  for (std::size_t j = 0; j < 10; ++j) {
    if (g.adjacency[v12][j]) nbrs.push_back(g.vertices[j].ToString());
  }
  CHECK(nbrs == std::vector<std::string>{"{3,4}", "{3,5}", "{4,5}"});
}

TEST_CASE("hexagon") {
  const CurveGraph& h = GetCurveGraph(6);
  std::vector<std::string> labels;
  for (const Vertex& v : h.vertices) labels.push_back(v.ToString());
  CHECK(labels == std::vector<std::string>{"{1,4}", "{2,5}", "{3,4}", "{1,5}", "{2,4}", "{3,5}"});
  for (int i = 0; i < 6; ++i) {
    CHECK(h.adjacency[i][(i + 1) % 6]);
    int deg = 0;
    for (int j = 0; j < 6; ++j) deg += h.adjacency[i][j];
    CHECK(deg == 2);
  }
  CHECK(CountAutomorphisms(h.adjacency) == 12);
  CHECK_THROWS_WITH(GetCurveGraph(4), doctest::Contains("unsupported degree"));
}

TEST_CASE("graph action") {
  CHECK(GraphAction(Perm(5)).IsIdentity());
  const CurveGraph& g = GetCurveGraph(5);
  Perm a = GraphAction(Perm::Parse("(4 5)", 5));
  for (const char* fixed : {"{4,5}", "{1,2}", "{1,3}", "{2,3}"}) {
    int i = g.IndexOf(Vertex::Parse(fixed));
    CHECK(a[i] == i);
  }
  for (int i = 1; i <= 3; ++i) {
    CHECK(a[g.IndexOf(Vertex::Of(i, 4))] == g.IndexOf(Vertex::Of(i, 5)));
  }
}

TEST_CASE("graph action is an isomorphism onto Aut") {
  auto s5 = SymmetricGroup(5);
  std::set<Perm> image;
  for (const Perm& x : s5) {
    REQUIRE(GetCurveGraph(5).Preserves(GraphAction(x)));
    image.insert(GraphAction(x));
    for (const Perm& y : s5) REQUIRE(GraphAction(x * y) == GraphAction(x) * GraphAction(y));
  }
  CHECK(image.size() == 120);
  CHECK(CountAutomorphisms(GetCurveGraph(5).adjacency) == 120);
  auto brute = BruteForceAutomorphisms(GetCurveGraph(5));
  CHECK(std::vector<Perm>(image.begin(), image.end()) == brute);
}

TEST_CASE("invariant vertices") {
  auto inv = InvariantVertices(G("(1 2 3),(1 2),(4 5)"));
  CHECK(inv == std::vector<Vertex>{Vertex::Of(4, 5)});
  CHECK(InvariantVertices(Subgroup(5)).size() == 10);
  const Subgroup& rep = FindClass(5, "[S3xZ/2Z]").representative;
  for (const Subgroup& h : AllAmbientSubgroups(5)) {
    if (LabelOf(h, 5) == LabelOf(rep, 5)) CHECK_FALSE(InvariantVertices(h).empty());
  }
}

TEST_CASE("invariant independent sets") {
  auto w = InvariantIndependentSet(G("(1 2 3 4),(1 2)"));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<Vertex>{Vertex::Of(1, 5), Vertex::Of(2, 5), Vertex::Of(3, 5),
                                  Vertex::Of(4, 5)});
  CHECK_FALSE(InvariantIndependentSet(G("(1 2 3 4 5)")).has_value());
  auto t = InvariantIndependentSet(Subgroup(5));
  REQUIRE(t.has_value());
  CHECK(t->size() == 1);

  // Exhaustive subset scan, independent of the library's search.
  const CurveGraph& g = GetCurveGraph(5);
  for (const Subgroup& h : AllAmbientSubgroups(5)) {
    std::vector<Perm> acts;
    for (const Perm& s : h.generators()) acts.push_back(GraphAction(s));
    bool any = false;
    for (int m = 1; m < 1024 && !any; ++m) {
      bool ok = true;
      for (int i = 0; i < 10 && ok; ++i) {
        if (!(m >> i & 1)) continue;
        for (int j = 0; j < 10 && ok; ++j) ok = !((m >> j & 1) && g.adjacency[i][j]);
        for (const Perm& a : acts) ok = ok && (m >> a[i] & 1);
      }
      any = ok;
    }
    CHECK(any == InvariantIndependentSet(h).has_value());
    if (!any) CHECK(ContainsOrder5(h));
  }
}

TEST_CASE("vertex stabilizers") {
  CHECK(VertexStabilizer(Vertex::Of(4, 5)) == G("(1 2 3),(1 2),(4 5)"));
  Subgroup base = VertexStabilizer(Vertex::Of(4, 5));
  for (const Vertex& v : GetCurveGraph(5).vertices) {
    Subgroup s = VertexStabilizer(v);
    CHECK(s.order() == 12);
    Perm c = StandardPositionConjugator(v);
    CHECK(base.Conjugate(c) == s);
  }
}

TEST_CASE("blow-down") {
  auto r = BlowdownAction(G("(4 5)"), Vertex::Of(4, 5));
  CHECK(r.label.name == "[<(id,1)>]");
  // Antipodal map of the hexagon.
  CHECK(r.hexagon_group.generators().front() == Perm::Parse("(1 4)(2 5)(3 6)", 6));
  auto z3 = BlowdownAction(G("(1 2 3)"), Vertex::Of(4, 5));
  CHECK(z3.label.name == "[Z/3]");
  // {1,4} -> {2,4} is position 1 -> 5.
  CHECK(z3.hexagon_group.generators().front() == Perm::Parse("(1 5 3)(2 6 4)", 6));
  CHECK(BlowdownAction(Subgroup(5), Vertex::Of(1, 2)).label.name == "[e]");
  CHECK_THROWS_WITH(BlowdownAction(G("(1 4)"), Vertex::Of(4, 5)), "not in stabilizer");
  // Non-standard vertex: (1 2) fixes {1,2} and swaps {1,x} with {2,x}.
  auto moved = BlowdownAction(G("(1 2)"), Vertex::Of(1, 2));
  CHECK(moved.label.name == "[<(id,1)>]");
}

TEST_CASE("restriction to the hexagon is a bijection") {
  std::set<Perm> images;
  Subgroup stabilizer = VertexStabilizer(Vertex::Of(4, 5));
  for (const Perm& s : stabilizer.elements()) {
    Perm r = HexagonRestriction(s);
    CHECK(GetCurveGraph(6).Preserves(r));
    images.insert(r);
  }
  CHECK(images.size() == 12);
  CHECK(std::vector<Perm>(images.begin(), images.end()) == AmbientGroup(6).elements());
}

TEST_CASE("DOT export") {
  std::string dot = ToDot(GetCurveGraph(5));
  CHECK(dot.find("label=\"{1,2}\"") != std::string::npos);
  CHECK(dot.find("v0 -- v9") != std::string::npos);  // {1,2} -- {4,5}
  Subgroup on_vertices = GraphActionGroup(G("(1 2 3 4 5)"));
  std::string colored = ToDot(GetCurveGraph(5), &on_vertices);
  CHECK(colored.find("orbit=1") != std::string::npos);
  CHECK(colored.find("orbit=2") == std::string::npos);
}
