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

#include "subgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "error.hpp"

namespace dpforms {

Subgroup::Subgroup(int degree) : degree_(degree) {
  elements_.push_back(Perm(degree));
}

bool Subgroup::Contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::IsSubgroupOf(const Subgroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool Subgroup::IsCyclic() const { return CanonicalGenerator().has_value(); }

std::optional<Perm> Subgroup::CanonicalGenerator() const {
  for (const Perm& p : elements_) {
    if (static_cast<std::size_t>(p.Order()) == order()) return p;
  }
  return std::nullopt;
}

Subgroup Subgroup::Conjugate(const Perm& s) const {
  Subgroup out(degree_);
  Perm inv = s.Inverse();
  out.generators_.clear();
  for (const Perm& g : generators_) out.generators_.push_back(s * g * inv);
  out.elements_.clear();
  out.elements_.reserve(elements_.size());
  for (const Perm& g : elements_) out.elements_.push_back(s * g * inv);
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

Subgroup Generate(std::span<const Perm> gens, int degree) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) ThrowInvalid("degree mismatch");
  }
  Subgroup out(degree);
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& s : gens) {
        Perm y = s * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  out.generators_.assign(gens.begin(), gens.end());
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

Subgroup Generate(std::initializer_list<Perm> gens, int degree) {
  return Generate(std::span<const Perm>(gens.begin(), gens.size()), degree);
}

const Subgroup& FullSymmetricGroup(int n) {
  static std::map<int, Subgroup> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Perm> gens;
    if (n >= 2) {
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = i + 1;
      gens.push_back(Perm::FromCycles(n, {{1, 2}}));
      gens.push_back(Perm::FromCycles(n, {cyc}));
    }
    it = cache.emplace(n, Generate(gens, n)).first;
  }
  return it->second;
}

std::vector<std::vector<int>> Orbits(const Subgroup& g) {
  const int n = g.degree();
  std::vector<int> block(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (block[i] >= 0) continue;
    std::vector<int> orbit{i};
    block[i] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& s : g.generators()) {
        int y = s[orbit[k]];
        if (block[y] < 0) {
          block[y] = block[i];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

int Complexity(const Subgroup& g) {
  std::map<std::size_t, int> by_length;
  int best = 0;
  for (const auto& orbit : Orbits(g)) best = std::max(best, ++by_length[orbit.size()]);
  return best;
}

std::vector<Perm> GreedyGenerators(const Subgroup& g) {
  std::vector<Perm> gens;
  Subgroup span(g.degree());
  // Largest orders first keeps the lists short.
  std::vector<Perm> pool = g.elements();
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Perm& a, const Perm& b) { return a.Order() > b.Order(); });
  for (const Perm& p : pool) {
    if (span.order() == g.order()) break;
    if (span.Contains(p)) continue;
    gens.push_back(p);
    span = Generate(gens, g.degree());
  }
  return gens;
}

Subgroup Centralizer(const Subgroup& h, const Subgroup& ambient) {
  std::vector<Perm> found;
  for (const Perm& s : ambient.elements()) {
    bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                [&](const Perm& t) { return s * t == t * s; });
    if (commutes) found.push_back(s);
  }
  Subgroup c = Generate(found, h.degree());
  if (c.order() != found.size()) ThrowInternal("centralizer is not closed");
  return Generate(GreedyGenerators(c), h.degree());
}

Subgroup Centralizer(const Subgroup& h) {
  return Centralizer(h, FullSymmetricGroup(h.degree()));
}

bool ContainsOrder5(const Subgroup& h) {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [](const Perm& p) { return p.Order() == 5; });
}

std::vector<int> ElementOrderProfile(const Subgroup& h) {
  std::vector<int> out;
  out.reserve(h.order());
  for (const Perm& p : h.elements()) out.push_back(p.Order());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> AllSubgroups(const Subgroup& ambient) {
  const int n = ambient.degree();
  std::map<std::vector<Perm>, Subgroup> found;
  std::vector<Perm> cyclic_gens;
  for (const Perm& p : ambient.elements()) {
    Subgroup c = Generate({p}, n);
    if (found.emplace(c.elements(), c).second) cyclic_gens.push_back(p);
  }
  // Every subgroup is the join of its cyclic subgroups, so repeatedly
  // joining known subgroups with cyclic ones reaches all of them.
  std::vector<Subgroup> frontier;
  for (const auto& [key, g] : found) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& k : frontier) {
      for (const Perm& p : cyclic_gens) {
        if (k.Contains(p)) continue;
        std::vector<Perm> gens = k.generators();
        gens.push_back(p);
        Subgroup joined = Generate(gens, n);
        if (found.emplace(joined.elements(), joined).second) next.push_back(joined);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::optional<Perm> ConjugatingElement(const Subgroup& a, const Subgroup& b,
                                       const Subgroup& ambient) {
  if (a.degree() != b.degree() || a.order() != b.order()) return std::nullopt;
  for (const Perm& s : ambient.elements()) {
    if (a.Conjugate(s) == b) return s;
  }
  return std::nullopt;
}

}  // namespace dpforms
