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

#ifndef DPFORMS_CORE_SUBGROUP_HPP_
#define DPFORMS_CORE_SUBGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "perm.hpp"

namespace dpforms {

// A finite permutation group given by generators together with its full,
// sorted element list.
class Subgroup {
 public:
  // Trivial group of the given degree.
  explicit Subgroup(int degree = 5);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  // Sorted ascending; always contains the identity.
  const std::vector<Perm>& elements() const { return elements_; }

  bool Contains(const Perm& p) const;
  bool IsSubgroupOf(const Subgroup& other) const;
  bool IsTrivial() const { return elements_.size() == 1; }
  bool IsCyclic() const;
  // Smallest element (in image order) generating the group, if cyclic.
  std::optional<Perm> CanonicalGenerator() const;

  // s H s^-1
  Subgroup Conjugate(const Perm& s) const;

  // Equality of element sets; generators are ignored.
  bool operator==(const Subgroup& rhs) const {
    return degree_ == rhs.degree_ && elements_ == rhs.elements_;
  }

  friend Subgroup Generate(std::span<const Perm> gens, int degree);

 private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// Closure of `gens` under composition. Throws "degree mismatch" if any
// generator has a degree other than `degree`.
Subgroup Generate(std::span<const Perm> gens, int degree);
Subgroup Generate(std::initializer_list<Perm> gens, int degree);

// The full symmetric group S_n as a Subgroup.
const Subgroup& FullSymmetricGroup(int n);

// Orbits of the natural action, each sorted, ordered by smallest member.
// Points are 0-indexed.
std::vector<std::vector<int>> Orbits(const Subgroup& g);

// Largest number of orbits sharing one length.
int Complexity(const Subgroup& g);

// Short generating list: elements by descending order, each kept only if it
// enlarges the span of those before it.
std::vector<Perm> GreedyGenerators(const Subgroup& g);

// Elements of `ambient` commuting with every generator of `h`.
Subgroup Centralizer(const Subgroup& h, const Subgroup& ambient);
// Centralizer inside S_degree.
Subgroup Centralizer(const Subgroup& h);

bool ContainsOrder5(const Subgroup& h);

// Multiset of element orders, sorted. Distinguishes the isomorphism types of
// all subgroups of S5 (checked in tests), so it is used as an isomorphism
// invariant for groups of that size range.
std::vector<int> ElementOrderProfile(const Subgroup& h);

// Every subgroup of `ambient`, sorted by (order, element list).
std::vector<Subgroup> AllSubgroups(const Subgroup& ambient);

// If some s in `ambient` has s a s^-1 == b, returns the smallest such s.
std::optional<Perm> ConjugatingElement(const Subgroup& a, const Subgroup& b,
                                       const Subgroup& ambient);

}  // namespace dpforms

#endif  // DPFORMS_CORE_SUBGROUP_HPP_
