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

#ifndef DPFORMS_CORE_PERM_HPP_
#define DPFORMS_CORE_PERM_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpforms {

inline constexpr int kMaxDegree = 10;

// A permutation of {0, ..., degree-1}, stored as its image sequence.
// All textual I/O is 1-indexed cycle notation, e.g. "(1 2)(3 4)"; the
// identity prints as "()".
//
// Composition follows function notation: (a * b)(i) == a(b(i)).
class Perm {
 public:
  Perm() : Perm(1) {}
  explicit Perm(int degree);

  // `images` is 0-indexed; throws unless it is a bijection.
  static Perm FromImages(std::span<const int> images);
  // Parses cycle notation with 1-indexed points separated by spaces or
  // commas. "()", "", "id" and "e" denote the identity.
  static Perm Parse(std::string_view text, int degree);
  // Product of the given 1-indexed cycles.
  static Perm FromCycles(int degree,
                         const std::vector<std::vector<int>>& cycles);

  int degree() const { return degree_; }
  int operator[](int i) const { return images_[i]; }

  Perm operator*(const Perm& rhs) const;
  Perm Inverse() const;
  Perm Pow(long long e) const;
  // this * x * this^-1
  Perm Conjugate(const Perm& x) const;

  int Order() const;
  bool IsIdentity() const;
  // 0-indexed cycles of length >= 2, each starting at its smallest point,
  // sorted by that point.
  std::vector<std::vector<int>> Cycles() const;
  std::string ToString() const;

  bool operator==(const Perm& rhs) const = default;
  std::strong_ordering operator<=>(const Perm& rhs) const = default;

 private:
  std::uint8_t degree_;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

// All n! permutations of degree n, in lexicographic image order.
std::vector<Perm> SymmetricGroup(int n);

// Splits a generator list such as "(1 2 3),(1 2)" or "(1 2 3); (4 5)".
// Separators are ',' or ';' outside parentheses.
std::vector<Perm> ParseGenerators(std::string_view text, int degree);

}  // namespace dpforms

#endif  // DPFORMS_CORE_PERM_HPP_
