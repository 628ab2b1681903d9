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

#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace dpforms {

Perm::Perm(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    ThrowInvalid("permutation degree out of range: " + std::to_string(degree));
  }
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::FromImages(std::span<const int> images) {
  Perm p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= p.degree_ || seen[v]) {
      ThrowInvalid("image sequence is not a bijection");
    }
    seen[v] = true;
    p.images_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::FromCycles(int degree,
                      const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> pts;
    for (int x : cycle) {
      if (x < 1 || x > degree) {
        ThrowInvalid("point " + std::to_string(x) + " out of range 1.." +
                     std::to_string(degree));
      }
      pts.push_back(x - 1);
    }
    if (pts.size() < 2) continue;
    std::vector<int> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      ThrowInvalid("repeated point inside a cycle");
    }
    Perm c(degree);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      c.images_[pts[i]] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
    }
    // Cycles written left to right compose like function application, so
    // "(1 2)(2 3)" means (1 2) after (2 3).
    p = p * c;
  }
  return p;
}

Perm Perm::Parse(std::string_view text, int degree) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return Perm(degree);
  auto last = s.find_last_not_of(" \t");
  s = s.substr(first, last - first + 1);
  if (s == "id" || s == "e") return Perm(degree);

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') ThrowInvalid("malformed cycle notation: '" + s + "'");
    auto close = s.find(')', i);
    if (close == std::string::npos) {
      ThrowInvalid("unbalanced parenthesis in '" + s + "'");
    }
    std::string body = s.substr(i + 1, close - i - 1);
    for (char& ch : body) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(body);
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(),
                       [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        ThrowInvalid("malformed cycle notation: '" + s + "'");
      }
      cycle.push_back(std::stoi(tok));
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return FromCycles(degree, cycles);
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree_ != rhs.degree_) ThrowInvalid("degree mismatch");
  Perm out(degree_);
  for (int i = 0; i < degree_; ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Perm Perm::Inverse() const {
  Perm out(degree_);
  for (int i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Perm Perm::Pow(long long e) const {
  Perm base = e < 0 ? Inverse() : *this;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Perm acc(degree_);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Perm Perm::Conjugate(const Perm& x) const { return *this * x * Inverse(); }

int Perm::Order() const {
  int order = 1;
  for (const auto& c : Cycles()) order = std::lcm(order, static_cast<int>(c.size()));
  return order;
}

bool Perm::IsIdentity() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Perm::Cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::ToString() const {
  auto cycles = Cycles();
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.ToString();
}

std::vector<Perm> SymmetricGroup(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::FromImages(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Perm> ParseGenerators(std::string_view text, int degree) {
  std::vector<Perm> gens;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    if (current.find_first_not_of(" \t") != std::string::npos) {
      gens.push_back(Perm::Parse(current, degree));
    }
    current.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0 || depth > 1) ThrowInvalid("unbalanced parentheses in generator list");
    if (depth == 0 && (c == ',' || c == ';')) {
      flush();
      continue;
    }
    current += c;
  }
  if (depth != 0) ThrowInvalid("unbalanced parentheses in generator list");
  flush();
  return gens;
}

}  // namespace dpforms
