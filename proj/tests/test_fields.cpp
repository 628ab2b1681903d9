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

#include <random>
#include <set>
#include <vector>

#include "core/error.hpp"
#include "core/finite_field.hpp"

using namespace dpforms;

namespace {

// Monic polynomials of degree d over F_p, little-endian.
std::vector<FpPoly> Monic(std::uint32_t p, int d) {
  std::vector<FpPoly> out;
  FpPoly c(d, 0);
  while (true) {
    FpPoly f = c;
    f.push_back(1);
    out.push_back(f);
    int k = 0;
    while (k < d && c[k] == p - 1) c[k++] = 0;
    if (k == d) break;
    ++c[k];
  }
  return out;
}

FpPoly Times(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Reducible monic polynomials of degree d, as products of lower-degree ones.
std::set<FpPoly> Reducible(std::uint32_t p, int d) {
  std::set<FpPoly> out;
  for (int k = 1; k <= d / 2; ++k) {
    for (const auto& a : Monic(p, k)) {
      for (const auto& b : Monic(p, d - k)) out.insert(Times(a, b, p));
    }
  }
  return out;
}

FFElem E(const FieldRef& f, FpPoly c) { return FFElem::FromCoeffs(f, std::move(c)); }

}  // namespace

TEST_CASE("moduli") {
  CHECK(MakeField(2, 1, 1)->modulus == FpPoly{0, 1});
  CHECK(MakeField(2, 1, 2)->modulus == FpPoly{1, 1, 1});
  CHECK(MakeField(3, 1, 2)->modulus == FpPoly{1, 0, 1});
  CHECK_THROWS_WITH(MakeField(4, 1, 1), doctest::Contains("not prime"));
  // The chosen modulus is the first irreducible in base-p order.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 3}, {2, 4}, {2, 6}, {3, 2},
                                                               {3, 3}, {5, 2}, {7, 2}}) {
    auto bad = Reducible(p, m);
    FpPoly first;
    for (const auto& f : Monic(p, m)) {
      if (!bad.count(f)) {
        first = f;
        break;
      }
    }
    CAPTURE(p);
    CAPTURE(m);
    CHECK(MakeField(p, 1, m)->modulus == first);
    for (const auto& f : Monic(p, m)) CHECK(fp::IsIrreducible(f, p) == !bad.count(f));
  }
}

TEST_CASE("field literals") {
  FieldRef f = ParseFieldLiteral("2^6:base=1");
  CHECK(f->p == 2);
  CHECK(f->m == 6);
  CHECK(f->ToString() == "2^6:base=1");
  CHECK(ParseBaseField("9")->ToString() == "3^2:base=2");
  CHECK(ParseBaseField("2^3")->q() == 8);
  CHECK_THROWS_AS(ParseBaseField("6"), Error);
  CHECK_THROWS_AS(ParseFieldLiteral("2^6:base=4"), Error);
}

TEST_CASE("Frobenius") {
  FieldRef f4 = MakeField(2, 1, 2);
  FFElem w = FFElem::Generator(f4);
  CHECK(Frobenius(w) == w * w);
  CHECK(Frobenius(w) == w + FFElem::One(f4));
  for (const FieldRef& f : {MakeField(2, 1, 6), MakeField(3, 2, 2), MakeField(5, 1, 3)}) {
    int fixed = 0;
    for (std::uint64_t i = 0; i < f->size(); ++i) {
      FFElem x = FFElem::FromIndex(f, i);
      REQUIRE(FrobeniusPow(x, f->relative_degree()) == x);
      fixed += Frobenius(x) == x;
      CHECK(InBaseField(x) == (Frobenius(x) == x));
    }
    CHECK(static_cast<std::uint64_t>(fixed) == f->q());
    CHECK(BaseFieldElements(f).size() == f->q());
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (const FieldRef& f : {MakeField(2, 1, 5), MakeField(3, 1, 4), MakeField(2, 2, 3),
                            MakeField(7, 1, 2), MakeField(3, 2, 3)}) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f->size() - 1);
    for (int t = 0; t < 200; ++t) {
      FFElem a = FFElem::FromIndex(f, pick(rng));
      FFElem b = FFElem::FromIndex(f, pick(rng));
      FFElem c = FFElem::FromIndex(f, pick(rng));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == FFElem(f));
      if (!a.IsZero()) REQUIRE(a * a.Inverse() == FFElem::One(f));
      REQUIRE(Frobenius(a * b + c) == Frobenius(a) * Frobenius(b) + Frobenius(c));
    }
  }
  CHECK_THROWS_AS(FFElem(MakeField(2, 1, 2)) == FFElem(MakeField(2, 1, 3)), Error);
}

TEST_CASE("elements of a given degree") {
  FieldRef f8 = MakeField(2, 1, 3);
  CHECK(ElementOfDegree(f8, 1) == FFElem::One(f8));
  FFElem x = ElementOfDegree(f8, 3);
  CHECK(x == FFElem::Generator(f8));
  CHECK(x.Pow(8) == x);
  CHECK_FALSE(x.Pow(2) == x);
  FieldRef f4 = MakeField(2, 1, 2);
  FFElem w = ElementOfDegree(f4, 2);
  CHECK(MinimalPolynomial(w) ==
        std::vector<FFElem>{FFElem::One(f4), FFElem::One(f4), FFElem::One(f4)});
  CHECK_THROWS_AS(ElementOfDegree(f8, 2), Error);
  FieldRef f64 = MakeField(2, 1, 6);
  for (int l : {1, 2, 3, 6}) CHECK(FrobeniusOrbitSize(ElementOfDegree(f64, l)) == l);
  // Each element of exact degree l appears once.
  for (int l : {1, 2, 3, 6}) {
    DegreeEnumerator it(f64, l);
    std::set<std::uint64_t> seen;
    while (auto y = it.Next()) {
      CHECK(FrobeniusOrbitSize(*y) == l);
      CHECK(seen.insert(y->Index()).second);
    }
    int expected = l == 1 ? 1 : l == 2 ? 2 : l == 3 ? 6 : 54;
    CHECK(seen.size() == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("minimal polynomials") {
  FieldRef f = MakeField(3, 1, 4);
  FFElem c = FFElem::Constant(f, 2);
  CHECK(MinimalPolynomial(c) == std::vector<FFElem>{-c, FFElem::One(f)});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, f->size() - 1);
  for (int t = 0; t < 100; ++t) {
    FFElem x = FFElem::FromIndex(f, pick(rng));
    auto mu = MinimalPolynomial(x);
    REQUIRE(static_cast<int>(mu.size()) - 1 == FrobeniusOrbitSize(x));
    CHECK(Evaluate(mu, x).IsZero());
    for (const FFElem& coef : mu) CHECK(InBaseField(coef));
    // Roots are exactly the orbit.
    int roots = 0;
    for (std::uint64_t i = 0; i < f->size(); ++i) roots += Evaluate(mu, FFElem::FromIndex(f, i)).IsZero();
    CHECK(roots == FrobeniusOrbitSize(x));
  }
}

TEST_CASE("element text") {
  FieldRef f = MakeField(2, 1, 3);
  CHECK(E(f, {1, 0, 1}).ToString() == "[1,0,1]");
  CHECK(FFElem(f).ToString() == "[0]");
  CHECK(E(f, {0, 1}).ToCoeffList() == std::vector<std::uint32_t>{0, 1});
}
