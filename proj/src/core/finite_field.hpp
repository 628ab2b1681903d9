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

#ifndef DPFORMS_CORE_FINITE_FIELD_HPP_
#define DPFORMS_CORE_FINITE_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dpforms {

// Dense polynomial over F_p, little-endian coefficients, no trailing zeros
// (the zero polynomial is empty).
using FpPoly = std::vector<std::uint32_t>;

namespace fp {

FpPoly Trim(FpPoly a);
FpPoly Sub(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly Mul(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly Mod(FpPoly a, const FpPoly& m, std::uint32_t p);
FpPoly Gcd(FpPoly a, FpPoly b, std::uint32_t p);
// Rabin-style test: no common factor with x^(p^k) - x for k <= deg/2.
bool IsIrreducible(const FpPoly& f, std::uint32_t p);

}  // namespace fp

bool IsPrime(std::uint64_t n);

// F_{p^m} = F_p[x]/(modulus), viewed as an extension of F_q with q = p^e,
// e = base_degree. The modulus is the smallest monic irreducible of degree m
// when polynomials are ordered by their base-p value.
struct FieldSpec {
  std::uint32_t p = 2;
  int m = 1;
  int base_degree = 1;
  FpPoly modulus;

  std::uint64_t q() const;      // size of the base field
  std::uint64_t size() const;   // p^m
  int relative_degree() const { return m / base_degree; }
  // "p^m:base=e"
  std::string ToString() const;
  bool operator==(const FieldSpec&) const = default;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

// F_{q^n} over F_q with q = p^e. Results are memoized.
FieldRef MakeField(std::uint32_t p, int e, int n);
// Parses "p^m:base=e".
FieldRef ParseFieldLiteral(std::string_view text);
// Parses a base field given as "q" (a prime power) or "p^e"; the result has
// relative degree 1.
FieldRef ParseBaseField(std::string_view text);

class FFElem {
 public:
  explicit FFElem(FieldRef field);  // zero

  static FFElem FromCoeffs(FieldRef field, FpPoly coeffs);
  // Element whose base-p digits are its coefficients.
  static FFElem FromIndex(FieldRef field, std::uint64_t index);
  static FFElem Constant(FieldRef field, std::uint32_t c);
  static FFElem One(FieldRef field) { return Constant(std::move(field), 1); }
  // The residue class of x.
  static FFElem Generator(FieldRef field);

  const FieldRef& field() const { return field_; }
  // Always m entries.
  const FpPoly& coeffs() const { return c_; }
  std::uint64_t Index() const;
  bool IsZero() const;

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  FFElem Pow(std::uint64_t e) const;
  FFElem Inverse() const;

  bool operator==(const FFElem& o) const;
  // Canonical order: by Index().
  bool operator<(const FFElem& o) const { return Index() < o.Index(); }

  // Little-endian coefficient list, e.g. "[1,0,1]"; zero prints "[0]".
  std::string ToString() const;
  // Trimmed coefficient list ({0} for zero), the JSON element form.
  std::vector<std::uint32_t> ToCoeffList() const;

 private:
  void CheckSameField(const FFElem& o) const;

  FieldRef field_;
  FpPoly c_;
};

// Relative Frobenius x -> x^q.
FFElem Frobenius(const FFElem& x);
FFElem FrobeniusPow(const FFElem& x, int k);
// Size of the Frobenius orbit of x, i.e. its degree over the base field.
int FrobeniusOrbitSize(const FFElem& x);
bool InBaseField(const FFElem& x);

// All q base-field elements inside `field`, in canonical order.
std::vector<FFElem> BaseFieldElements(const FieldRef& field);

// Enumerates the elements of degree exactly l over the base field, each
// once, in the order described for ElementOfDegree.
class DegreeEnumerator {
 public:
  DegreeEnumerator(FieldRef field, int l);
  std::optional<FFElem> Next();

 private:
  FieldRef field_;
  int l_;
  std::uint64_t cursor_ = 1;
  std::set<std::uint64_t> seen_;
};

// An element of degree exactly l over the base field. l = 1 gives 1. For
// l < n the candidates are the relative traces down to F_{q^l} of the field
// elements in canonical order; for l = n the field elements themselves.
FFElem ElementOfDegree(const FieldRef& field, int l);

// Monic minimal polynomial over F_q, little-endian, coefficients represented
// inside the field of x.
std::vector<FFElem> MinimalPolynomial(const FFElem& x);
FFElem Evaluate(const std::vector<FFElem>& poly, const FFElem& x);

}  // namespace dpforms

#endif  // DPFORMS_CORE_FINITE_FIELD_HPP_
