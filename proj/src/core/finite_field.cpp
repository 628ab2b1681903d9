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

#include "finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <tuple>

#include "error.hpp"

namespace dpforms {

namespace fp {

FpPoly Trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly Sub(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  return Trim(std::move(r));
}

FpPoly Mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += std::uint64_t{a[i]} * b[j];
  }
  FpPoly out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i] % p);
  return Trim(std::move(out));
}

namespace {

std::uint32_t InvModP(std::uint32_t a, std::uint32_t p) {
  // p is prime and small: Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FpPoly Mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
  a = Trim(std::move(a));
  FpPoly mm = Trim(m);
  if (mm.empty()) ThrowInvalid("polynomial division by zero");
  const std::uint32_t lead_inv = InvModP(mm.back(), p);
  while (a.size() >= mm.size()) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * mm[i] % p) % p);
    }
    a = Trim(std::move(a));
  }
  return a;
}

FpPoly Gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  a = Trim(std::move(a));
  b = Trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = Mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = InvModP(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

bool IsIrreducible(const FpPoly& f_in, std::uint32_t p) {
  FpPoly f = Trim(f_in);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  const FpPoly x{0, 1};
  FpPoly h = x;  // x^(p^k) mod f
  for (int k = 1; k <= deg / 2; ++k) {
    FpPoly acc{1};
    FpPoly base = h;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = Mod(Mul(acc, base, p), f, p);
      base = Mod(Mul(base, base, p), f, p);
    }
    h = acc;
    if (Gcd(f, Sub(h, x, p), p).size() != 1) return false;
  }
  return true;
}

}  // namespace fp

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t FieldSpec::q() const {
  std::uint64_t r = 1;
  for (int i = 0; i < base_degree; ++i) r *= p;
  return r;
}

std::uint64_t FieldSpec::size() const {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  return r;
}

std::string FieldSpec::ToString() const {
  return std::to_string(p) + "^" + std::to_string(m) + ":base=" + std::to_string(base_degree);
}

FieldRef MakeField(std::uint32_t p, int e, int n) {
  if (!IsPrime(p)) ThrowInvalid(std::to_string(p) + " is not prime");
  if (e < 1 || n < 1) ThrowInvalid("extension degrees must be positive");
  const int m = e * n;
  if (m > 40 || static_cast<double>(m) * std::log2(static_cast<double>(p)) > 62) {
    ThrowInvalid("field too large");
  }
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, int, int>, FieldRef> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, e, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->m = m;
  spec->base_degree = e;
  // Monic candidates x^m + (lower part), lower part enumerated by base-p value.
  std::uint64_t limit = 1;
  for (int i = 0; i < m; ++i) limit *= p;
  for (std::uint64_t low = 0; low < limit; ++low) {
    FpPoly f(m + 1, 0);
    std::uint64_t v = low;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (fp::IsIrreducible(f, p)) {
      spec->modulus = std::move(f);
      break;
    }
  }
  if (spec->modulus.empty()) ThrowInternal("no irreducible polynomial found");
  FieldRef ref = spec;
  cache.emplace(key, ref);
  return ref;
}

FieldRef ParseFieldLiteral(std::string_view text) {
  static const std::regex kLiteral(R"(\s*(\d+)\^(\d+):base=(\d+)\s*)");
  std::cmatch mt;
  if (!std::regex_match(text.begin(), text.end(), mt, kLiteral)) {
    ThrowInvalid("malformed field literal '" + std::string(text) + "', expected p^m:base=e");
  }
  auto p = static_cast<std::uint32_t>(std::stoul(mt[1]));
  int m = std::stoi(mt[2]);
  int e = std::stoi(mt[3]);
  if (e < 1 || m % e != 0) ThrowInvalid("base degree must divide the extension degree");
  return MakeField(p, e, m / e);
}

FieldRef ParseBaseField(std::string_view text) {
  static const std::regex kPower(R"(\s*(\d+)\^(\d+)\s*)");
  static const std::regex kPlain(R"(\s*(\d+)\s*)");
  std::cmatch mt;
  if (std::regex_match(text.begin(), text.end(), mt, kPower)) {
    return MakeField(static_cast<std::uint32_t>(std::stoul(mt[1])), std::stoi(mt[2]), 1);
  }
  if (!std::regex_match(text.begin(), text.end(), mt, kPlain)) {
    ThrowInvalid("malformed field '" + std::string(text) + "', expected q or p^e");
  }
  std::uint64_t q = std::stoull(mt[1]);
  if (q < 2) ThrowInvalid("field size must be a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) ThrowInvalid(std::to_string(q) + " is not a prime power");
  return MakeField(static_cast<std::uint32_t>(p), e, 1);
}

FFElem::FFElem(FieldRef field) : field_(std::move(field)) {
  if (!field_) ThrowInvalid("null field");
  c_.assign(field_->m, 0);
}

FFElem FFElem::FromCoeffs(FieldRef field, FpPoly coeffs) {
  FFElem x(std::move(field));
  const auto& f = *x.field_;
  for (auto& c : coeffs) c %= f.p;
  FpPoly r = fp::Mod(std::move(coeffs), f.modulus, f.p);
  std::copy(r.begin(), r.end(), x.c_.begin());
  return x;
}

FFElem FFElem::FromIndex(FieldRef field, std::uint64_t index) {
  FFElem x(std::move(field));
  if (index >= x.field_->size()) ThrowInvalid("element index out of range");
  for (int i = 0; i < x.field_->m; ++i) {
    x.c_[i] = static_cast<std::uint32_t>(index % x.field_->p);
    index /= x.field_->p;
  }
  return x;
}

FFElem FFElem::Constant(FieldRef field, std::uint32_t c) {
  FFElem x(std::move(field));
  x.c_[0] = c % x.field_->p;
  return x;
}

FFElem FFElem::Generator(FieldRef field) {
  return FromCoeffs(std::move(field), {0, 1});
}

std::uint64_t FFElem::Index() const {
  std::uint64_t idx = 0;
  for (int i = field_->m - 1; i >= 0; --i) idx = idx * field_->p + c_[i];
  return idx;
}

bool FFElem::IsZero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

void FFElem::CheckSameField(const FFElem& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) ThrowInvalid("field mismatch");
}

FFElem FFElem::operator+(const FFElem& o) const {
  CheckSameField(o);
  FFElem r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % field_->p;
  return r;
}

FFElem FFElem::operator-(const FFElem& o) const {
  CheckSameField(o);
  FFElem r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + field_->p - o.c_[i]) % field_->p;
  return r;
}

FFElem FFElem::operator-() const { return FFElem(field_) - *this; }

FFElem FFElem::operator*(const FFElem& o) const {
  CheckSameField(o);
  return FromCoeffs(field_, fp::Mul(fp::Trim(c_), fp::Trim(o.c_), field_->p));
}

FFElem FFElem::Pow(std::uint64_t e) const {
  FFElem acc = One(field_);
  FFElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FFElem FFElem::Inverse() const {
  if (IsZero()) ThrowDomain("division by zero in " + field_->ToString());
  return Pow(field_->size() - 2);
}

FFElem FFElem::operator/(const FFElem& o) const { return *this * o.Inverse(); }

bool FFElem::operator==(const FFElem& o) const {
  CheckSameField(o);
  return c_ == o.c_;
}

std::vector<std::uint32_t> FFElem::ToCoeffList() const {
  FpPoly t = fp::Trim(c_);
  if (t.empty()) t.push_back(0);
  return t;
}

std::string FFElem::ToString() const {
  std::string s = "[";
  auto list = ToCoeffList();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(list[i]);
  }
  return s + "]";
}

FFElem Frobenius(const FFElem& x) { return x.Pow(x.field()->q()); }

FFElem FrobeniusPow(const FFElem& x, int k) {
  FFElem y = x;
  for (int i = 0; i < k; ++i) y = Frobenius(y);
  return y;
}

int FrobeniusOrbitSize(const FFElem& x) {
  FFElem y = Frobenius(x);
  int k = 1;
  while (!(y == x)) {
    y = Frobenius(y);
    ++k;
  }
  return k;
}

bool InBaseField(const FFElem& x) { return Frobenius(x) == x; }

std::vector<FFElem> BaseFieldElements(const FieldRef& field) {
  const int n = field->relative_degree();
  // The relative trace maps onto F_q and is F_p-linear, so the traces of the
  // monomial basis span the base field over F_p.
  std::map<std::uint64_t, FFElem> span;
  span.emplace(0, FFElem(field));
  for (int i = 0; i < field->m; ++i) {
    FpPoly mono(i + 1, 0);
    mono[i] = 1;
    FFElem y = FFElem::FromCoeffs(field, mono);
    FFElem tr(field);
    for (int j = 0; j < n; ++j) {
      tr = tr + y;
      y = Frobenius(y);
    }
    std::map<std::uint64_t, FFElem> grown = span;
    for (const auto& [idx, s] : span) {
      FFElem step = s;
      for (std::uint32_t a = 1; a < field->p; ++a) {
        step = step + tr;
        grown.emplace(step.Index(), step);
      }
    }
    span = std::move(grown);
  }
  if (span.size() != field->q()) ThrowInternal("base field enumeration has the wrong size");
  std::vector<FFElem> out;
  for (auto& [idx, s] : span) out.push_back(s);
  return out;
}

DegreeEnumerator::DegreeEnumerator(FieldRef field, int l) : field_(std::move(field)), l_(l) {
  const int n = field_->relative_degree();
  if (l < 1 || n % l != 0) {
    ThrowInvalid("degree " + std::to_string(l) + " does not divide the relative degree " +
                 std::to_string(n));
  }
}

std::optional<FFElem> DegreeEnumerator::Next() {
  const int n = field_->relative_degree();
  if (l_ == 1) {
    // Base-field elements: 1 first, then the rest in canonical order.
    if (cursor_ == 1) {
      cursor_ = 2;
      seen_.insert(FFElem::One(field_).Index());
      return FFElem::One(field_);
    }
    for (const FFElem& b : BaseFieldElements(field_)) {
      if (b.IsZero() || !seen_.insert(b.Index()).second) continue;
      return b;
    }
    return std::nullopt;
  }
  while (cursor_ < field_->size()) {
    FFElem y = FFElem::FromIndex(field_, cursor_++);
    FFElem candidate = y;
    if (l_ < n) {
      candidate = FFElem(field_);
      for (int j = 0; j < n / l_; ++j) {
        candidate = candidate + y;
        y = FrobeniusPow(y, l_);
      }
    }
    if (FrobeniusOrbitSize(candidate) != l_) continue;
    if (!seen_.insert(candidate.Index()).second) continue;
    return candidate;
  }
  return std::nullopt;
}

FFElem ElementOfDegree(const FieldRef& field, int l) {
  DegreeEnumerator it(field, l);
  auto x = it.Next();
  if (!x) ThrowInternal("no element of the requested degree");
  return *x;
}

std::vector<FFElem> MinimalPolynomial(const FFElem& x) {
  const FieldRef& f = x.field();
  std::vector<FFElem> poly{FFElem::One(f)};
  FFElem root = x;
  const int d = FrobeniusOrbitSize(x);
  for (int k = 0; k < d; ++k) {
    // poly *= (t - root)
    std::vector<FFElem> next(poly.size() + 1, FFElem(f));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * root;
    }
    poly = std::move(next);
    root = Frobenius(root);
  }
  return poly;
}

FFElem Evaluate(const std::vector<FFElem>& poly, const FFElem& x) {
  FFElem acc(x.field());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace dpforms
