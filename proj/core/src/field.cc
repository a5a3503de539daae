// Copyright 2026 The ultragreed Authors.
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

#include "ultragreed/field.h"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "ultragreed/error.h"

namespace ultragreed {
namespace {

// Polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a, p);
    a = MulMod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t InvMod(std::uint64_t a, std::uint64_t p) {
  return PowMod(a, p - 2, p);
}

void Trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g (g nonzero).
Poly PolyMod(Poly f, const Poly& g, std::uint64_t p) {
  Trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = InvMod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = MulMod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - MulMod(c, g[i], p)) % p;
    }
    Trim(f);
  }
  return f;
}

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + MulMod(a[i], b[j], p)) % p;
    }
  }
  return PolyMod(std::move(r), m, p);
}

Poly PolyPowMod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = PolyMod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = PolyMulMod(r, base, m, p);
    base = PolyMulMod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly PolyGcd(Poly a, Poly b, std::uint64_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly PolySub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  Trim(a);
  return a;
}

bool RabinIrreducible(std::uint64_t p, const Poly& f) {
  const std::uint64_t n = f.size() - 1;
  const Poly x{0, 1};
  // frob[k] = x^(p^k) mod f, built by repeated p-th powering.
  std::vector<Poly> frob{PolyMod(x, f, p)};
  for (std::uint64_t k = 1; k <= n; ++k) {
    frob.push_back(PolyPowMod(frob.back(), p, f, p));
  }
  if (PolySub(frob[n], PolyMod(x, f, p), p).size() != 0) return false;
  std::uint64_t rest = n;
  for (std::uint64_t r = 2; r <= rest; ++r) {
    if (rest % r != 0) continue;
    while (rest % r == 0) rest /= r;
    Poly g = PolyGcd(f, PolySub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool TrialDivisionIrreducible(std::uint64_t p, const Poly& f) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    // Every monic g of degree d, coefficients enumerated as base-p digits.
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (PolyMod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

struct BuiltinModulus {
  std::uint64_t p;
  std::uint32_t n;
  std::array<std::uint64_t, 7> coeffs;
};

constexpr std::array<BuiltinModulus, 9> kBuiltinModuli{{
    {2, 2, {1, 1, 1}},           // x^2 + x + 1
    {2, 3, {1, 1, 0, 1}},        // x^3 + x + 1
    {3, 2, {1, 0, 1}},           // x^2 + 1
    {2, 4, {1, 1, 0, 0, 1}},     // x^4 + x + 1
    {5, 2, {2, 0, 1}},           // x^2 + 2
    {3, 3, {1, 2, 0, 1}},        // x^3 + 2x + 1
    {2, 5, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
    {7, 2, {1, 0, 1}},           // x^2 + 1
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},  // x^6 + x + 1
}};

constexpr std::array<std::uint64_t, 9> kBuiltinOrders{4,  8,  9,  16, 25,
                                                      27, 32, 49, 64};

// Returns p^n, or 0 if it does not fit in 63 bits.
std::uint64_t CheckedPower(std::uint64_t p, std::uint32_t n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q > (std::numeric_limits<std::uint64_t>::max() >> 1) / p) return 0;
    q *= p;
  }
  return q;
}

}  // namespace

std::uint64_t FieldSpec::order() const { return CheckedPower(p, n); }

std::span<const std::uint64_t> BuiltinExtensionOrders() {
  return kBuiltinOrders;
}

std::optional<std::vector<std::uint64_t>> DefaultModulus(std::uint64_t p,
                                                         std::uint32_t n) {
  for (const auto& m : kBuiltinModuli) {
    if (m.p == p && m.n == n) {
      return std::vector<std::uint64_t>(m.coeffs.begin(),
                                        m.coeffs.begin() + n + 1);
    }
  }
  return std::nullopt;
}

bool IsPrime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t NextAvailableOrder(std::uint64_t q) {
  for (std::uint64_t c = std::max<std::uint64_t>(q, 2);; ++c) {
    if (IsPrime(c)) return c;
    if (std::find(kBuiltinOrders.begin(), kBuiltinOrders.end(), c) !=
        kBuiltinOrders.end()) {
      return c;
    }
  }
}

bool IsMonicIrreducible(std::uint64_t p, std::span<const std::uint64_t> poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  Poly f(poly.begin(), poly.end());
  for (auto c : f) {
    if (c >= p) return false;
  }
  const auto q = CheckedPower(p, static_cast<std::uint32_t>(f.size() - 1));
  if (q != 0 && q <= (std::uint64_t{1} << 16)) {
    return TrialDivisionIrreducible(p, f);
  }
  return RabinIrreducible(p, f);
}

struct Field::Impl {
  FieldSpec spec;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> powers;  // p^i for i < n
  // Log tables for small extension fields; empty otherwise.
  std::vector<std::uint32_t> log;
  std::vector<std::uint64_t> exp;

  std::uint64_t Digit(std::uint64_t code, std::uint32_t i) const {
    return (code / powers[i]) % spec.p;
  }

  std::uint64_t PolyMul(std::uint64_t a, std::uint64_t b) const {
    const std::uint32_t n = spec.n;
    const std::uint64_t p = spec.p;
    Poly x(n), y(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      x[i] = Digit(a, i);
      y[i] = Digit(b, i);
    }
    Poly r(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        r[i + j] = (r[i + j] + MulMod(x[i], y[j], p)) % p;
      }
    }
    // The modulus is monic, so reduce top-down without inverting.
    for (std::size_t k = r.size(); k-- > n;) {
      const std::uint64_t c = r[k];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= n; ++i) {
        r[k - n + i] = (r[k - n + i] + p - MulMod(c, spec.modulus[i], p)) % p;
      }
    }
    std::uint64_t code = 0;
    for (std::uint32_t i = n; i-- > 0;) code = code * p + r[i];
    return code;
  }

  void BuildLogTables() {
    const std::uint64_t order = q - 1;
    for (std::uint64_t g = 2; g < q; ++g) {
      std::vector<std::uint64_t> seq{1};
      std::uint64_t cur = g;
      while (cur != 1 && seq.size() <= order) {
        seq.push_back(cur);
        cur = PolyMul(cur, g);
      }
      if (seq.size() != order) continue;
      exp = std::move(seq);
      log.assign(q, 0);
      for (std::uint64_t k = 0; k < order; ++k) {
        log[exp[k]] = static_cast<std::uint32_t>(k);
      }
      return;
    }
  }
};

Field Field::Make(std::uint64_t p, std::uint32_t n,
                  std::optional<std::vector<std::uint64_t>> modulus) {
  if (!IsPrime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) +
                      " is not prime");
  }
  if (p > (std::uint64_t{1} << 31)) {
    throw DomainError("field characteristic " + std::to_string(p) +
                      " exceeds 2^31");
  }
  if (n == 0) throw DomainError("field extension degree must be >= 1");
  const std::uint64_t q = CheckedPower(p, n);
  if (q == 0) throw DomainError("field order p^n does not fit in 63 bits");

  auto impl = std::make_shared<Impl>();
  impl->spec.p = p;
  impl->spec.n = n;
  impl->q = q;
  if (n == 1) {
    if (modulus && !modulus->empty()) {
      throw DomainError("prime fields take no modulus");
    }
  } else {
    if (!modulus) {
      throw DomainError("GF(" + std::to_string(p) + "^" + std::to_string(n) +
                        ") requires a modulus");
    }
    if (modulus->size() != n + 1) {
      throw DomainError("modulus must have n+1 = " + std::to_string(n + 1) +
                        " coefficients");
    }
    if (modulus->back() != 1) throw DomainError("modulus is not monic");
    if (!IsMonicIrreducible(p, *modulus)) {
      throw DomainError("modulus is not irreducible over GF(" +
                        std::to_string(p) + ")");
    }
    impl->spec.modulus = *std::move(modulus);
  }
  impl->powers.resize(n);
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    impl->powers[i] = pw;
    if (i + 1 < n) pw *= p;
  }
  if (n > 1 && q <= (std::uint64_t{1} << 16)) impl->BuildLogTables();
  return Field(std::move(impl));
}

Field Field::Make(const FieldSpec& spec) {
  if (spec.n > 1 && spec.modulus.empty()) {
    return Make(spec.p, spec.n, DefaultModulus(spec.p, spec.n));
  }
  return Make(spec.p, spec.n, spec.modulus);
}

Field Field::FromOrder(std::uint64_t q) {
  if (IsPrime(q)) return Make(q);
  for (const auto& m : kBuiltinModuli) {
    if (CheckedPower(m.p, m.n) == q) return Make(m.p, m.n, DefaultModulus(m.p, m.n));
  }
  throw DomainError("no built-in field of order " + std::to_string(q));
}

const FieldSpec& Field::spec() const { return impl_->spec; }
std::uint64_t Field::order() const { return impl_->q; }

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::FromCode(std::uint64_t code) const {
  if (code >= impl_->q) {
    throw DomainError("element code " + std::to_string(code) +
                      " out of range for " + ToString());
  }
  return FieldElement(*this, code);
}

FieldElement Field::FromInt(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(impl_->spec.p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return FieldElement(*this, static_cast<std::uint64_t>(r));
}

FieldElement Field::FromCoefficients(
    std::span<const std::uint64_t> coeffs) const {
  return FieldElement(*this, Encode(coeffs));
}

std::vector<FieldElement> Field::Enumerate() const {
  if (impl_->q > kEnumerationLimit) {
    throw DomainError("field order " + std::to_string(impl_->q) +
                      " exceeds the enumeration limit 2^20");
  }
  std::vector<FieldElement> out;
  out.reserve(impl_->q);
  for (std::uint64_t c = 0; c < impl_->q; ++c) out.emplace_back(*this, c);
  return out;
}

std::uint64_t Field::Add(std::uint64_t a, std::uint64_t b) const {
  const auto& s = impl_->spec;
  if (s.n == 1) {
    const std::uint64_t r = a + b;
    return r >= s.p ? r - s.p : r;
  }
  if (s.p == 2) return a ^ b;
  std::uint64_t code = 0;
  for (std::uint32_t i = s.n; i-- > 0;) {
    code = code * s.p + (impl_->Digit(a, i) + impl_->Digit(b, i)) % s.p;
  }
  return code;
}

std::uint64_t Field::Neg(std::uint64_t a) const {
  const auto& s = impl_->spec;
  if (s.n == 1) return a == 0 ? 0 : s.p - a;
  if (s.p == 2) return a;
  std::uint64_t code = 0;
  for (std::uint32_t i = s.n; i-- > 0;) {
    code = code * s.p + (s.p - impl_->Digit(a, i)) % s.p;
  }
  return code;
}

std::uint64_t Field::Sub(std::uint64_t a, std::uint64_t b) const {
  return Add(a, Neg(b));
}

std::uint64_t Field::Mul(std::uint64_t a, std::uint64_t b) const {
  const auto& s = impl_->spec;
  if (s.n == 1) return MulMod(a, b, s.p);
  if (a == 0 || b == 0) return 0;
  if (!impl_->log.empty()) {
    const std::uint64_t k = impl_->log[a] + impl_->log[b];
    return impl_->exp[k % (impl_->q - 1)];
  }
  return impl_->PolyMul(a, b);
}

std::uint64_t Field::Pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = Mul(r, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::Inv(std::uint64_t a) const {
  if (a == 0) throw DomainError("division by zero in " + ToString());
  const auto& s = impl_->spec;
  if (s.n == 1) return InvMod(a, s.p);
  if (!impl_->log.empty()) {
    const std::uint64_t order = impl_->q - 1;
    return impl_->exp[(order - impl_->log[a]) % order];
  }
  return Pow(a, impl_->q - 2);
}

std::uint64_t Field::Div(std::uint64_t a, std::uint64_t b) const {
  return Mul(a, Inv(b));
}

std::vector<std::uint64_t> Field::Coefficients(std::uint64_t code) const {
  std::vector<std::uint64_t> c(impl_->spec.n);
  for (std::uint32_t i = 0; i < impl_->spec.n; ++i) c[i] = impl_->Digit(code, i);
  return c;
}

std::uint64_t Field::Encode(std::span<const std::uint64_t> coeffs) const {
  const auto& s = impl_->spec;
  if (coeffs.size() != s.n) {
    throw DomainError("expected " + std::to_string(s.n) +
                      " coefficients for an element of " + ToString());
  }
  std::uint64_t code = 0;
  for (std::uint32_t i = s.n; i-- > 0;) {
    if (coeffs[i] >= s.p) {
      throw DomainError("coefficient " + std::to_string(coeffs[i]) +
                        " out of range [0, " + std::to_string(s.p) + ")");
    }
    code = code * s.p + coeffs[i];
  }
  return code;
}

std::string Field::ToString() const {
  std::ostringstream os;
  os << "GF(" << impl_->spec.p;
  if (impl_->spec.n > 1) os << "^" << impl_->spec.n;
  os << ")";
  return os.str();
}

bool Field::operator==(const Field& other) const {
  return impl_ == other.impl_ || impl_->spec == other.impl_->spec;
}

void FieldElement::CheckSameField(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw DomainError("cannot mix elements of " + field_.ToString() + " and " +
                      o.field_.ToString());
  }
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.Neg(code_));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  CheckSameField(o);
  code_ = field_.Add(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  CheckSameField(o);
  code_ = field_.Sub(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  CheckSameField(o);
  code_ = field_.Mul(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  CheckSameField(o);
  code_ = field_.Div(code_, o.code_);
  return *this;
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_.Inv(code_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(field_, field_.Pow(code_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
  CheckSameField(o);
  return code_ == o.code_;
}

std::string FieldElement::ToString() const {
  if (field_.degree() == 1) return std::to_string(code_);
  std::ostringstream os;
  os << "[";
  const auto c = coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.ToString();
}

}  // namespace ultragreed
