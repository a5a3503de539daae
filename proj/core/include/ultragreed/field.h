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

#ifndef ULTRAGREED_FIELD_H_
#define ULTRAGREED_FIELD_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ultragreed {

// Parameters of GF(p^n). `modulus` holds the n+1 coefficients of a monic
// irreducible polynomial over GF(p), constant term first; it is empty when
// n == 1.
struct FieldSpec {
  std::uint64_t p = 2;
  std::uint32_t n = 1;
  std::vector<std::uint64_t> modulus;

  std::uint64_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

// Largest field order for which `Field::Enumerate` and exhaustive searches are
// permitted.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

// Orders with a built-in default modulus.
std::span<const std::uint64_t> BuiltinExtensionOrders();

// Default modulus for GF(p^n), or nullopt if none is built in.
std::optional<std::vector<std::uint64_t>> DefaultModulus(std::uint64_t p,
                                                         std::uint32_t n);

// Smallest order q' >= q that `Field::FromOrder` can construct (a prime, or a
// prime power with a built-in modulus).
std::uint64_t NextAvailableOrder(std::uint64_t q);

bool IsPrime(std::uint64_t v);

// Irreducibility of a monic polynomial over GF(p) (coefficients constant term
// first). Exhaustive trial division by every monic polynomial of degree up to
// deg/2 when p^deg <= 2^16, Rabin's test otherwise.
bool IsMonicIrreducible(std::uint64_t p, std::span<const std::uint64_t> poly);

class FieldElement;

// A finite field GF(p^n). Cheap to copy; all copies share one immutable
// implementation.
//
// Elements are encoded canonically as an integer code in [0, q): the residue
// c_0 + c_1 x + ... + c_{n-1} x^{n-1} has code c_0 + c_1 p + ... +
// c_{n-1} p^{n-1}. Code 0 is zero and code 1 is one.
class Field {
 public:
  // Throws DomainError for a non-prime p, n == 0, a missing, non-monic or
  // reducible modulus, or an order that does not fit in 63 bits.
  static Field Make(std::uint64_t p, std::uint32_t n = 1,
                    std::optional<std::vector<std::uint64_t>> modulus = {});
  static Field Make(const FieldSpec& spec);
  // GF(q) for a prime q or a prime power with a built-in modulus.
  static Field FromOrder(std::uint64_t q);

  const FieldSpec& spec() const;
  std::uint64_t order() const;
  std::uint64_t characteristic() const { return spec().p; }
  std::uint32_t degree() const { return spec().n; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement FromCode(std::uint64_t code) const;
  // Image of an integer under Z -> GF(p).
  FieldElement FromInt(std::int64_t v) const;
  FieldElement FromCoefficients(std::span<const std::uint64_t> coeffs) const;

  // All q elements: 0, 1, then the remaining codes in ascending order.
  // Throws DomainError when q exceeds kEnumerationLimit.
  std::vector<FieldElement> Enumerate() const;

  // Arithmetic on raw codes. Callers guarantee codes are in range.
  std::uint64_t Add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t Sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t Neg(std::uint64_t a) const;
  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const;
  // Throws DomainError on a zero divisor.
  std::uint64_t Inv(std::uint64_t a) const;
  std::uint64_t Div(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t Pow(std::uint64_t a, std::uint64_t e) const;

  std::vector<std::uint64_t> Coefficients(std::uint64_t code) const;
  std::uint64_t Encode(std::span<const std::uint64_t> coeffs) const;

  std::string ToString() const;

  // Fields are equal when their specs are; elements of equal fields mix.
  bool operator==(const Field& other) const;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class FieldElement {
 public:
  FieldElement(Field field, std::uint64_t code)
      : field_(std::move(field)), code_(code) {}

  const Field& field() const { return field_; }
  std::uint64_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }
  std::vector<std::uint64_t> coefficients() const {
    return field_.Coefficients(code_);
  }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    return a += b;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    return a -= b;
  }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) {
    return a *= b;
  }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) {
    return a /= b;
  }
  // Throws DomainError when the fields differ.
  bool operator==(const FieldElement& o) const;

  std::string ToString() const;

 private:
  void CheckSameField(const FieldElement& o) const;

  Field field_;
  std::uint64_t code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace ultragreed

#endif  // ULTRAGREED_FIELD_H_
