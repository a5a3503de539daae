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

#ifndef ULTRAGREED_GROUP_ALGEBRA_H_
#define ULTRAGREED_GROUP_ALGEBRA_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ultragreed/field.h"

namespace ultragreed {

// An element of the group algebra L = K[Z]: a finite K-linear combination of
// basis elements t_a with t_a t_b = t_{a+b}. L+ = K[Z>=0] is the subring of
// elements with no negative exponent.
//
// Stored sparsely: strictly increasing exponents, no zero coefficients. The
// zero element has no terms.
class GroupAlgebraElement {
 public:
  struct Term {
    std::int64_t exponent;
    std::uint64_t code;  // coefficient, as a code of field()
    bool operator==(const Term&) const = default;
  };

  // The zero element.
  explicit GroupAlgebraElement(Field field) : field_(std::move(field)) {}

  // c * t_alpha; zero when c is zero.
  static GroupAlgebraElement Monomial(std::int64_t alpha, const FieldElement& c);
  // Sum of arbitrary (exponent, code) pairs; repeated exponents are combined.
  static GroupAlgebraElement FromTerms(Field field, std::vector<Term> terms);
  static GroupAlgebraElement One(Field field) {
    return Monomial(0, field.one());
  }

  const Field& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // The coefficient [t_beta] of this element.
  FieldElement coeff(std::int64_t beta) const;
  // Smallest exponent with a nonzero coefficient. Throws DomainError on zero.
  std::int64_t ord() const;
  bool in_Lplus() const { return is_zero() || terms_.front().exponent >= 0; }
  // Membership in the ideal spanned by t_d with d > 0.
  bool in_Lplusplus() const {
    return is_zero() || terms_.front().exponent > 0;
  }
  // The constant-term map L+ -> K. Throws DomainError outside L+.
  FieldElement pi() const;

  // Multiplication by t_k.
  GroupAlgebraElement Shifted(std::int64_t k) const;
  GroupAlgebraElement Scaled(const FieldElement& c) const;

  GroupAlgebraElement operator-() const;
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);
  GroupAlgebraElement& operator*=(const GroupAlgebraElement& o) {
    return *this = *this * o;
  }

  bool operator==(const GroupAlgebraElement& o) const;

  // e.g. "1*t^2 + 4*t^3"; "0" for zero.
  std::string ToString() const;

 private:
  void CheckSameField(const GroupAlgebraElement& o) const;
  GroupAlgebraElement& Accumulate(const GroupAlgebraElement& o, bool negate);

  Field field_;
  std::vector<Term> terms_;
};

}  // namespace ultragreed

#endif  // ULTRAGREED_GROUP_ALGEBRA_H_
