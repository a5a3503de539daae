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

#include <random>

#include "doctest.h"
#include "ultragreed/error.h"
#include "ultragreed/group_algebra.h"

namespace ultragreed {
namespace {

using GA = GroupAlgebraElement;

GA T(const Field& f, std::int64_t a, std::int64_t c = 1) {
  return GA::Monomial(a, f.FromInt(c));
}

GA RandomElement(std::mt19937_64& rng, const Field& f, bool nonzero,
                 std::int64_t lo = -6, std::int64_t hi = 6) {
  std::uniform_int_distribution<int> count(nonzero ? 1 : 0, 4);
  std::uniform_int_distribution<std::int64_t> exp(lo, hi);
  std::uniform_int_distribution<std::uint64_t> code(1, f.order() - 1);
  while (true) {
    std::vector<GA::Term> terms;
    for (int i = count(rng); i > 0; --i) terms.push_back({exp(rng), code(rng)});
    GA x = GA::FromTerms(f, terms);
    if (!nonzero || !x.is_zero()) return x;
  }
}

TEST_CASE("monomials and basic arithmetic") {
  const Field f5 = Field::Make(5);
  CHECK(GA::One(f5) == T(f5, 0));
  CHECK(T(f5, 5, 0).is_zero());
  const GA m = T(f5, -3, 2);
  REQUIRE(m.terms().size() == 1);
  CHECK(m.terms()[0].exponent == -3);
  CHECK(m.terms()[0].code == 2);
  CHECK(T(f5, 2) * T(f5, 3) == T(f5, 5));
  CHECK((T(f5, 2) - T(f5, 3)) + T(f5, 3) == T(f5, 2));

  const Field f2 = Field::Make(2);
  const GA s = T(f2, 0) + T(f2, 1);
  CHECK(s * s == T(f2, 0) + T(f2, 2));
}

TEST_CASE("coefficients, ord, pi") {
  const Field f7 = Field::Make(7);
  const GA x = T(f7, 2) - T(f7, 3) + T(f7, 6, 5);
  CHECK(x.coeff(3) == f7.FromInt(-1));
  CHECK(x.coeff(2).is_one());
  CHECK(GA(f7).coeff(7).is_zero());
  CHECK(x.ord() == 2);
  CHECK(T(f7, -4).ord() == -4);
  CHECK_THROWS_AS(GA(f7).ord(), DomainError);

  CHECK((T(f7, 0) + T(f7, 5)).in_Lplus());
  CHECK_FALSE(T(f7, -1).in_Lplus());
  CHECK(GA(f7).in_Lplus());
  CHECK(T(f7, 1).in_Lplusplus());
  CHECK_FALSE(T(f7, 0).in_Lplusplus());

  CHECK((T(f7, 0) + T(f7, 2, 3)).pi().is_one());
  CHECK(T(f7, 1).pi().is_zero());
  CHECK_THROWS_AS(T(f7, -1).pi(), DomainError);
  CHECK(x.ToString() == "1*t^2 + 6*t^3 + 5*t^6");
  CHECK(GA(f7).ToString() == "0");
}

TEST_CASE("mixed fields are rejected") {
  const Field a = Field::Make(3), b = Field::Make(5);
  CHECK_THROWS_AS(T(a, 0) + T(b, 0), DomainError);
  CHECK_THROWS_AS(T(a, 0) * T(b, 0), DomainError);
}

TEST_CASE("valuation laws on random elements") {
  std::mt19937_64 rng(11);
  int assertions = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    const Field f = Field::FromOrder(q);
    for (int i = 0; i < 300; ++i) {
      const GA a = RandomElement(rng, f, true), b = RandomElement(rng, f, true);
      const GA ab = a * b;
      REQUIRE_FALSE(ab.is_zero());
      REQUIRE(ab.ord() == a.ord() + b.ord());
      REQUIRE((-a).ord() == a.ord());
      if (!(a + b).is_zero()) {
        REQUIRE((a + b).ord() >= std::min(a.ord(), b.ord()));
      }
      GA prod = GA::One(f);
      std::int64_t sum = 0;
      for (int k = 0; k < 6; ++k) {
        const GA x = RandomElement(rng, f, true);
        prod *= x;
        sum += x.ord();
      }
      REQUIRE(prod.ord() == sum);
      // Ring laws.
      const GA c = RandomElement(rng, f, false);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      assertions += 7;
    }
  }
  CHECK(assertions >= 2000);
}

TEST_CASE("pi is a ring homomorphism and detects ord zero") {
  std::mt19937_64 rng(12);
  for (std::uint64_t q : {2, 3, 7, 8}) {
    const Field f = Field::FromOrder(q);
    for (int i = 0; i < 300; ++i) {
      const GA a = RandomElement(rng, f, false, 0, 5);
      const GA b = RandomElement(rng, f, false, 0, 5);
      REQUIRE(a.in_Lplus());
      REQUIRE((a * b).pi() == a.pi() * b.pi());
      REQUIRE((a + b).pi() == a.pi() + b.pi());
      if (!a.is_zero()) REQUIRE(!a.pi().is_zero() == (a.ord() == 0));
    }
  }
}

TEST_CASE("shift and scale") {
  const Field f = Field::Make(5);
  const GA x = T(f, 1) + T(f, 4, 2);
  CHECK(x.Shifted(-1) == T(f, 0) + T(f, 3, 2));
  CHECK(x.Scaled(f.FromInt(3)) == T(f, 1, 3) + T(f, 4, 1));
  CHECK(x.Scaled(f.zero()).is_zero());
}

}  // namespace
}  // namespace ultragreed
