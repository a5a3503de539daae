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

#include "ultragreed/group_algebra.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "ultragreed/error.h"

namespace ultragreed {

GroupAlgebraElement GroupAlgebraElement::Monomial(std::int64_t alpha,
                                                  const FieldElement& c) {
  GroupAlgebraElement out(c.field());
  if (!c.is_zero()) out.terms_.push_back({alpha, c.code()});
  return out;
}

GroupAlgebraElement GroupAlgebraElement::FromTerms(Field field,
                                                   std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) {
                     return a.exponent < b.exponent;
                   });
  GroupAlgebraElement out(std::move(field));
  for (const auto& t : terms) {
    if (t.code >= out.field_.order()) {
      throw DomainError("coefficient code out of range");
    }
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().code = out.field_.Add(out.terms_.back().code, t.code);
      if (out.terms_.back().code == 0) out.terms_.pop_back();
    } else if (t.code != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

FieldElement GroupAlgebraElement::coeff(std::int64_t beta) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), beta,
      [](const Term& t, std::int64_t b) { return t.exponent < b; });
  if (it == terms_.end() || it->exponent != beta) return field_.zero();
  return field_.FromCode(it->code);
}

std::int64_t GroupAlgebraElement::ord() const {
  if (is_zero()) throw DomainError("ord of the zero element is undefined");
  return terms_.front().exponent;
}

FieldElement GroupAlgebraElement::pi() const {
  if (!in_Lplus()) {
    throw DomainError("pi is only defined on L+, got ord " +
                      std::to_string(ord()));
  }
  return coeff(0);
}

GroupAlgebraElement GroupAlgebraElement::Shifted(std::int64_t k) const {
  GroupAlgebraElement out = *this;
  for (auto& t : out.terms_) t.exponent += k;
  return out;
}

GroupAlgebraElement GroupAlgebraElement::Scaled(const FieldElement& c) const {
  if (!(c.field() == field_)) {
    throw DomainError("scalar from " + c.field().ToString() +
                      " applied to an element over " + field_.ToString());
  }
  GroupAlgebraElement out(field_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back({t.exponent, field_.Mul(t.code, c.code())});
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out = *this;
  for (auto& t : out.terms_) t.code = field_.Neg(t.code);
  return out;
}

void GroupAlgebraElement::CheckSameField(const GroupAlgebraElement& o) const {
  if (!(field_ == o.field_)) {
    throw DomainError("cannot mix group algebra elements over " +
                      field_.ToString() + " and " + o.field_.ToString());
  }
}

GroupAlgebraElement& GroupAlgebraElement::Accumulate(
    const GroupAlgebraElement& o, bool negate) {
  CheckSameField(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() ||
        (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(*a++);
      continue;
    }
    const std::uint64_t bc = negate ? field_.Neg(b->code) : b->code;
    if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back({b->exponent, bc});
    } else {
      const std::uint64_t c = field_.Add(a->code, bc);
      if (c != 0) merged.push_back({a->exponent, c});
      ++a;
    }
    ++b;
  }
  terms_ = std::move(merged);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(
    const GroupAlgebraElement& o) {
  return Accumulate(o, false);
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(
    const GroupAlgebraElement& o) {
  return Accumulate(o, true);
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                              const GroupAlgebraElement& b) {
  a.CheckSameField(b);
  const Field& f = a.field_;
  std::map<std::int64_t, std::uint64_t> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto& slot = acc[x.exponent + y.exponent];
      slot = f.Add(slot, f.Mul(x.code, y.code));
    }
  }
  GroupAlgebraElement out(f);
  out.terms_.reserve(acc.size());
  for (const auto& [e, c] : acc) {
    if (c != 0) out.terms_.push_back({e, c});
  }
  return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  CheckSameField(o);
  return terms_ == o.terms_;
}

std::string GroupAlgebraElement::ToString() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << field_.FromCode(terms_[i].code) << "*t^" << terms_[i].exponent;
  }
  return os.str();
}

}  // namespace ultragreed
