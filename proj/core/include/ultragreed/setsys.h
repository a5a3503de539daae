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

#ifndef ULTRAGREED_SETSYS_H_
#define ULTRAGREED_SETSYS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ultragreed/ultra.h"

namespace ultragreed {

// Subset of a ground set of at most 64 elements; bit i is the i-th smallest
// label.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;
// Guard for anything that walks all 2^|E| subsets.
inline constexpr std::size_t kBruteForceLimit = 20;

std::vector<std::size_t> MaskToIndices(Mask m);
Mask IndicesToMask(const std::vector<std::size_t>& idx);
// Canonical order: by size, then lexicographically by ascending elements.
bool CanonicalLess(Mask a, Mask b);

// A family of subsets of a labelled ground set, kept in canonical order
// without duplicates.
class SetSystem {
 public:
  SetSystem() = default;
  // `ground` must have distinct labels; it is sorted and `sets` remapped.
  SetSystem(std::vector<Label> ground, const std::vector<Mask>& sets);
  static SetSystem FromLabelSets(std::vector<Label> ground,
                                 const std::vector<std::vector<Label>>& sets);

  const std::vector<Label>& ground() const { return ground_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask m) const { return members_.contains(m); }
  // Members of cardinality k, canonical order.
  std::vector<Mask> Level(std::size_t k) const;
  std::vector<Label> LabelsOf(Mask m) const;
  std::vector<std::vector<Label>> LabelSets() const;

  bool operator==(const SetSystem& o) const {
    return ground_ == o.ground_ && sets_ == o.sets_;
  }

  // "{{}, {4}, {0,4}, ...}"
  std::string ToString() const;

 private:
  std::vector<Label> ground_;
  std::vector<Mask> sets_;
  std::unordered_set<Mask> members_;
};

// All subsets attaining the maximum perimeter among subsets of their size.
// Throws DomainError when |E| > kBruteForceLimit.
SetSystem BhargavaGreedoid(const UltraTriple& t);

// Maximum perimeter of a k-subset, for k = 0..|E|, by brute force.
std::vector<std::int64_t> MaxPerimeterByCardinality(const UltraTriple& t);

// Greedy ordering c_1..c_m of E, each c_i maximizing PER{c_1..c_i} (ties to
// the least label), and rho_j = w(c_j) + sum_{i<j} d(c_i, c_j).
struct GreedySchedule {
  std::vector<std::size_t> order;
  std::vector<std::int64_t> rho;
};
GreedySchedule ComputeGreedySchedule(const UltraTriple& t);

struct AxiomCheck {
  bool pass = true;
  std::optional<Mask> a;  // witness A, when the axiom quantifies over one
  std::optional<Mask> b;  // witness B
};

// Axioms of a strong greedoid:
//   (i)   the empty set is a member;
//   (ii)  every nonempty member B has b in B with B - b a member;
//   (iii) for members |B| = |A| + 1 some b in B - A has A + b a member;
//   (iv)  as (iii), with B - b a member for the same b.
struct GreedoidReport {
  AxiomCheck accessible_empty;      // (i)
  AxiomCheck accessible_removal;    // (ii)
  AxiomCheck augmentation;          // (iii)
  AxiomCheck strong_exchange;       // (iv)

  bool is_greedoid() const {
    return accessible_empty.pass && accessible_removal.pass &&
           augmentation.pass;
  }
  bool is_strong_greedoid() const {
    return is_greedoid() && strong_exchange.pass;
  }
};
GreedoidReport CheckGreedoidAxioms(const SetSystem& s);

// Basis exchange on the k-element members: for A, B in the level and a in
// A - B, some b in B - A has (A - a) + b in the level.
struct ExchangeCheck {
  bool pass = true;
  std::optional<Mask> a_set;
  std::optional<Mask> b_set;
  std::optional<std::size_t> removed;  // the element a
};
ExchangeCheck CheckLevelExchange(const SetSystem& s, std::size_t k);

// Image of `s` under a bijection of ground sets. Throws DomainError when the
// mapping is not a bijection on s.ground().
SetSystem Transport(const SetSystem& s, const std::map<Label, Label>& f);

}  // namespace ultragreed

#endif  // ULTRAGREED_SETSYS_H_
