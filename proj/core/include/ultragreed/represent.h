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

#ifndef ULTRAGREED_REPRESENT_H_
#define ULTRAGREED_REPRESENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultragreed/field.h"
#include "ultragreed/geg.h"
#include "ultragreed/group_algebra.h"
#include "ultragreed/setsys.h"
#include "ultragreed/ultra.h"

namespace ultragreed {

// An injective map E -> L whose induced distance -ord(f(a) - f(b)) equals
// d(a, b), with every image in u + t_{-gamma} L+.
struct ValadicEmbedding {
  Field field;
  std::vector<Label> labels;  // ascending, as in the source triple
  std::vector<GroupAlgebraElement> images;
  std::int64_t gamma = 0;
  GroupAlgebraElement u;

  // Throws DomainError for an unknown label.
  const GroupAlgebraElement& image(const Label& l) const;
};

// Recursive construction: split E into the open balls of radius
// alpha = max d, send block i to u + lambda_i t_{-alpha} with lambda_i the
// field element of code i, and recurse with gamma = the largest distance
// below alpha. Throws DomainError when q < mcs(t) or gamma < max d.
ValadicEmbedding ValadicEmbed(const UltraTriple& t, const Field& field,
                              std::int64_t gamma,
                              const GroupAlgebraElement& u);

struct EmbeddingReport {
  bool injective = true;
  bool distances = true;
  bool positioned = true;
  // A pair of indices witnessing the first failure, if any.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool ok() const { return injective && distances && positioned; }
};
// Throws DomainError when the label sets differ.
EmbeddingReport CheckEmbedding(const UltraTriple& t, const ValadicEmbedding& e);
inline bool ValadicVerify(const UltraTriple& t, const ValadicEmbedding& e) {
  return CheckEmbedding(t, e).ok();
}

// The triple induced on the images: same labels and weights, distances
// -ord(f(a) - f(b)). Throws DomainError if two images coincide.
UltraTriple InducedTriple(const UltraTriple& t, const ValadicEmbedding& e);

// A vector family over K whose Gaussian elimination greedoid is the
// Bhargava greedoid of `triple`.
struct Representation {
  UltraTriple triple;
  ValadicEmbedding embedding;
  GreedySchedule schedule;  // computed on the induced triple
  // lifted(j, e) = a(e, j) = t_{rho_j - w(e)} f_j(f(e)) in L+, where
  // f_j = prod_{i<j} (X - f(c_i)).
  Matrix<GroupAlgebraElement> lifted;
  VectorFamily family;  // pi applied entrywise to `lifted`
};

// Throws DomainError "field size q < mcs M" when the field is too small.
Representation BuildRepresentation(const UltraTriple& t, const Field& field);

// Scalars r_i = a_{r+2,i} / det(sub_{1..r+1}^{N,i} A) for i in C (ascending
// labels), with the columns of N placed first. Conditions checked:
//   (i)   N + i is a member for every i in C;
//   (ii)  N + {i, j} is a member for distinct i, j in C;
//   (iii) (N + {i, j}) - p is not a member for p in N and distinct i, j in C.
// Throws DomainError naming the failing condition, or if N and C meet, or if
// two scalars coincide. When |C| = 1 and the family has only r+1 rows the
// missing entry a_{r+2,i} is taken as zero.
std::vector<FieldElement> KboundScalars(const VectorFamily& fam,
                                        const std::vector<Label>& n,
                                        const std::vector<Label>& c);

// Sets N, C for the field-size bound on a triple with constant weights: C is
// a maximum clique with common distance beta, B the closed ball of radius
// beta around it, S a smallest member of the Bhargava greedoid meeting B in
// at least two points, N = S - B.
struct ConverseWitness {
  std::int64_t beta = 0;
  std::vector<Label> clique;  // C
  std::vector<Label> ball;    // B
  std::vector<Label> secant;  // S
  std::vector<Label> rest;    // N
};
// Throws DomainError when w is not constant or mcs(t) < 2.
ConverseWitness FindConverseWitness(const UltraTriple& t);

// Largest search space ConverseSearch accepts, in families.
inline constexpr std::uint64_t kConverseSearchLimit = std::uint64_t{1} << 24;

// Exhaustive search over all |E| x |E| families over `field` for one whose
// Gaussian elimination greedoid equals `target`. Families are indexed in
// base q with entry (k mod m, k div m) as digit k; the least index wins, so
// the result does not depend on `threads` (0 = hardware concurrency).
// Throws DomainError when q^(|E|^2) exceeds kConverseSearchLimit.
std::optional<VectorFamily> ConverseSearch(const SetSystem& target,
                                           const Field& field,
                                           unsigned threads = 0);

}  // namespace ultragreed

#endif  // ULTRAGREED_REPRESENT_H_
