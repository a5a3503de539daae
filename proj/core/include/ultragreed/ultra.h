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

#ifndef ULTRAGREED_ULTRA_H_
#define ULTRAGREED_ULTRA_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ultragreed {

// A ground-set label: an integer or a string. Integers order before strings;
// integers compare numerically.
class Label {
 public:
  Label(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of use
  Label(int v) : value_(std::int64_t{v}) {}  // NOLINT
  Label(std::string s) : value_(std::move(s)) {}  // NOLINT
  Label(const char* s) : value_(std::string(s)) {}  // NOLINT

  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }
  // Decimal form for integers; the string itself otherwise.
  std::string ToString() const;

  bool operator==(const Label& o) const { return value_ == o.value_; }
  bool operator<(const Label& o) const { return value_ < o.value_; }

 private:
  std::variant<std::int64_t, std::string> value_;
};

// Unvalidated input for a triple: labels in file order, weights by label and a
// full |E| x |E| distance matrix in label order (diagonal ignored).
struct RawTriple {
  std::vector<Label> labels;
  std::map<Label, std::int64_t> weights;
  std::vector<std::vector<std::int64_t>> distances;
};

// Outcome of checking a RawTriple. On failure `witness` names the labels
// involved: (a, b) for asymmetry, (a, b, c) with d(a,b) > max(d(a,c), d(b,c))
// for an ultrametric violation, the repeated label for duplicates.
struct TripleReport {
  enum class Failure {
    kNone,
    kDuplicateLabel,
    kShape,
    kMissingWeight,
    kAsymmetry,
    kUltrametric,
  };
  Failure failure = Failure::kNone;
  std::vector<Label> witness;
  std::string message;

  bool ok() const { return failure == Failure::kNone; }
};

TripleReport CheckTriple(const RawTriple& raw);

// A finite ultra triple (E, w, d) with integer weights and distances.
// Elements are addressed by index; indices follow ascending label order, so
// "least label" and "least index" coincide.
class UltraTriple {
 public:
  UltraTriple() = default;

  // Throws DomainError carrying the report message when CheckTriple fails.
  static UltraTriple Validate(const RawTriple& raw);
  // Convenience for integer-labelled triples built in code.
  static UltraTriple FromMatrix(std::vector<Label> labels,
                                std::vector<std::int64_t> weights,
                                std::vector<std::vector<std::int64_t>> distances);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t i) const { return labels_[i]; }
  std::int64_t weight(std::size_t i) const { return weights_[i]; }
  // d(i, j) for i != j.
  std::int64_t distance(std::size_t i, std::size_t j) const {
    return distances_[i * labels_.size() + j];
  }

  // Throws DomainError for an unknown label.
  std::size_t IndexOf(const Label& l) const;
  std::vector<std::size_t> IndicesOf(std::span<const Label> ls) const;

  // The sub-triple on `indices` (restricted w and d).
  UltraTriple Restrict(std::span<const std::size_t> indices) const;
  // The triple obtained by renaming every label through `mapping`, which must
  // be a bijection defined on all labels.
  UltraTriple Relabel(const std::map<Label, Label>& mapping) const;

  RawTriple ToRaw() const;

 private:
  std::vector<Label> labels_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> distances_;  // row-major, diagonal zero
};

// Sum of weights plus the distances of all unordered pairs. Throws DomainError
// on overflow.
std::int64_t Perimeter(const UltraTriple& t, std::span<const std::size_t> a);

// Largest pairwise distance, or nullopt when |E| <= 1.
std::optional<std::int64_t> MaxDistance(const UltraTriple& t);
// Distinct pairwise distance values, ascending.
std::vector<std::int64_t> DistanceValues(const UltraTriple& t);

// {f : f = e or d(f,e) < alpha}, ascending.
std::vector<std::size_t> OpenBall(const UltraTriple& t, std::int64_t alpha,
                                  std::size_t e);
// {f : f = e or d(f,e) <= alpha}, ascending.
std::vector<std::size_t> ClosedBall(const UltraTriple& t, std::int64_t alpha,
                                    std::size_t e);

struct CliqueInfo {
  bool is_clique = false;
  // The common distance; nullopt for cliques of size <= 1, which are
  // alpha-cliques for every alpha.
  std::optional<std::int64_t> alpha;
};
CliqueInfo IsClique(const UltraTriple& t, std::span<const std::size_t> f);

struct BallPartition {
  std::int64_t alpha_max = 0;
  // Open balls of radius alpha_max, ordered by their least element.
  std::vector<std::vector<std::size_t>> blocks;
  // Least element of each block; together a maximum alpha_max-clique.
  std::vector<std::size_t> representatives;
};
// Throws DomainError when |E| <= 1.
BallPartition PartitionByMaxDistance(const UltraTriple& t);

// Maximum clique size, via the recursive ball decomposition.
std::size_t Mcs(const UltraTriple& t);
// One clique of maximum size (indices ascending).
std::vector<std::size_t> MaxClique(const UltraTriple& t);

// Integer labels `s`, d(a,b) = 0 if a == b mod m and 1 otherwise. Labels
// without an entry in `weights` get weight 0.
UltraTriple ModMTriple(std::span<const std::int64_t> s, std::int64_t m,
                       const std::map<std::int64_t, std::int64_t>& weights = {});

}  // namespace ultragreed

#endif  // ULTRAGREED_ULTRA_H_
