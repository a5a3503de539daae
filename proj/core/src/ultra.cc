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

#include "ultragreed/ultra.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "ultragreed/error.h"

namespace ultragreed {

std::string Label::ToString() const {
  if (is_int()) return std::to_string(as_int());
  return as_string();
}

TripleReport CheckTriple(const RawTriple& raw) {
  TripleReport r;
  const std::size_t n = raw.labels.size();
  std::set<std::string> seen;
  for (const auto& l : raw.labels) {
    if (!seen.insert(l.ToString()).second) {
      r.failure = TripleReport::Failure::kDuplicateLabel;
      r.witness = {l};
      r.message = "duplicate label " + l.ToString();
      return r;
    }
  }
  bool shape_ok = raw.distances.size() == n;
  for (const auto& row : raw.distances) shape_ok = shape_ok && row.size() == n;
  if (!shape_ok) {
    r.failure = TripleReport::Failure::kShape;
    r.message = "distance matrix must be " + std::to_string(n) + "x" +
                std::to_string(n);
    return r;
  }
  for (const auto& l : raw.labels) {
    if (!raw.weights.contains(l)) {
      r.failure = TripleReport::Failure::kMissingWeight;
      r.witness = {l};
      r.message = "missing weight for label " + l.ToString();
      return r;
    }
  }
  const auto& d = raw.distances;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (d[a][b] != d[b][a]) {
        r.failure = TripleReport::Failure::kAsymmetry;
        r.witness = {raw.labels[a], raw.labels[b]};
        r.message = "asymmetric distance: d(" + raw.labels[a].ToString() +
                    "," + raw.labels[b].ToString() + ") != d(" +
                    raw.labels[b].ToString() + "," + raw.labels[a].ToString() +
                    ")";
        return r;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (d[a][b] > std::max(d[a][c], d[b][c])) {
          r.failure = TripleReport::Failure::kUltrametric;
          r.witness = {raw.labels[a], raw.labels[b], raw.labels[c]};
          r.message = "ultrametric violation: d(" + raw.labels[a].ToString() +
                      "," + raw.labels[b].ToString() + ") = " +
                      std::to_string(d[a][b]) + " > max(d(" +
                      raw.labels[a].ToString() + "," +
                      raw.labels[c].ToString() + "), d(" +
                      raw.labels[b].ToString() + "," +
                      raw.labels[c].ToString() + "))";
          return r;
        }
      }
    }
  }
  return r;
}

UltraTriple UltraTriple::Validate(const RawTriple& raw) {
  if (auto report = CheckTriple(raw); !report.ok()) {
    throw DomainError(report.message);
  }
  const std::size_t n = raw.labels.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return raw.labels[x] < raw.labels[y];
  });
  UltraTriple t;
  t.labels_.reserve(n);
  t.weights_.reserve(n);
  t.distances_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    t.labels_.push_back(raw.labels[order[i]]);
    t.weights_.push_back(raw.weights.at(raw.labels[order[i]]));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) t.distances_[i * n + j] = raw.distances[order[i]][order[j]];
    }
  }
  return t;
}

UltraTriple UltraTriple::FromMatrix(
    std::vector<Label> labels, std::vector<std::int64_t> weights,
    std::vector<std::vector<std::int64_t>> distances) {
  if (weights.size() != labels.size()) {
    throw DomainError("weight count does not match label count");
  }
  RawTriple raw;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    raw.weights[labels[i]] = weights[i];
  }
  raw.labels = std::move(labels);
  raw.distances = std::move(distances);
  return Validate(raw);
}

std::size_t UltraTriple::IndexOf(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || !(*it == l)) {
    throw DomainError("unknown label " + l.ToString());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> UltraTriple::IndicesOf(
    std::span<const Label> ls) const {
  std::vector<std::size_t> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(IndexOf(l));
  return out;
}

UltraTriple UltraTriple::Restrict(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  const std::size_t n = size();
  const std::size_t k = idx.size();
  UltraTriple t;
  t.distances_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (idx[i] >= n || (i > 0 && idx[i] == idx[i - 1])) {
      throw DomainError("invalid index set for restriction");
    }
    t.labels_.push_back(labels_[idx[i]]);
    t.weights_.push_back(weights_[idx[i]]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) t.distances_[i * k + j] = distance(idx[i], idx[j]);
    }
  }
  return t;
}

UltraTriple UltraTriple::Relabel(const std::map<Label, Label>& mapping) const {
  RawTriple raw = ToRaw();
  std::set<Label> images;
  for (auto& l : raw.labels) {
    auto it = mapping.find(l);
    if (it == mapping.end()) {
      throw DomainError("relabeling is not defined on " + l.ToString());
    }
    if (!images.insert(it->second).second) {
      throw DomainError("relabeling is not injective at " +
                        it->second.ToString());
    }
    l = it->second;
  }
  raw.weights.clear();
  for (std::size_t i = 0; i < size(); ++i) {
    raw.weights[raw.labels[i]] = weights_[i];
  }
  return Validate(raw);
}

RawTriple UltraTriple::ToRaw() const {
  RawTriple raw;
  raw.labels = labels_;
  const std::size_t n = size();
  raw.distances.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    raw.weights[labels_[i]] = weights_[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) raw.distances[i][j] = distance(i, j);
    }
  }
  return raw;
}

std::int64_t Perimeter(const UltraTriple& t, std::span<const std::size_t> a) {
  std::int64_t total = 0;
  auto add = [&](std::int64_t v) {
    if (__builtin_add_overflow(total, v, &total)) {
      throw DomainError("perimeter overflows 64-bit integers");
    }
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= t.size()) throw DomainError("index out of range");
    add(t.weight(a[i]));
    for (std::size_t j = i + 1; j < a.size(); ++j) add(t.distance(a[i], a[j]));
  }
  return total;
}

std::optional<std::int64_t> MaxDistance(const UltraTriple& t) {
  std::optional<std::int64_t> best;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (!best || t.distance(i, j) > *best) best = t.distance(i, j);
    }
  }
  return best;
}

std::vector<std::int64_t> DistanceValues(const UltraTriple& t) {
  std::set<std::int64_t> values;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      values.insert(t.distance(i, j));
    }
  }
  return {values.begin(), values.end()};
}

std::vector<std::size_t> OpenBall(const UltraTriple& t, std::int64_t alpha,
                                  std::size_t e) {
  if (e >= t.size()) throw DomainError("ball center out of range");
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (f == e || t.distance(f, e) < alpha) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> ClosedBall(const UltraTriple& t, std::int64_t alpha,
                                    std::size_t e) {
  if (e >= t.size()) throw DomainError("ball center out of range");
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (f == e || t.distance(f, e) <= alpha) out.push_back(f);
  }
  return out;
}

CliqueInfo IsClique(const UltraTriple& t, std::span<const std::size_t> f) {
  for (auto i : f) {
    if (i >= t.size()) throw DomainError("index out of range");
  }
  if (f.size() <= 1) return {true, std::nullopt};
  const std::int64_t alpha = t.distance(f[0], f[1]);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] == f[j]) throw DomainError("repeated index in clique test");
      if (t.distance(f[i], f[j]) != alpha) return {false, std::nullopt};
    }
  }
  return {true, alpha};
}

BallPartition PartitionByMaxDistance(const UltraTriple& t) {
  if (t.size() <= 1) {
    throw DomainError("ball partition needs at least two elements");
  }
  BallPartition out;
  out.alpha_max = *MaxDistance(t);
  std::vector<bool> placed(t.size(), false);
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (placed[e]) continue;
    auto ball = OpenBall(t, out.alpha_max, e);
    for (auto f : ball) placed[f] = true;
    out.representatives.push_back(e);
    out.blocks.push_back(std::move(ball));
  }
  return out;
}

std::vector<std::size_t> MaxClique(const UltraTriple& t) {
  if (t.size() <= 1) {
    std::vector<std::size_t> all(t.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  auto part = PartitionByMaxDistance(t);
  std::vector<std::size_t> best = part.representatives;
  for (const auto& block : part.blocks) {
    if (block.size() <= best.size()) continue;
    auto inner = MaxClique(t.Restrict(block));
    if (inner.size() > best.size()) {
      best.clear();
      for (auto i : inner) best.push_back(block[i]);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t Mcs(const UltraTriple& t) {
  if (t.size() <= 1) return t.size();
  auto part = PartitionByMaxDistance(t);
  std::size_t best = part.blocks.size();
  for (const auto& block : part.blocks) {
    if (block.size() > best) best = std::max(best, Mcs(t.Restrict(block)));
  }
  return best;
}

UltraTriple ModMTriple(std::span<const std::int64_t> s, std::int64_t m,
                       const std::map<std::int64_t, std::int64_t>& weights) {
  RawTriple raw;
  const std::size_t n = s.size();
  raw.distances.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    raw.labels.emplace_back(s[i]);
    auto it = weights.find(s[i]);
    raw.weights[Label(s[i])] = it == weights.end() ? 0 : it->second;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t diff = s[i] - s[j];
      const bool congruent = m == 0 ? diff == 0 : diff % m == 0;
      if (i != j) raw.distances[i][j] = congruent ? 0 : 1;
    }
  }
  return UltraTriple::Validate(raw);
}

}  // namespace ultragreed
