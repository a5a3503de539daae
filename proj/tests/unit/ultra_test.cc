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
#include <set>

#include "doctest.h"
#include "support/test_support.h"
#include "ultragreed/error.h"
#include "ultragreed/ultra.h"

namespace ultragreed {
namespace {

using testing::Bhargava1;

std::vector<std::size_t> Idx(std::initializer_list<std::size_t> l) {
  return l;
}

TEST_CASE("validation accepts the worked example and reports violations") {
  CHECK(Bhargava1().size() == 5);
  CHECK(UltraTriple::FromMatrix({"x"}, {3}, {{0}}).size() == 1);

  RawTriple raw;
  raw.labels = {0, 1, 2};
  raw.weights = {{0, 0}, {1, 0}, {2, 0}};
  raw.distances = {{0, 1, 1}, {1, 0, 3}, {1, 3, 0}};
  const TripleReport r = CheckTriple(raw);
  CHECK(r.failure == TripleReport::Failure::kUltrametric);
  CHECK(r.witness == std::vector<Label>{1, 2, 0});
  CHECK_THROWS_AS(UltraTriple::Validate(raw), DomainError);

  raw.distances = {{0, 1, 1}, {2, 0, 1}, {1, 1, 0}};
  CHECK(CheckTriple(raw).failure == TripleReport::Failure::kAsymmetry);
  CHECK(CheckTriple(raw).witness == std::vector<Label>{0, 1});

  raw.labels = {0, 1, 1};
  CHECK(CheckTriple(raw).failure == TripleReport::Failure::kDuplicateLabel);
  raw.labels = {0, 1};
  CHECK(CheckTriple(raw).failure == TripleReport::Failure::kShape);
  raw.labels = {0, 1, 5};
  raw.distances = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(CheckTriple(raw).failure == TripleReport::Failure::kMissingWeight);
}

TEST_CASE("labels sort integers before strings") {
  CHECK(Label(5) < Label("a"));
  CHECK(Label(-2) < Label(10));
  CHECK(Label("a") < Label("b"));
  const UltraTriple t =
      UltraTriple::FromMatrix({"b", 3, "a"}, {1, 2, 3},
                              {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(t.labels() == std::vector<Label>{3, "a", "b"});
  CHECK(t.weight(0) == 2);
  CHECK(t.IndexOf("b") == 2);
  CHECK_THROWS_AS(t.IndexOf("zz"), DomainError);
}

TEST_CASE("perimeter") {
  const UltraTriple t = Bhargava1();
  CHECK(Perimeter(t, Idx({0, 4})) == 8);
  CHECK(Perimeter(t, Idx({0, 1, 4})) == 15);
  CHECK(Perimeter(t, {}) == 0);
}

TEST_CASE("balls") {
  const UltraTriple t = Bhargava1();
  CHECK(OpenBall(t, 3, 3) == Idx({2, 3, 4}));
  CHECK(ClosedBall(t, 2, 3) == Idx({2, 3, 4}));
  CHECK(OpenBall(t, 1, 2) == Idx({2}));
  CHECK(ClosedBall(t, 0, 1) == Idx({1}));
  CHECK(ClosedBall(t, 3, 1) == Idx({0, 1, 2, 3, 4}));
}

TEST_CASE("cliques") {
  const UltraTriple t = Bhargava1();
  const CliqueInfo c = IsClique(t, Idx({0, 1, 2}));
  CHECK(c.is_clique);
  CHECK(c.alpha == 3);
  const CliqueInfo s = IsClique(t, Idx({3}));
  CHECK(s.is_clique);
  CHECK_FALSE(s.alpha.has_value());
  CHECK_FALSE(IsClique(t, Idx({2, 3, 4})).is_clique);
}

TEST_CASE("ball partition") {
  const UltraTriple t = Bhargava1();
  const BallPartition p = PartitionByMaxDistance(t);
  CHECK(p.alpha_max == 3);
  CHECK(p.blocks ==
        std::vector<std::vector<std::size_t>>{{0}, {1}, {2, 3, 4}});
  CHECK(p.representatives == Idx({0, 1, 2}));

  const UltraTriple two = UltraTriple::FromMatrix({"a", "b"}, {0, 0},
                                                  {{0, 5}, {5, 0}});
  CHECK(PartitionByMaxDistance(two).blocks.size() == 2);

  const std::vector<std::int64_t> s{1, 2, 3, 4, 5, 6};
  const BallPartition m2 = PartitionByMaxDistance(ModMTriple(s, 2));
  CHECK(m2.blocks ==
        std::vector<std::vector<std::size_t>>{{0, 2, 4}, {1, 3, 5}});
  CHECK_THROWS_AS(PartitionByMaxDistance(two.Restrict(Idx({0}))),
                  DomainError);
}

TEST_CASE("mcs") {
  CHECK(Mcs(Bhargava1()) == 3);
  const std::vector<std::int64_t> s{1, 2, 3, 4, 5, 6};
  CHECK(Mcs(ModMTriple(s, 2)) == 3);
  CHECK(Mcs(ModMTriple(s, 3)) == 3);
  CHECK(Mcs(Bhargava1().Restrict(Idx({2}))) == 1);
  const std::vector<std::int64_t> s3{1, 2, 3};
  const UltraTriple m = ModMTriple(s3, 2);
  CHECK(m.distance(0, 2) == 0);
  CHECK(m.distance(0, 1) == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(ModMTriple(s3, 1).distance(i, j) == 0);
    }
  }
}

TEST_CASE("random triples: balls, partitions and mcs against brute force") {
  std::mt19937_64 rng(3);
  testing::TripleOptions o;
  o.max_size = 10;
  for (int round = 0; round < 300; ++round) {
    const UltraTriple t = testing::RandomTriple(rng, o);
    REQUIRE(CheckTriple(t.ToRaw()).ok());
    REQUIRE(Mcs(t) == testing::BruteForceMcs(t));
    const auto clique = MaxClique(t);
    REQUIRE(clique.size() == Mcs(t));
    REQUIRE(IsClique(t, clique).is_clique);
    if (t.size() < 2) continue;

    const auto values = DistanceValues(t);
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    const std::int64_t alpha =
        values[std::uniform_int_distribution<std::size_t>(
            0, values.size() - 1)(rng)];
    const std::size_t e = pick(rng);
    const auto open = OpenBall(t, alpha, e);
    const auto closed = ClosedBall(t, alpha, e);
    for (auto f : open) REQUIRE(OpenBall(t, alpha, f) == open);
    for (auto f : closed) REQUIRE(ClosedBall(t, alpha, f) == closed);
    const std::size_t f = pick(rng);
    if (f != e && t.distance(e, f) >= alpha) {
      const auto other = OpenBall(t, alpha, f);
      for (auto x : other) {
        REQUIRE(std::find(open.begin(), open.end(), x) == open.end());
      }
    }

    const BallPartition p = PartitionByMaxDistance(t);
    REQUIRE(p.blocks.size() > 1);
    for (std::size_t a = 0; a < p.blocks.size(); ++a) {
      REQUIRE(p.blocks[a].size() < t.size());
      for (auto x : p.blocks[a]) {
        for (auto y : p.blocks[a]) {
          if (x != y) REQUIRE(t.distance(x, y) < p.alpha_max);
        }
        for (std::size_t b = a + 1; b < p.blocks.size(); ++b) {
          for (auto y : p.blocks[b]) REQUIRE(t.distance(x, y) == p.alpha_max);
        }
      }
    }
  }
}

TEST_CASE("relabel and restrict") {
  const UltraTriple t = Bhargava1();
  std::map<Label, Label> f;
  for (int i = 0; i < 5; ++i) f.emplace(i, std::string(1, char('e' - i)));
  const UltraTriple r = t.Relabel(f);
  CHECK(r.labels() == std::vector<Label>{"a", "b", "c", "d", "e"});
  CHECK(r.weight(r.IndexOf("a")) == 4);
  CHECK(r.distance(r.IndexOf("e"), r.IndexOf("a")) == 3);
  std::map<Label, Label> bad{{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
  CHECK_THROWS_AS(t.Relabel(bad), DomainError);
}

TEST_CASE("perimeter overflow is detected") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  const UltraTriple t =
      UltraTriple::FromMatrix({0, 1, 2}, {big, big, big},
                              {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_THROWS_AS(Perimeter(t, Idx({0, 1, 2})), DomainError);
}

}  // namespace
}  // namespace ultragreed
