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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/test_support.h"
#include "ultragreed/error.h"
#include "ultragreed/group_algebra.h"
#include "ultragreed/newick.h"
#include "ultragreed/represent.h"

namespace ultragreed {
namespace {

using GA = GroupAlgebraElement;
using testing::Sets;

// Collects the first few failure messages of one criterion.
class Failures {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++count_;
    if (count_ <= 3) detail_ << (count_ > 1 ? "; " : "") << what;
  }
  int count() const { return count_; }
  std::string detail() const { return detail_.str(); }

 private:
  int count_ = 0;
  std::ostringstream detail_;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Failures&)> body;
};

// Random triples shared by the corpus-wide criteria.
std::vector<UltraTriple> Corpus() {
  std::mt19937_64 rng(20240601);
  testing::TripleOptions o;
  o.max_size = 8;
  std::vector<UltraTriple> out{testing::Bhargava1(), testing::Bhargava0()};
  for (int i = 0; i < 200; ++i) out.push_back(testing::RandomTriple(rng, o));
  return out;
}

void FixtureGreedoid(Failures& f) {
  const UltraTriple t = testing::Bhargava1();
  const SetSystem want =
      Sets({0, 1, 2, 3, 4},
           {{}, {4}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1, 4}, {0, 3, 4},
            {1, 3, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 2, 4}, {0, 1, 3, 4},
            {0, 1, 2, 3, 4}});
  f.Expect(BhargavaGreedoid(t) == want, "greedoid differs from the 14 sets");
  f.Expect(Mcs(t) == 3, "mcs != 3");
  const std::vector<std::size_t> a{0, 4};
  f.Expect(Perimeter(t, a) == 8, "PER{0,4} != 8");
  f.Expect(MaxPerimeterByCardinality(t)[3] == 15, "max 3-subset != 15");
}

void FixtureMatrix(Failures& f) {
  const VectorFamily fam = testing::Matrix2(Field::Make(7));
  const SetSystem want =
      Sets({1, 2, 3, 4, 5}, {{}, {2}, {3}, {5}, {1, 2}, {1, 3}, {1, 5}, {2, 3},
                             {2, 5}, {1, 2, 3}, {1, 2, 5}, {1, 2, 3, 5}});
  const SetSystem got = GegEnumerate(fam);
  f.Expect(got == want, "enumerated greedoid differs: " + got.ToString());
  f.Expect(got == SetSystem(fam.labels(), testing::BruteForceGegMasks(fam)),
           "rank and brute-force oracles disagree");
}

void RepresentationsMatchBruteForce(Failures& f) {
  std::mt19937_64 rng(1);
  testing::TripleOptions o;
  o.max_size = 8;
  for (int i = 0; i < 200; ++i) {
    const UltraTriple t = testing::RandomTriple(rng, o);
    const SetSystem want = BhargavaGreedoid(t);
    for (auto q : testing::FieldOrdersFor(Mcs(t))) {
      const Representation r = BuildRepresentation(t, Field::FromOrder(q));
      f.Expect(GegEnumerate(r.family) == want,
               "triple " + std::to_string(i) + " over GF(" +
                   std::to_string(q) + ")");
    }
  }
}

void GreedyOptimality(Failures& f) {
  for (const auto& t : Corpus()) {
    const GreedySchedule s = ComputeGreedySchedule(t);
    const auto best = MaxPerimeterByCardinality(t);
    std::int64_t prefix = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      prefix += s.rho[k];
      f.Expect(prefix == best[k + 1], "prefix sum below the optimum");
    }
  }
}

void Converse(Failures& f) {
  const Field f2 = Field::Make(2);
  const SetSystem all = Sets({1, 2, 3}, {{}, {1}, {2}, {3}, {1, 2}, {1, 3},
                                         {2, 3}, {1, 2, 3}});
  f.Expect(!ConverseSearch(all, f2).has_value(),
           "power set of {1,2,3} represented over GF(2)");
  const SetSystem target = BhargavaGreedoid(testing::Bhargava0());
  const auto found = ConverseSearch(target, f2);
  f.Expect(found.has_value() && GegEnumerate(*found) == target,
           "no GF(2) family for {{},{3},{2,3},{1,2,3}}");
  const VectorFamily explicit_family(f2, 3, {1, 2, 3},
                                     {0, 0, 1,  //
                                      0, 1, 1,  //
                                      1, 1, 1});
  f.Expect(GegEnumerate(explicit_family) == target,
           "explicit GF(2) family enumerates differently");
}

std::vector<SetSystem> GreedoidCorpus() {
  std::vector<SetSystem> out;
  std::mt19937_64 rng(2);
  for (std::uint64_t q : {2, 3, 5}) {
    const Field k = Field::Make(q);
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 1 + rng() % 7;
      out.push_back(GegEnumerate(testing::RandomFamily(rng, k, n, n + rng() % 3)));
    }
  }
  for (const auto& t : Corpus()) out.push_back(BhargavaGreedoid(t));
  return out;
}

void StrongGreedoid(Failures& f) {
  for (const auto& s : GreedoidCorpus()) {
    f.Expect(CheckGreedoidAxioms(s).is_strong_greedoid(),
             "axiom failure in " + s.ToString());
  }
}

void LevelMatroids(Failures& f) {
  for (const auto& s : GreedoidCorpus()) {
    for (std::size_t k = 0; k <= s.ground().size(); ++k) {
      f.Expect(CheckLevelExchange(s, k).pass,
               "exchange fails at level " + std::to_string(k));
    }
  }
}

void Identities(Failures& f) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Field k = Field::Make(i % 2 ? 11 : 5);
    const std::size_t n = 1 + rng() % 5;
    const auto x = testing::RandomMatrix(rng, k, n, n - 1);
    const auto y = testing::RandomMatrix(rng, k, n, n);
    f.Expect(PluckerCheck(x, y, rng() % n, k.one()), "Pluecker identity");
  }
  const Field k = Field::Make(5);
  const GA one = GA::One(k);
  for (int i = 0; i < 500; ++i) {
    const std::size_t m = 1 + rng() % 4;
    if (i % 2 == 0) {
      std::vector<std::vector<FieldElement>> fs;
      std::vector<FieldElement> us;
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<FieldElement> c;
        for (std::size_t d = 0; d < j; ++d) c.push_back(k.FromCode(rng() % 5));
        c.push_back(k.one());
        fs.push_back(c);
        us.push_back(k.FromCode(rng() % 5));
      }
      f.Expect(VandermondeMonicCheck(fs, us, k.one()), "Vandermonde over K");
    } else {
      auto random = [&] {
        return GA::Monomial(static_cast<std::int64_t>(rng() % 7) - 3,
                            k.FromCode(rng() % 5)) +
               GA::Monomial(rng() % 3, k.FromCode(rng() % 5));
      };
      std::vector<std::vector<GA>> fs;
      std::vector<GA> us;
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<GA> c;
        for (std::size_t d = 0; d < j; ++d) c.push_back(random());
        c.push_back(one);
        fs.push_back(c);
        us.push_back(random());
      }
      f.Expect(VandermondeMonicCheck(fs, us, one), "Vandermonde over L");
    }
  }
}

void Valuations(Failures& f) {
  std::mt19937_64 rng(4);
  int assertions = 0;
  auto check = [&](bool ok, const char* what) {
    ++assertions;
    f.Expect(ok, what);
  };
  for (std::uint64_t q : {2, 3, 4, 7}) {
    const Field k = Field::FromOrder(q);
    auto random = [&](std::int64_t lo, std::int64_t hi) {
      std::vector<GA::Term> terms;
      const int count = 1 + rng() % 4;
      for (int i = 0; i < count; ++i) {
        terms.push_back({lo + static_cast<std::int64_t>(rng() % (hi - lo + 1)),
                         1 + rng() % (q - 1)});
      }
      return GA::FromTerms(k, terms);
    };
    for (int i = 0; i < 150; ++i) {
      const GA a = random(-5, 5), b = random(-5, 5);
      if (a.is_zero() || b.is_zero()) continue;
      check(!(a * b).is_zero(), "integral domain");
      check((a * b).ord() == a.ord() + b.ord(), "ord(ab) = ord a + ord b");
      check((-a).ord() == a.ord(), "ord(-a) = ord a");
      if (!(a + b).is_zero()) {
        check((a + b).ord() >= std::min(a.ord(), b.ord()), "ord(a+b) >= min");
      }
      const GA x = random(0, 4), y = random(0, 4);
      check((x * y).pi() == x.pi() * y.pi(), "pi multiplicative");
      check((x + y).pi() == x.pi() + y.pi(), "pi additive");
      if (!x.is_zero()) {
        check(!x.pi().is_zero() == (x.ord() == 0), "pi(x) != 0 iff ord x = 0");
      }
    }
  }
  f.Expect(assertions >= 2000,
           "only " + std::to_string(assertions) + " valuation assertions");

  // ord det(a(u_i, j)) = rho_1 + ... + rho_k - PER(U).
  int subsets = 0;
  while (subsets < 100) {
    const UltraTriple t = testing::RandomTriple(rng);
    if (t.size() == 0) continue;
    const Field k = Field::FromOrder(
        NextAvailableOrder(std::max<std::size_t>(Mcs(t), 2)));
    const Representation r = BuildRepresentation(t, k);
    const std::size_t size = 1 + rng() % std::min<std::size_t>(t.size(), 5);
    std::vector<std::size_t> u(t.size()), rows(size);
    std::iota(u.begin(), u.end(), 0);
    std::shuffle(u.begin(), u.end(), rng);
    u.resize(size);
    std::iota(rows.begin(), rows.end(), 0);
    const GA det =
        DivisionFreeDeterminant(Submatrix(r.lifted, rows, u), GA::One(k));
    std::int64_t rho = 0;
    for (std::size_t j = 0; j < size; ++j) rho += r.schedule.rho[j];
    f.Expect(!det.is_zero() && det.ord() == rho - Perimeter(t, u),
             "order identity for a " + std::to_string(size) + "-subset");
    ++subsets;
  }
}

// A random beta-clique of t with at least two elements, or empty.
std::vector<std::size_t> RandomClique(const UltraTriple& t,
                                      std::mt19937_64& rng) {
  if (t.size() < 2) return {};
  const std::size_t a = rng() % t.size();
  std::size_t b = rng() % t.size();
  if (a == b) b = (b + 1) % t.size();
  const std::int64_t beta = t.distance(a, b);
  const auto ball = ClosedBall(t, beta, a);
  const BallPartition p = PartitionByMaxDistance(t.Restrict(ball));
  std::vector<std::size_t> clique;
  for (const auto& block : p.blocks) {
    if (clique.size() < 2 || rng() % 2) {
      clique.push_back(ball[block[rng() % block.size()]]);
    }
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

void CliqueExchange(Failures& f) {
  std::mt19937_64 rng(5);
  int identity = 0, closure = 0;
  while (identity < 100 || closure < 100) {
    testing::TripleOptions o;
    o.constant_weight = closure < 100 && rng() % 2;
    const UltraTriple t = testing::RandomTriple(rng, o);
    const auto clique = RandomClique(t, rng);
    if (clique.size() < 2) continue;
    const std::int64_t beta = t.distance(clique[0], clique[1]);
    const auto ball = ClosedBall(t, beta, clique[0]);
    const Mask b = IndicesToMask(ball);
    const Mask all = (Mask{1} << t.size()) - 1;

    // Perimeter identity for random N outside B and equal-size P, Q in B.
    const Mask n = rng() & all & ~b;
    std::vector<std::size_t> shuffled = ball;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const std::size_t size = rng() % (ball.size() + 1);
    std::vector<std::size_t> p(shuffled.begin(), shuffled.begin() + size);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<std::size_t> q(shuffled.begin(), shuffled.begin() + size);
    auto per = [&](Mask m) {
      const auto idx = MaskToIndices(m);
      return Perimeter(t, idx);
    };
    const Mask pm = IndicesToMask(p), qm = IndicesToMask(q);
    f.Expect(per(n | qm) - per(n | pm) == per(qm) - per(pm),
             "perimeter difference identity");
    ++identity;

    // Closure: N + P in F with P in B, Q in C, |P| = |Q| gives N + Q in F.
    if (!o.constant_weight) continue;
    const SetSystem fam = BhargavaGreedoid(t);
    const Mask s = fam.sets()[rng() % fam.size()];
    const Mask ps = s & b;
    const auto pcount = static_cast<std::size_t>(std::popcount(ps));
    if (pcount > clique.size()) continue;
    std::vector<std::size_t> c = clique;
    std::shuffle(c.begin(), c.end(), rng);
    c.resize(pcount);
    f.Expect(fam.contains((s & ~b) | IndicesToMask(c)),
             "clique swap leaves the greedoid");
    ++closure;
  }
}

void Ingestion(Failures& f) {
  const UltraTriple t = TripleFromTree(ParseNewick("((A:1,B:1):1,C:2);"));
  f.Expect(t.labels() == std::vector<Label>{"A", "B", "C"} &&
               t.distance(0, 1) == 1 && t.distance(0, 2) == 2 &&
               t.distance(1, 2) == 2 && t.weight(0) == 0,
           "clock tree distances");
  const NewickTree unit = ParseNewick("(A,B);");
  bool unit_lengths = unit.Leaves().size() == 2;
  for (auto leaf : unit.Leaves()) {
    unit_lengths = unit_lengths && unit.nodes[leaf].length == Rational(1);
  }
  f.Expect(unit_lengths, "default branch lengths");
  f.Expect(CheckClock(ParseNewick("((A:1,B:1):1,C:2);")).balanced,
           "clock tree reported unbalanced");
  const ClockReport skew = CheckClock(ParseNewick("((A:1,B:2):1,C:2);"));
  f.Expect(!skew.balanced && skew.witness &&
               *skew.witness == std::pair<std::string, std::string>{"A", "B"},
           "clock violation witness");
  bool rejected = false;
  try {
    TripleFromTree(ParseNewick("((A:1,B:2):1,C:2);"));
  } catch (const DomainError&) {
    rejected = true;
  }
  f.Expect(rejected, "unbalanced tree converted");
  const UltraTriple single = TripleFromTree(ParseNewick("A;"));
  f.Expect(single.size() == 1, "single leaf");
  const UltraTriple star = TripleFromTree(ParseNewick("(A:1,B:1,C:1);"));
  f.Expect(star.distance(0, 1) == 1 && star.distance(0, 2) == 1 &&
               star.distance(1, 2) == 1 && Mcs(star) == 3,
           "star tree");
}

}  // namespace
}  // namespace ultragreed

int main() {
  using ultragreed::Criterion;
  const std::vector<Criterion> criteria{
      {1, "fixture: five-element Bhargava greedoid", 1.0,
       ultragreed::FixtureGreedoid},
      {2, "fixture: six-by-five matrix over GF(7)", 1.0,
       ultragreed::FixtureMatrix},
      {3, "representations match brute force on 200 triples", 60.0,
       ultragreed::RepresentationsMatchBruteForce},
      {4, "greedy prefix sums are optimal", 60.0,
       ultragreed::GreedyOptimality},
      {5, "exhaustive converse search over GF(2)", 5.0, ultragreed::Converse},
      {6, "strong greedoid axioms on the corpus", 60.0,
       ultragreed::StrongGreedoid},
      {7, "basis exchange on every level", 60.0, ultragreed::LevelMatroids},
      {8, "Pluecker and monic Vandermonde identities", 60.0,
       ultragreed::Identities},
      {9, "valuation laws and the determinant order identity", 60.0,
       ultragreed::Valuations},
      {10, "perimeter identity and clique-swap closure", 60.0,
       ultragreed::CliqueExchange},
      {11, "Newick ingestion", 1.0, ultragreed::Ingestion},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    ultragreed::Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    f.Expect(secs <= c.budget_seconds, "over the time budget");
    const bool pass = f.count() == 0;
    failed += !pass;
    std::printf("%s %2d %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, secs, pass ? "" : ": ", f.detail().c_str());
  }
  return failed;
}
