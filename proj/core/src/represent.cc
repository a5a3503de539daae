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

#include "ultragreed/represent.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "ultragreed/error.h"

namespace ultragreed {
namespace {

void RequireFieldSize(const UltraTriple& t, const Field& field) {
  const std::size_t mcs = Mcs(t);
  if (field.order() < mcs) {
    throw DomainError("field size " + std::to_string(field.order()) +
                      " < mcs " + std::to_string(mcs));
  }
}

// Embeds the elements `idx` of t into images[], positioned at (gamma, u).
void EmbedInto(const UltraTriple& t, const Field& field,
               const std::vector<std::size_t>& idx, std::int64_t gamma,
               const GroupAlgebraElement& u,
               std::vector<GroupAlgebraElement>& images) {
  if (idx.size() <= 1) {
    for (auto i : idx) images[i] = u;
    return;
  }
  const UltraTriple sub = t.Restrict(idx);
  const BallPartition part = PartitionByMaxDistance(sub);
  const std::int64_t alpha = part.alpha_max;
  if (alpha > gamma) {
    throw DomainError("gamma " + std::to_string(gamma) +
                      " is below the distance " + std::to_string(alpha));
  }
  if (part.blocks.size() > field.order()) {
    throw DomainError("field size " + std::to_string(field.order()) +
                      " < mcs " + std::to_string(Mcs(t)));
  }
  // Inside every block all distances are at most the largest value below
  // alpha; with no such value every block is a singleton.
  const auto values = DistanceValues(sub);
  const std::int64_t beta =
      values.size() >= 2 ? values[values.size() - 2] : alpha;
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const GroupAlgebraElement ub =
        u + GroupAlgebraElement::Monomial(-alpha, field.FromCode(b));
    std::vector<std::size_t> block;
    for (auto k : part.blocks[b]) block.push_back(idx[k]);
    EmbedInto(t, field, block, beta, ub, images);
  }
}

}  // namespace

const GroupAlgebraElement& ValadicEmbedding::image(const Label& l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || !(*it == l)) {
    throw DomainError("label " + l.ToString() + " is not embedded");
  }
  return images[static_cast<std::size_t>(it - labels.begin())];
}

ValadicEmbedding ValadicEmbed(const UltraTriple& t, const Field& field,
                              std::int64_t gamma,
                              const GroupAlgebraElement& u) {
  if (!(u.field() == field)) {
    throw DomainError("position u lies in a different field");
  }
  RequireFieldSize(t, field);
  if (auto max = MaxDistance(t); max && *max > gamma) {
    throw DomainError("gamma " + std::to_string(gamma) +
                      " is below the distance " + std::to_string(*max));
  }
  std::vector<std::size_t> all(t.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<GroupAlgebraElement> images(t.size(), GroupAlgebraElement(field));
  EmbedInto(t, field, all, gamma, u, images);
  return ValadicEmbedding{field, t.labels(), std::move(images), gamma, u};
}

EmbeddingReport CheckEmbedding(const UltraTriple& t,
                               const ValadicEmbedding& e) {
  if (e.labels != t.labels() || e.images.size() != t.size()) {
    throw DomainError("embedding labels differ from the triple's");
  }
  EmbeddingReport r;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const GroupAlgebraElement off = e.images[a] - e.u;
    if (r.positioned && !off.is_zero() && off.ord() < -e.gamma) {
      r.positioned = false;
      if (!r.witness) r.witness = {a, a};
    }
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      const GroupAlgebraElement diff = e.images[a] - e.images[b];
      if (diff.is_zero()) {
        if (r.injective && !r.witness) r.witness = {a, b};
        r.injective = false;
        r.distances = false;
        continue;
      }
      if (r.distances && -diff.ord() != t.distance(a, b)) {
        r.distances = false;
        if (!r.witness) r.witness = {a, b};
      }
    }
  }
  return r;
}

UltraTriple InducedTriple(const UltraTriple& t, const ValadicEmbedding& e) {
  if (e.labels != t.labels()) {
    throw DomainError("embedding labels differ from the triple's");
  }
  const std::size_t n = t.size();
  std::vector<std::int64_t> w(n);
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    w[a] = t.weight(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const GroupAlgebraElement diff = e.images[a] - e.images[b];
      if (diff.is_zero()) {
        throw DomainError("embedding is not injective at " +
                          t.label(a).ToString() + ", " + t.label(b).ToString());
      }
      d[a][b] = d[b][a] = -diff.ord();
    }
  }
  return UltraTriple::FromMatrix(t.labels(), std::move(w), std::move(d));
}

Representation BuildRepresentation(const UltraTriple& t, const Field& field) {
  RequireFieldSize(t, field);
  const std::int64_t gamma = MaxDistance(t).value_or(0);
  ValadicEmbedding emb =
      ValadicEmbed(t, field, gamma, GroupAlgebraElement(field));
  const UltraTriple induced = InducedTriple(t, emb);
  GreedySchedule schedule = ComputeGreedySchedule(induced);

  const std::size_t m = t.size();
  const GroupAlgebraElement one = GroupAlgebraElement::One(field);
  Matrix<GroupAlgebraElement> lifted(m, m, GroupAlgebraElement(field));
  std::vector<std::uint64_t> codes(m * m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    GroupAlgebraElement f = one;  // f_j evaluated at f(e)
    for (std::size_t j = 0; j < m; ++j) {
      if (j > 0) f *= emb.images[e] - emb.images[schedule.order[j - 1]];
      GroupAlgebraElement a = f.Shifted(schedule.rho[j] - t.weight(e));
      if (!a.in_Lplus()) {
        throw std::logic_error("lifted entry outside L+ at column " +
                               t.label(e).ToString());
      }
      codes[j * m + e] = a.pi().code();
      lifted(j, e) = std::move(a);
    }
  }
  VectorFamily family(field, m, t.labels(), std::move(codes));
  return Representation{t, std::move(emb), std::move(schedule),
                        std::move(lifted), std::move(family)};
}

std::vector<FieldElement> KboundScalars(const VectorFamily& fam,
                                        const std::vector<Label>& n,
                                        const std::vector<Label>& c) {
  std::set<Label> nset(n.begin(), n.end()), cset(c.begin(), c.end());
  if (nset.size() != n.size() || cset.size() != c.size()) {
    throw DomainError("N and C must not repeat labels");
  }
  for (const auto& l : c) {
    if (nset.contains(l)) {
      throw DomainError("N and C share the label " + l.ToString());
    }
  }
  const std::vector<Label> ns(nset.begin(), nset.end());
  const std::vector<Label> cs(cset.begin(), cset.end());
  auto with = [&](std::initializer_list<Label> extra,
                  std::optional<Label> drop) {
    std::vector<Label> out;
    for (const auto& l : ns) {
      if (!drop || !(l == *drop)) out.push_back(l);
    }
    out.insert(out.end(), extra);
    return out;
  };
  for (const auto& i : cs) {
    if (!GegMember(fam, with({i}, std::nullopt))) {
      throw DomainError("condition (i) fails: N + " + i.ToString() +
                        " is not a member");
    }
  }
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      if (!GegMember(fam, with({cs[a], cs[b]}, std::nullopt))) {
        throw DomainError("condition (ii) fails: N + {" + cs[a].ToString() +
                          ", " + cs[b].ToString() + "} is not a member");
      }
      for (const auto& p : ns) {
        if (GegMember(fam, with({cs[a], cs[b]}, p))) {
          throw DomainError("condition (iii) fails: (N + {" +
                            cs[a].ToString() + ", " + cs[b].ToString() +
                            "}) - " + p.ToString() + " is a member");
        }
      }
    }
  }

  const Field& k = fam.field();
  const Matrix<FieldElement> a = fam.AsMatrix();
  const std::size_t r = ns.size();
  std::vector<std::size_t> rows(r + 1), cols;
  for (std::size_t i = 0; i <= r; ++i) rows[i] = i;
  for (const auto& l : ns) cols.push_back(fam.ColumnOf(l));
  cols.push_back(0);
  std::vector<FieldElement> out;
  for (const auto& i : cs) {
    const std::size_t col = fam.ColumnOf(i);
    cols.back() = col;
    const FieldElement den = Determinant(k, Submatrix(a, rows, cols));
    const FieldElement num = r + 1 < fam.rows() ? a(r + 1, col) : k.zero();
    out.push_back(num / den);
  }
  for (std::size_t x = 0; x < out.size(); ++x) {
    for (std::size_t y = x + 1; y < out.size(); ++y) {
      if (out[x] == out[y]) {
        throw DomainError("scalars for " + cs[x].ToString() + " and " +
                          cs[y].ToString() + " coincide");
      }
    }
  }
  return out;
}

ConverseWitness FindConverseWitness(const UltraTriple& t) {
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t.weight(i) != t.weight(0)) {
      throw DomainError("weights are not constant");
    }
  }
  const auto clique = MaxClique(t);
  if (clique.size() < 2) throw DomainError("mcs is below 2");
  ConverseWitness w;
  w.beta = t.distance(clique[0], clique[1]);
  const auto ball = ClosedBall(t, w.beta, clique[0]);
  const Mask ball_mask = IndicesToMask(ball);

  const SetSystem f = BhargavaGreedoid(t);
  // Members come in canonical order, so the first secant set is smallest.
  Mask secant = 0;
  for (Mask s : f.sets()) {
    if (std::popcount(s & ball_mask) >= 2) {
      secant = s;
      break;
    }
  }
  for (auto i : clique) w.clique.push_back(t.label(i));
  for (auto i : ball) w.ball.push_back(t.label(i));
  for (auto i : MaskToIndices(secant)) w.secant.push_back(t.label(i));
  for (auto i : MaskToIndices(secant & ~ball_mask)) {
    w.rest.push_back(t.label(i));
  }
  return w;
}

namespace {

// Whether the family with entries `codes` (row-major n x n) enumerates to
// exactly the members flagged in `want`.
bool MatchesTarget(const Field& field, std::size_t n,
                   const std::vector<std::uint64_t>& codes,
                   const std::vector<bool>& want) {
  std::vector<std::uint64_t> sub;
  for (Mask s = 0; s < want.size(); ++s) {
    const auto cols = MaskToIndices(s);
    const std::size_t k = cols.size();
    sub.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = codes[i * n + cols[j]];
    }
    if ((RankOfCodes(field, k, k, sub) == k) != want[s]) return false;
  }
  return true;
}

}  // namespace

std::optional<VectorFamily> ConverseSearch(const SetSystem& target,
                                           const Field& field,
                                           unsigned threads) {
  const std::size_t n = target.ground().size();
  if (n > 4) throw DomainError("converse search supports at most 4 elements");
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (total > kConverseSearchLimit / q) {
      throw DomainError("search space " + std::to_string(q) + "^" +
                        std::to_string(n * n) + " exceeds 2^24 families");
    }
    total *= q;
  }
  std::vector<bool> want(std::size_t{1} << n);
  for (Mask s : target.sets()) want[s] = true;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};

  auto decode = [&](std::uint64_t index) {
    std::vector<std::uint64_t> codes(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      codes[(k % n) * n + k / n] = index % q;  // entry (k mod m, k div m)
      index /= q;
    }
    return codes;
  };
  auto worker = [&](unsigned id) {
    for (std::uint64_t idx = id; idx < total; idx += threads) {
      if (idx > best.load(std::memory_order_relaxed)) return;
      if (MatchesTarget(field, n, decode(idx), want)) {
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  if (best.load() == kNone) return std::nullopt;
  return VectorFamily(field, n, target.ground(), decode(best.load()));
}

}  // namespace ultragreed
