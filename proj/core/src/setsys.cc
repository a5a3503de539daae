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

#include "ultragreed/setsys.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

#include "ultragreed/error.h"

namespace ultragreed {
namespace {

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw DomainError("perimeter overflows 64-bit integers");
  }
  return r;
}

Mask Bit(std::size_t i) { return Mask{1} << i; }

}  // namespace

std::vector<std::size_t> MaskToIndices(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask IndicesToMask(const std::vector<std::size_t>& idx) {
  Mask m = 0;
  for (auto i : idx) {
    if (i >= kMaxGroundSize) throw DomainError("index beyond 64-element ground");
    m |= Bit(i);
  }
  return m;
}

bool CanonicalLess(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Same size: the first differing element (ascending) decides.
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) != 0;
}

SetSystem::SetSystem(std::vector<Label> ground, const std::vector<Mask>& sets) {
  if (ground.size() > kMaxGroundSize) {
    throw DomainError("set systems support at most 64 ground elements");
  }
  std::vector<std::size_t> order(ground.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return ground[x] < ground[y]; });
  // remap[old index] = new index
  std::vector<std::size_t> remap(ground.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    ground_.push_back(ground[order[i]]);
    remap[order[i]] = i;
    if (i > 0 && ground_[i] == ground_[i - 1]) {
      throw DomainError("duplicate ground label " + ground_[i].ToString());
    }
  }
  const Mask full = ground.size() == 64 ? ~Mask{0} : Bit(ground.size()) - 1;
  for (Mask m : sets) {
    if (m & ~full) throw DomainError("set references elements outside ground");
    Mask mapped = 0;
    for (auto i : MaskToIndices(m)) mapped |= Bit(remap[i]);
    if (members_.insert(mapped).second) sets_.push_back(mapped);
  }
  std::sort(sets_.begin(), sets_.end(), CanonicalLess);
}

SetSystem SetSystem::FromLabelSets(
    std::vector<Label> ground, const std::vector<std::vector<Label>>& sets) {
  std::map<Label, std::size_t> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = i;
  std::vector<Mask> masks;
  for (const auto& s : sets) {
    Mask m = 0;
    for (const auto& l : s) {
      auto it = pos.find(l);
      if (it == pos.end()) {
        throw DomainError("set member " + l.ToString() + " not in ground set");
      }
      m |= Bit(it->second);
    }
    masks.push_back(m);
  }
  return SetSystem(std::move(ground), masks);
}

std::vector<Mask> SetSystem::Level(std::size_t k) const {
  std::vector<Mask> out;
  for (Mask m : sets_) {
    if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
  }
  return out;
}

std::vector<Label> SetSystem::LabelsOf(Mask m) const {
  std::vector<Label> out;
  for (auto i : MaskToIndices(m)) out.push_back(ground_[i]);
  return out;
}

std::vector<std::vector<Label>> SetSystem::LabelSets() const {
  std::vector<std::vector<Label>> out;
  out.reserve(sets_.size());
  for (Mask m : sets_) out.push_back(LabelsOf(m));
  return out;
}

std::string SetSystem::ToString() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    os << (s ? ", " : "") << "{";
    auto labels = LabelsOf(sets_[s]);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      os << (i ? "," : "") << labels[i].ToString();
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

namespace {

// Perimeter of every subset, indexed by mask.
std::vector<std::int64_t> AllPerimeters(const UltraTriple& t) {
  const std::size_t n = t.size();
  if (n > kBruteForceLimit) {
    throw DomainError("ground set of size " + std::to_string(n) +
                      " exceeds the brute-force limit " +
                      std::to_string(kBruteForceLimit));
  }
  std::vector<std::int64_t> per(std::size_t{1} << n, 0);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    const Mask rest = m & (m - 1);
    std::int64_t v = CheckedAdd(per[rest], t.weight(low));
    for (Mask r = rest; r; r &= r - 1) {
      v = CheckedAdd(v, t.distance(low, std::countr_zero(r)));
    }
    per[m] = v;
  }
  return per;
}

}  // namespace

std::vector<std::int64_t> MaxPerimeterByCardinality(const UltraTriple& t) {
  const auto per = AllPerimeters(t);
  std::vector<std::int64_t> best(t.size() + 1,
                                 std::numeric_limits<std::int64_t>::min());
  for (Mask m = 0; m < per.size(); ++m) {
    auto& b = best[std::popcount(m)];
    b = std::max(b, per[m]);
  }
  return best;
}

SetSystem BhargavaGreedoid(const UltraTriple& t) {
  const auto per = AllPerimeters(t);
  std::vector<std::int64_t> best(t.size() + 1,
                                 std::numeric_limits<std::int64_t>::min());
  for (Mask m = 0; m < per.size(); ++m) {
    auto& b = best[std::popcount(m)];
    b = std::max(b, per[m]);
  }
  std::vector<Mask> members;
  for (Mask m = 0; m < per.size(); ++m) {
    if (per[m] == best[std::popcount(m)]) members.push_back(m);
  }
  return SetSystem(t.labels(), members);
}

GreedySchedule ComputeGreedySchedule(const UltraTriple& t) {
  const std::size_t n = t.size();
  GreedySchedule s;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pick;
    std::int64_t pick_gain = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      std::int64_t gain = t.weight(x);
      for (auto c : s.order) gain = CheckedAdd(gain, t.distance(c, x));
      if (!pick || gain > pick_gain) {
        pick = x;
        pick_gain = gain;
      }
    }
    used[*pick] = true;
    s.order.push_back(*pick);
    s.rho.push_back(pick_gain);
  }
  return s;
}

GreedoidReport CheckGreedoidAxioms(const SetSystem& s) {
  GreedoidReport r;
  r.accessible_empty.pass = s.contains(0);

  for (Mask b : s.sets()) {
    if (b == 0) continue;
    bool ok = false;
    for (Mask rest = b; rest && !ok; rest &= rest - 1) {
      ok = s.contains(b & ~(rest & -rest));
    }
    if (!ok) {
      r.accessible_removal = {false, std::nullopt, b};
      break;
    }
  }

  for (Mask a : s.sets()) {
    const int ka = std::popcount(a);
    for (Mask b : s.Level(ka + 1)) {
      bool aug = false, strong = false;
      for (Mask rest = b & ~a; rest; rest &= rest - 1) {
        const Mask x = rest & -rest;
        if (s.contains(a | x)) {
          aug = true;
          if (s.contains(b & ~x)) strong = true;
        }
      }
      if (!aug && r.augmentation.pass) r.augmentation = {false, a, b};
      if (!strong && r.strong_exchange.pass) r.strong_exchange = {false, a, b};
      if (!r.augmentation.pass && !r.strong_exchange.pass) return r;
    }
  }
  return r;
}

ExchangeCheck CheckLevelExchange(const SetSystem& s, std::size_t k) {
  const auto level = s.Level(k);
  std::unordered_set<Mask> members(level.begin(), level.end());
  for (Mask a : level) {
    for (Mask b : level) {
      for (Mask ra = a & ~b; ra; ra &= ra - 1) {
        const Mask x = ra & -ra;
        bool ok = false;
        for (Mask rb = b & ~a; rb && !ok; rb &= rb - 1) {
          ok = members.contains((a & ~x) | (rb & -rb));
        }
        if (!ok) {
          return {false, a, b,
                  static_cast<std::size_t>(std::countr_zero(x))};
        }
      }
    }
  }
  return {};
}

SetSystem Transport(const SetSystem& s, const std::map<Label, Label>& f) {
  std::vector<Label> image;
  std::set<Label> seen;
  for (const auto& l : s.ground()) {
    auto it = f.find(l);
    if (it == f.end()) {
      throw DomainError("mapping is not defined on " + l.ToString());
    }
    if (!seen.insert(it->second).second) {
      throw DomainError("mapping is not injective at " +
                        it->second.ToString());
    }
    image.push_back(it->second);
  }
  if (f.size() != s.ground().size()) {
    throw DomainError("mapping has entries outside the ground set");
  }
  // Position i of `image` is the image of ground()[i], so masks carry over.
  return SetSystem(std::move(image), s.sets());
}

}  // namespace ultragreed
