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

#include "ultragreed/newick.h"

#include <cctype>
#include <numeric>
#include <set>

namespace ultragreed {
namespace {

// Decimal digits accepted in one branch length, keeping values exact in
// 64-bit rationals.
constexpr int kMaxDigits = 15;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NewickTree Parse() {
    Skip();
    if (Peek() == ';') throw DomainError("newick: empty tree");
    tree_.nodes.emplace_back();
    Subtree(0);
    Skip();
    if (Peek() != ';') Fail("expected ';'");
    ++pos_;
    Skip();
    if (pos_ != s_.size()) Fail("trailing input after ';'");
    return std::move(tree_);
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw NewickSyntaxError(pos_, what);
  }

  char Peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void Skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '[') {
        const std::size_t start = pos_;
        const auto close = s_.find(']', pos_);
        if (close == std::string_view::npos) {
          pos_ = start;
          Fail("unterminated comment");
        }
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  static bool IsNameChar(char c) {
    return c != '\0' && c != '(' && c != ')' && c != ',' && c != ':' &&
           c != ';' && c != '[' && c != '\'' &&
           !std::isspace(static_cast<unsigned char>(c));
  }

  void Subtree(std::size_t node) {
    Skip();
    if (Peek() == '(') {
      ++pos_;
      while (true) {
        const std::size_t child = tree_.nodes.size();
        tree_.nodes.emplace_back();
        tree_.nodes[child].parent = node;
        tree_.nodes[node].children.push_back(child);
        Subtree(child);
        Skip();
        if (Peek() == ',') {
          ++pos_;
        } else if (Peek() == ')') {
          ++pos_;
          break;
        } else {
          Fail("expected ',' or ')'");
        }
      }
    }
    Skip();
    tree_.nodes[node].name = Name();
    Skip();
    if (Peek() == ':') {
      ++pos_;
      Skip();
      tree_.nodes[node].length = Length();
    }
  }

  std::string Name() {
    std::string out;
    if (Peek() == '\'') {
      const std::size_t start = pos_++;
      while (true) {
        if (pos_ >= s_.size()) {
          pos_ = start;
          Fail("unterminated quoted name");
        }
        if (s_[pos_] == '\'') {
          if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '\'') {
            out.push_back('\'');
            pos_ += 2;
            continue;
          }
          ++pos_;
          return out;
        }
        out.push_back(s_[pos_++]);
      }
    }
    while (IsNameChar(Peek())) out.push_back(s_[pos_++]);
    return out;
  }

  Rational Length() {
    const std::size_t start = pos_;
    std::int64_t mantissa = 0;
    int digits = 0, frac = 0;
    bool dot = false;
    while (std::isdigit(static_cast<unsigned char>(Peek())) ||
           (Peek() == '.' && !dot)) {
      if (Peek() == '.') {
        dot = true;
      } else {
        if (++digits > kMaxDigits) Fail("branch length has too many digits");
        mantissa = mantissa * 10 + (Peek() - '0');
        if (dot) ++frac;
      }
      ++pos_;
    }
    if (digits == 0) {
      pos_ = start;
      Fail(Peek() == '-' ? "negative branch length" : "expected a number");
    }
    int exponent = 0;
    if (Peek() == 'e' || Peek() == 'E') {
      ++pos_;
      bool neg = false;
      if (Peek() == '+' || Peek() == '-') neg = s_[pos_++] == '-';
      if (!std::isdigit(static_cast<unsigned char>(Peek()))) {
        Fail("malformed exponent");
      }
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        exponent = exponent * 10 + (s_[pos_++] - '0');
        if (exponent > kMaxDigits) Fail("exponent out of range");
      }
      if (neg) exponent = -exponent;
    }
    const int scale = exponent - frac;
    if (scale > 0 && digits + scale > 18) Fail("branch length out of range");
    if (scale < -18) Fail("branch length out of range");
    std::int64_t pow10 = 1;
    for (int i = 0; i < (scale < 0 ? -scale : scale); ++i) pow10 *= 10;
    return scale >= 0 ? Rational(mantissa * pow10) : Rational(mantissa, pow10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  NewickTree tree_;
};

}  // namespace

std::vector<std::size_t> NewickTree::Leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) out.push_back(i);
  }
  return out;
}

std::vector<Rational> NewickTree::Depths() const {
  // Children always follow their parent in `nodes`.
  std::vector<Rational> depth(nodes.size(), Rational(0));
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    depth[i] = depth[*nodes[i].parent] + nodes[i].length;
  }
  return depth;
}

NewickTree ParseNewick(std::string_view text) {
  NewickTree tree = Parser(text).Parse();
  std::set<std::string> seen;
  for (auto leaf : tree.Leaves()) {
    const std::string& name = tree.nodes[leaf].name;
    if (name.empty()) throw DomainError("newick: leaf without a name");
    if (!seen.insert(name).second) {
      throw DomainError("newick: duplicate leaf name " + name);
    }
  }
  return tree;
}

ClockReport CheckClock(const NewickTree& tree) {
  ClockReport r;
  const auto leaves = tree.Leaves();
  const auto depth = tree.Depths();
  for (std::size_t k = 1; k < leaves.size(); ++k) {
    if (depth[leaves[k]] != depth[leaves[0]]) {
      r.balanced = false;
      r.witness = {tree.nodes[leaves[0]].name, tree.nodes[leaves[k]].name};
      break;
    }
  }
  return r;
}

UltraTriple TripleFromTree(const NewickTree& tree) {
  const auto leaves = tree.Leaves();
  if (tree.nodes.empty() || leaves.empty()) {
    throw DomainError("newick: tree has no leaves");
  }
  if (auto clock = CheckClock(tree); !clock.balanced) {
    throw DomainError("tree violates the molecular clock: leaves " +
                      clock.witness->first + " and " + clock.witness->second +
                      " have different depths");
  }
  const auto depth = tree.Depths();
  const Rational height = depth[leaves[0]];
  const std::size_t n = leaves.size();

  auto ancestors = [&](std::size_t v) {
    std::vector<std::size_t> path{v};
    while (tree.nodes[path.back()].parent) {
      path.push_back(*tree.nodes[path.back()].parent);
    }
    return path;
  };
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
  std::int64_t lcd = 1;
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = ancestors(leaves[a]);
    const std::set<std::size_t> up(pa.begin(), pa.end());
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t v = leaves[b];
      while (!up.contains(v)) v = *tree.nodes[v].parent;
      d[a][b] = d[b][a] = height - depth[v];
      lcd = std::lcm(lcd, d[a][b].denominator());
    }
  }
  std::vector<std::pair<std::string, std::size_t>> named;
  for (std::size_t a = 0; a < n; ++a) {
    named.emplace_back(tree.nodes[leaves[a]].name, a);
  }
  RawTriple raw;
  for (const auto& [name, a] : named) {
    raw.labels.emplace_back(name);
    raw.weights[Label(name)] = 0;
  }
  raw.distances.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Rational scaled = d[a][b] * lcd;
      raw.distances[a][b] = scaled.numerator();
    }
  }
  return UltraTriple::Validate(raw);
}

}  // namespace ultragreed
