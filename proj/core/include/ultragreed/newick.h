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

#ifndef ULTRAGREED_NEWICK_H_
#define ULTRAGREED_NEWICK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ultragreed/error.h"
#include "ultragreed/ultra.h"

namespace ultragreed {

using Rational = boost::rational<std::int64_t>;

// A syntax error at byte offset `position` of the input.
class NewickSyntaxError : public DomainError {
 public:
  NewickSyntaxError(std::size_t position, const std::string& what)
      : DomainError("newick: " + what + " at position " +
                    std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct NewickNode {
  std::string name;
  Rational length{1};  // length of the edge to the parent; 1 when omitted
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  bool is_leaf() const { return children.empty(); }
};

// A rooted tree; node 0 is the root. Leaves appear in input order.
struct NewickTree {
  std::vector<NewickNode> nodes;

  std::vector<std::size_t> Leaves() const;
  // Sum of edge lengths from the root (the root's own length is ignored).
  std::vector<Rational> Depths() const;
};

// Grammar: tree := subtree ";" ; subtree := [ "(" subtree {"," subtree} ")" ]
// [name] [":" length]. Names are bare tokens or single-quoted ('' escapes a
// quote); lengths are nonnegative decimals with an optional exponent and
// are kept exact. Whitespace and [bracketed comments] between tokens are
// skipped. Throws NewickSyntaxError, or DomainError for empty or repeated
// leaf names.
NewickTree ParseNewick(std::string_view text);

struct ClockReport {
  bool balanced = true;
  // Two leaves at different depths, when unbalanced.
  std::optional<std::pair<std::string, std::string>> witness;
};
// Compares every leaf depth with the first leaf's.
ClockReport CheckClock(const NewickTree& tree);

// Leaves become string labels with weight 0 and d(a, b) = depth of the
// leaves minus the depth of their lowest common ancestor, scaled by the
// least common denominator. Throws DomainError on a clock violation (naming
// the witness pair) or a tree without leaves.
UltraTriple TripleFromTree(const NewickTree& tree);

}  // namespace ultragreed

#endif  // ULTRAGREED_NEWICK_H_
