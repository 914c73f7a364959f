#pragma once

#include <cstddef>
#include <string>

#include "lsc/bitstring.hpp"

namespace lsc {

// Perfect binary tree over a power-of-two window. Nodes are implicit:
// (level, offset) with level 0 = root, level depth() = leaves. The node
// at (l, o) spans the bit slice [o * 2^(d-l), (o+1) * 2^(d-l)).
class BitTree {
 public:
  // Throws InvalidWindowError unless |window| is a power of two >= 2.
  explicit BitTree(BitString window);

  int depth() const { return depth_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t node_count() const { return 2 * leaves_.size() - 1; }
  const BitString& leaves() const { return leaves_; }

  std::size_t span_length(int level) const {
    return leaves_.size() >> static_cast<unsigned>(level);
  }
  // Bits covered by node (level, offset).
  BitString span(int level, std::size_t offset) const {
    std::size_t w = span_length(level);
    return leaves_.slice(offset * w, (offset + 1) * w);
  }
  int leaf_bit(std::size_t offset) const { return leaves_[offset]; }

 private:
  BitString leaves_;
  int depth_ = 0;
};

BitTree build_tree(const BitString& window);

// Bracketed L-system serialization: internal node =>
// "[-F" + left + "][+F" + right + "]", leaf => "".
std::string tree_to_bracketed(const BitTree& tree);

// Validates a bracketed string of the above form and returns the leaf
// count of the perfect tree it denotes. Throws CorruptStreamError on
// malformed input (unbalanced, wrong sign order, uneven subtrees).
std::size_t parse_bracketed(std::string_view s);

}  // namespace lsc
