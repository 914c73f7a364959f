#include "lsc/tree.hpp"

#include <bit>

#include "lsc/errors.hpp"

namespace lsc {

BitTree::BitTree(BitString window) : leaves_(std::move(window)) {
  std::size_t n = leaves_.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw InvalidWindowError("window length must be a power of two >= 2");
  }
  depth_ = std::bit_width(n) - 1;
}

BitTree build_tree(const BitString& window) { return BitTree(window); }

namespace {

void expand(const BitTree& t, int level, std::size_t offset, std::string& out) {
  if (level == t.depth()) return;  // leaves serialize to nothing
  out += "[-F";
  expand(t, level + 1, 2 * offset, out);
  out += "][+F";
  expand(t, level + 1, 2 * offset + 1, out);
  out += "]";
}

// Parses one subtree expansion starting at s[pos]; returns its leaf count.
std::size_t parse_expansion(std::string_view s, std::size_t& pos) {
  // Empty expansion = leaf.
  if (pos >= s.size() || s[pos] != '[') return 1;
  auto expect = [&](std::string_view lit) {
    if (s.compare(pos, lit.size(), lit) != 0) {
      throw CorruptStreamError("bracketed string: expected '" + std::string(lit) +
                               "' at offset " + std::to_string(pos));
    }
    pos += lit.size();
  };
  expect("[-F");
  std::size_t left = parse_expansion(s, pos);
  expect("][+F");
  std::size_t right = parse_expansion(s, pos);
  expect("]");
  if (left != right) {
    throw CorruptStreamError("bracketed string: subtrees of unequal size");
  }
  return left + right;
}

}  // namespace

std::string tree_to_bracketed(const BitTree& tree) {
  std::string out;
  expand(tree, 0, 0, out);
  return out;
}

std::size_t parse_bracketed(std::string_view s) {
  std::size_t pos = 0;
  std::size_t leaves = parse_expansion(s, pos);
  if (pos != s.size()) {
    throw CorruptStreamError("bracketed string: trailing characters");
  }
  return leaves;
}

}  // namespace lsc
