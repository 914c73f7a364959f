#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lsc/tree.hpp"

namespace lsc {

// Pass as iso_depth to classify at full refinement (no truncation: classes
// become exact subtree contents). Any value >= tree depth behaves the same.
inline constexpr int kFullIsoDepth = std::numeric_limits<int>::max();

// One right-hand side occurring within a class: either terminal with a bit
// value or internal with the two child class ids. mult = n_ip.
struct Variant {
  bool terminal = false;
  int bit = 0;        // valid when terminal
  int left = 0;       // class ids, 1-based; valid when internal
  int right = 0;
  std::uint64_t mult = 0;

  bool operator==(const Variant&) const = default;
};

// Equivalence class C_i of node rules under iso-depth-X similarity.
struct RuleClass {
  int id = 0;                     // 1-based; 1 = root's class
  std::vector<Variant> variants;  // distinct RHSs, first-encounter order
  std::uint64_t member_count = 0; // sum of variant multiplicities
  std::string repr;               // first-encountered member's substring
};

struct Grammar {
  std::vector<RuleClass> classes;  // ordered by id
  int root_class = 1;
  std::uint64_t node_total = 0;    // sum of all multiplicities = 2^(d+1)-1
  int window_depth = 0;
  int iso_depth = 0;               // effective (possibly clamped) depth used
};

// Canonical signature value for one node at isomorphism depth X: equal
// signatures iff the node rules are depth-X isomorphic. Signatures from a
// single classify() run are comparable with one another only.
// Exposed mainly for tests; classify() is the real consumer.
std::vector<std::uint32_t> depth_signatures(const BitTree& tree, int level,
                                            int iso_depth);

// Partition every node rule by depth-X signature; class ids assigned in
// first-encounter order of a breadth-first, left-before-right traversal
// from the root, so the root's class is always C1.
Grammar classify(const BitTree& tree, int iso_depth);

struct GrammarStats {
  int n = 0;                                      // class count
  std::vector<int> variant_counts;                // n_i per class
  std::vector<std::vector<std::uint64_t>> mults;  // n_ip per class/variant
  std::uint64_t node_total = 0;
};

GrammarStats grammar_stats(const Grammar& g);

}  // namespace lsc
