#include "lsc/grammar.hpp"

#include <algorithm>
#include <unordered_map>

#include "lsc/errors.hpp"

namespace lsc {

namespace {

// Signature codes: 0 is the truncation mark ("internal, nothing visible
// below"), 1/2 are the leaf bits, interned pairs start at 3. A node's
// depth-j signature is:
//   leaf                -> 1 + bit                  (any j)
//   internal, j == 0    -> 0
//   internal, j > 0     -> intern(left depth-(j-1), right depth-(j-1))
// Computed bottom-up so classification is O(nodes * X), not exponential.
class SignatureTable {
 public:
  SignatureTable(const BitTree& tree, int iso_depth)
      : tree_(tree),
        // Depth >= tree depth never truncates anything; clamping keeps the
        // table small for kFullIsoDepth.
        x_(std::min(iso_depth, tree.depth())) {
    if (iso_depth < 0) throw DomainError("iso_depth must be >= 0");
    int d = tree_.depth();
    sig_.assign(static_cast<std::size_t>(d + 1), {});
    for (int level = d; level >= 0; --level) {
      std::size_t count = std::size_t{1} << static_cast<unsigned>(level);
      auto& row = sig_[static_cast<std::size_t>(level)];
      row.assign(static_cast<std::size_t>(x_ + 1) * count, 0);
      for (std::size_t o = 0; o < count; ++o) {
        if (level == d) {
          std::uint32_t code = 1 + static_cast<std::uint32_t>(tree_.leaf_bit(o));
          for (int j = 0; j <= x_; ++j) at(level, j, o) = code;
          continue;
        }
        at(level, 0, o) = 0;
        for (int j = 1; j <= x_; ++j) {
          at(level, j, o) =
              intern(at(level + 1, j - 1, 2 * o), at(level + 1, j - 1, 2 * o + 1));
        }
      }
    }
  }

  std::uint32_t final_sig(int level, std::size_t offset) const {
    return at(level, x_, offset);
  }
  int effective_depth() const { return x_; }

 private:
  std::uint32_t& at(int level, int j, std::size_t offset) {
    auto count = std::size_t{1} << static_cast<unsigned>(level);
    return sig_[static_cast<std::size_t>(level)]
               [static_cast<std::size_t>(j) * count + offset];
  }
  std::uint32_t at(int level, int j, std::size_t offset) const {
    auto count = std::size_t{1} << static_cast<unsigned>(level);
    return sig_[static_cast<std::size_t>(level)]
               [static_cast<std::size_t>(j) * count + offset];
  }

  std::uint32_t intern(std::uint32_t a, std::uint32_t b) {
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto [it, inserted] = pool_.emplace(key, next_);
    if (inserted) ++next_;
    return it->second;
  }

  const BitTree& tree_;
  int x_;
  std::vector<std::vector<std::uint32_t>> sig_;  // [level][j * count + offset]
  std::unordered_map<std::uint64_t, std::uint32_t> pool_;
  std::uint32_t next_ = 3;
};

}  // namespace

std::vector<std::uint32_t> depth_signatures(const BitTree& tree, int level,
                                            int iso_depth) {
  SignatureTable table(tree, iso_depth);
  std::size_t count = std::size_t{1} << static_cast<unsigned>(level);
  std::vector<std::uint32_t> out(count);
  for (std::size_t o = 0; o < count; ++o) out[o] = table.final_sig(level, o);
  return out;
}

Grammar classify(const BitTree& tree, int iso_depth) {
  SignatureTable table(tree, iso_depth);
  int d = tree.depth();

  // Pass 1: BFS (level by level, left before right) assigns class ids in
  // first-encounter order; the root is visited first, so its class is C1.
  std::unordered_map<std::uint32_t, int> class_of_sig;
  Grammar g;
  g.window_depth = d;
  g.iso_depth = table.effective_depth();
  for (int level = 0; level <= d; ++level) {
    std::size_t count = std::size_t{1} << static_cast<unsigned>(level);
    for (std::size_t o = 0; o < count; ++o) {
      std::uint32_t sig = table.final_sig(level, o);
      auto [it, inserted] =
          class_of_sig.emplace(sig, static_cast<int>(class_of_sig.size()) + 1);
      if (inserted) {
        RuleClass rc;
        rc.id = it->second;
        rc.repr = tree.span(level, o).str();
        g.classes.push_back(std::move(rc));
      }
    }
  }

  // Pass 2: accumulate each node's right-hand side into its class,
  // grouping identical RHSs into variants with multiplicities.
  for (int level = 0; level <= d; ++level) {
    std::size_t count = std::size_t{1} << static_cast<unsigned>(level);
    for (std::size_t o = 0; o < count; ++o) {
      RuleClass& rc = g.classes[static_cast<std::size_t>(
          class_of_sig.at(table.final_sig(level, o)) - 1)];
      Variant v;
      if (level == d) {
        v.terminal = true;
        v.bit = tree.leaf_bit(o);
      } else {
        v.left = class_of_sig.at(table.final_sig(level + 1, 2 * o));
        v.right = class_of_sig.at(table.final_sig(level + 1, 2 * o + 1));
      }
      auto match = std::find_if(rc.variants.begin(), rc.variants.end(),
                                [&](const Variant& w) {
                                  return w.terminal == v.terminal &&
                                         (v.terminal
                                              ? w.bit == v.bit
                                              : (w.left == v.left && w.right == v.right));
                                });
      if (match == rc.variants.end()) {
        v.mult = 1;
        rc.variants.push_back(v);
      } else {
        ++match->mult;
      }
      ++rc.member_count;
      ++g.node_total;
    }
  }

  LSC_CHECK(g.node_total == tree.node_count(),
            "classification lost or duplicated nodes");
  g.root_class = 1;
  return g;
}

GrammarStats grammar_stats(const Grammar& g) {
  GrammarStats s;
  s.n = static_cast<int>(g.classes.size());
  s.node_total = g.node_total;
  for (const RuleClass& rc : g.classes) {
    s.variant_counts.push_back(static_cast<int>(rc.variants.size()));
    std::vector<std::uint64_t> m;
    for (const Variant& v : rc.variants) m.push_back(v.mult);
    s.mults.push_back(std::move(m));
  }
  return s;
}

}  // namespace lsc
