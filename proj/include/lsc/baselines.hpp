#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace lsc {

// Exact distinct-substring counts A_l for l = 1..|s|.
struct SubstringIndex {
  std::vector<std::uint64_t> counts;  // counts[l-1] = A_l
  std::uint64_t total = 0;            // A(s) = sum of all A_l
};

// Computed with a suffix automaton (linear construction); matches the
// brute-force substring-set oracle exactly. Throws DomainError on empty s.
SubstringIndex distinct_counts(std::string_view s);

struct LcBreakdown {
  double lc = 0.0;
  std::uint64_t a = 0;  // realized distinct substrings
  std::uint64_t m = 0;  // maximal possible: sum of min(k^l, |s|-l+1)
};

// Linguistic complexity A(s)/M(s) for alphabet size k >= 2.
LcBreakdown linguistic_complexity(std::string_view s, unsigned k);

// H_l(s) = log_k(A_l(s)) / l. Throws DomainError when l is out of range.
double entropy_fixed_length(std::string_view s, std::size_t l, unsigned k);

// The unique l with k^l + l - 1 <= |s| <= k^(l+1) + l; at the boundary
// where both l and l+1 qualify, the larger one wins.
std::size_t te_subword_length(std::size_t n, unsigned k);

struct TeResult {
  double value = 0.0;
  std::size_t l = 0;           // selected subword length
  std::uint64_t a_l = 0;       // distinct length-l subwords of the prefix
  std::size_t prefix_len = 0;  // k^l + l - 1
};

// Topological entropy: truncate s to its first k^l + l - 1 symbols and
// return log_k(A_l(prefix)) / l. Requires |s| >= k.
TeResult topological_entropy(std::string_view s, unsigned k);

}  // namespace lsc
