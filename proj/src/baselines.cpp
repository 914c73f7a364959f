#include "lsc/baselines.hpp"

#include <cmath>
#include <map>

#include "lsc/errors.hpp"

namespace lsc {

namespace {

// Standard suffix automaton over bytes. State count <= 2|s| - 1.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::string_view s) {
    states_.push_back({-1, 0, {}});
    int last = 0;
    for (char c : s) last = extend(last, c);
  }

  // Each non-initial state recognizes the substring lengths
  // (len(link), len]; summing those intervals counts every distinct
  // substring exactly once.
  std::vector<std::uint64_t> length_histogram(std::size_t n) const {
    std::vector<std::int64_t> diff(n + 2, 0);
    for (std::size_t v = 1; v < states_.size(); ++v) {
      int lo = states_[static_cast<std::size_t>(states_[v].link)].len + 1;
      int hi = states_[v].len;
      diff[static_cast<std::size_t>(lo)] += 1;
      diff[static_cast<std::size_t>(hi) + 1] -= 1;
    }
    std::vector<std::uint64_t> counts(n);
    std::int64_t run = 0;
    for (std::size_t l = 1; l <= n; ++l) {
      run += diff[l];
      counts[l - 1] = static_cast<std::uint64_t>(run);
    }
    return counts;
  }

 private:
  struct State {
    int link;
    int len;
    std::map<char, int> next;
  };

  int extend(int last, char c) {
    int cur = static_cast<int>(states_.size());
    states_.push_back({-1, states_[static_cast<std::size_t>(last)].len + 1, {}});
    int p = last;
    while (p != -1 && !states_[static_cast<std::size_t>(p)].next.count(c)) {
      states_[static_cast<std::size_t>(p)].next[c] = cur;
      p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p == -1) {
      states_[static_cast<std::size_t>(cur)].link = 0;
      return cur;
    }
    int q = states_[static_cast<std::size_t>(p)].next[c];
    if (states_[static_cast<std::size_t>(p)].len + 1 ==
        states_[static_cast<std::size_t>(q)].len) {
      states_[static_cast<std::size_t>(cur)].link = q;
      return cur;
    }
    int clone = static_cast<int>(states_.size());
    State cloned = states_[static_cast<std::size_t>(q)];
    cloned.len = states_[static_cast<std::size_t>(p)].len + 1;
    states_.push_back(std::move(cloned));
    while (p != -1) {
      auto it = states_[static_cast<std::size_t>(p)].next.find(c);
      if (it == states_[static_cast<std::size_t>(p)].next.end() || it->second != q) break;
      it->second = clone;
      p = states_[static_cast<std::size_t>(p)].link;
    }
    states_[static_cast<std::size_t>(q)].link = clone;
    states_[static_cast<std::size_t>(cur)].link = clone;
    return cur;
  }

  std::vector<State> states_;
};

}  // namespace

SubstringIndex distinct_counts(std::string_view s) {
  if (s.empty()) throw DomainError("distinct_counts: empty sequence");
  SubstringIndex out;
  out.counts = SuffixAutomaton(s).length_histogram(s.size());
  for (std::uint64_t c : out.counts) out.total += c;
  LSC_CHECK(out.counts.back() == 1, "A_|s| must be 1");
  return out;
}

LcBreakdown linguistic_complexity(std::string_view s, unsigned k) {
  if (k < 2) throw DomainError("linguistic_complexity: alphabet size must be >= 2");
  SubstringIndex idx = distinct_counts(s);
  std::size_t n = s.size();
  LcBreakdown out;
  out.a = idx.total;
  std::uint64_t pow = 1;
  bool saturated = false;
  for (std::size_t l = 1; l <= n; ++l) {
    if (!saturated) {
      pow *= k;
      if (pow >= n) saturated = true;  // min() picks the right side from here on
    }
    std::uint64_t cap = static_cast<std::uint64_t>(n - l + 1);
    out.m += saturated ? cap : std::min(pow, cap);
  }
  out.lc = static_cast<double>(out.a) / static_cast<double>(out.m);
  return out;
}

double entropy_fixed_length(std::string_view s, std::size_t l, unsigned k) {
  if (k < 2) throw DomainError("entropy_fixed_length: alphabet size must be >= 2");
  if (l < 1 || l > s.size()) throw DomainError("entropy_fixed_length: l out of range");
  std::uint64_t a_l = distinct_counts(s).counts[l - 1];
  return std::log(static_cast<double>(a_l)) /
         (static_cast<double>(l) * std::log(static_cast<double>(k)));
}

std::size_t te_subword_length(std::size_t n, unsigned k) {
  if (k < 2) throw DomainError("te_subword_length: alphabet size must be >= 2");
  if (n < k) throw DomainError("topological entropy needs |s| >= k");
  std::size_t l = 1;
  std::uint64_t pow = k;
  // Largest l with k^l + l - 1 <= n; when n sits exactly on a boundary the
  // larger of the two admissible lengths wins.
  while (pow <= (static_cast<std::uint64_t>(n) - l) / k) {
    // Guarded so pow*k never overflows: the loop continues only while
    // k^(l+1) + l <= n.
    pow *= k;
    ++l;
  }
  return l;
}

TeResult topological_entropy(std::string_view s, unsigned k) {
  TeResult out;
  out.l = te_subword_length(s.size(), k);
  std::uint64_t pow = 1;
  for (std::size_t i = 0; i < out.l; ++i) pow *= k;
  out.prefix_len = static_cast<std::size_t>(pow) + out.l - 1;
  std::string_view prefix = s.substr(0, out.prefix_len);
  out.a_l = distinct_counts(prefix).counts[out.l - 1];
  out.value = std::log(static_cast<double>(out.a_l)) /
              (static_cast<double>(out.l) * std::log(static_cast<double>(k)));
  return out;
}

}  // namespace lsc
