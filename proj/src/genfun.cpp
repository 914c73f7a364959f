#include "lsc/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsc/errors.hpp"

namespace lsc {

void ConvergenceParams::validate() const {
  if (m_max < 1) throw DomainError("m_max must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0,1)");
  if (!(value_cap > 1.0)) throw DomainError("value_cap must be > 1");
  if (bisect_iters < 1) throw DomainError("bisect_iters must be >= 1");
}

GenFunSystem system_from_grammar(const Grammar& g, KMode mode) {
  GenFunSystem sys;
  sys.k_mode = mode;
  sys.root = g.root_class - 1;
  sys.classes.reserve(g.classes.size());
  for (const RuleClass& rc : g.classes) {
    GfClass c;
    double denom = 0.0;
    for (const Variant& v : rc.variants) denom += static_cast<double>(v.mult);
    c.denom = denom;
    LSC_CHECK(denom >= 1.0, "class with empty variant set");
    c.terminal = rc.variants.front().terminal;
    if (!c.terminal) {
      for (const Variant& v : rc.variants) {
        GfTerm t;
        t.coeff = static_cast<double>(v.mult);
        t.zexp = mode == KMode::unit ? 1.0 : 1.0 / static_cast<double>(v.mult);
        t.a = v.left - 1;
        t.b = v.right - 1;
        c.terms.push_back(t);
      }
    }
    sys.classes.push_back(std::move(c));
  }
  return sys;
}

IterateResult iterate(const GenFunSystem& sys, double z,
                      const ConvergenceParams& params) {
  params.validate();
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("z must lie in [0,1]");

  std::size_t n = sys.classes.size();
  // z^k per term is constant across iterations; hoist it.
  std::vector<std::vector<double>> zpow(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const GfTerm& t : sys.classes[i].terms) {
      zpow[i].push_back(t.zexp == 1.0 ? z : std::pow(z, t.zexp));
    }
  }

  std::vector<double> prev(n, 1.0), next(n, 1.0);
  std::vector<double> scratch;
  for (int m = 1; m <= params.m_max; ++m) {
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const GfClass& c = sys.classes[i];
      if (c.terminal) continue;  // V_i(z) = 1
      scratch.clear();
      for (std::size_t p = 0; p < c.terms.size(); ++p) {
        const GfTerm& t = c.terms[p];
        double va = prev[static_cast<std::size_t>(t.a)];
        double vb = prev[static_cast<std::size_t>(t.b)];
        // Ordered min*max product + sorted accumulation below make the
        // result invariant under class relabeling and child swaps — the
        // basis of the bit-exact symmetry guarantee.
        double term = ((t.coeff * zpow[i][p]) * std::min(va, vb)) * std::max(va, vb);
        scratch.push_back(term);
      }
      std::sort(scratch.begin(), scratch.end());
      double sum = 0.0;
      for (double v : scratch) sum += v;
      double value = sum / c.denom;
      if (value > params.value_cap) {
        return {false, m, std::move(next)};
      }
      LSC_CHECK(value >= 0.0, "iterate: negative value");
      LSC_CHECK(value <= prev[i] * (1.0 + 1e-12) + 1e-15,
                "iterate: monotonicity violated");
      // The update map is monotone with nonnegative coefficients, so the
      // exact sequence is nonincreasing from V^0 = 1; pin the float
      // sequence to that property.
      value = std::min(value, prev[i]);
      next[i] = value;
      delta = std::max(delta, prev[i] - value);
    }
    prev = next;
    if (delta <= params.eps) {
      return {true, m, std::move(next)};
    }
  }
  return {false, params.m_max, std::move(next)};
}

ComplexityResult radius(const GenFunSystem& sys, const ConvergenceParams& params) {
  params.validate();
  ComplexityResult out;

  // Testing literally z = 1 is vacuous: V = 1 is an exact fixpoint of the
  // averaged recurrence there, so every system "converges" instantly and
  // the measure would be identically zero. Probe one step inside instead.
  // 1 - 2^-20 is the 20th dyadic midpoint, so the bisection trace below
  // stays monotone even relative to the probe.
  const double probe = 1.0 - std::ldexp(1.0, -20);
  IterateResult at_edge = iterate(sys, probe, params);
  out.trace.push_back({probe, at_edge.converged, at_edge.iters});
  if (at_edge.converged) {
    out.R = 1.0;
    out.k0 = 0.0;
    out.converged_at_one = true;
    return out;
  }

  double lo = 0.0, hi = 1.0;
  for (int step = 0; step < params.bisect_iters; ++step) {
    double mid = 0.5 * (lo + hi);
    IterateResult r = iterate(sys, mid, params);
    out.trace.push_back({mid, r.converged, r.iters});
    if (r.converged) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Region-test sanity: no z may be reported convergent above a z reported
  // non-convergent.
  double max_conv = 0.0;
  double min_div = std::numeric_limits<double>::infinity();
  for (const TraceStep& s : out.trace) {
    if (s.converged) {
      max_conv = std::max(max_conv, s.z);
    } else {
      min_div = std::min(min_div, s.z);
    }
  }
  LSC_CHECK(max_conv < min_div, "bisection trace is not monotone");

  out.R = lo;
  out.k0 = lo > 0.0 ? -std::log(lo) : std::numeric_limits<double>::infinity();
  out.converged_at_one = false;
  return out;
}

ComplexityResult k0_of_window(const BitString& window, int iso_depth, KMode mode,
                              const ConvergenceParams& params) {
  Grammar g = classify(build_tree(window), iso_depth);
  return radius(system_from_grammar(g, mode), params);
}

}  // namespace lsc
