#pragma once

#include <vector>

#include "lsc/bitstring.hpp"
#include "lsc/grammar.hpp"

namespace lsc {

// Exponent mode for z^k in the generating function: unit (k = 1) or
// inverse (k = 1/n_ip, weighting rule redundancy).
enum class KMode { unit, inverse };

struct GfTerm {
  double coeff = 0.0;  // n_ip
  double zexp = 1.0;   // k
  int a = -1;          // 0-based class indexes of the RHS, -1 for terminals
  int b = -1;
};

struct GfClass {
  bool terminal = false;       // terminal classes evaluate to the constant 1
  std::vector<GfTerm> terms;
  double denom = 1.0;          // sum of n_iq over the class
};

struct GenFunSystem {
  std::vector<GfClass> classes;
  int root = 0;  // 0-based index of the root class
  KMode k_mode = KMode::unit;
};

struct ConvergenceParams {
  int m_max = 200;          // iteration budget
  double eps = 1e-9;        // absolute convergence tolerance
  double value_cap = 1e100; // divergence guard
  int bisect_iters = 40;    // bisection steps

  void validate() const;
};

struct IterateResult {
  bool converged = false;
  int iters = 0;
  std::vector<double> values;
};

struct TraceStep {
  double z = 0.0;
  bool converged = false;
  int iters = 0;
};

struct ComplexityResult {
  double R = 1.0;
  double k0 = 0.0;
  bool converged_at_one = false;
  std::vector<TraceStep> trace;
};

GenFunSystem system_from_grammar(const Grammar& g, KMode mode);

// Jacobi iteration of the averaged recurrence from V^0 = 1. Converged when
// max_i |V_i^m - V_i^(m-1)| <= eps within the budget; NotConverged on budget
// exhaustion or a value above value_cap. Throws DomainError for z outside
// [0,1]. Summation order inside each class is canonicalized (terms sorted by
// value), so isomorphic systems produce bit-identical trajectories.
IterateResult iterate(const GenFunSystem& sys, double z,
                      const ConvergenceParams& params);

// Operational radius of convergence. A single probe just inside the unit
// edge decides the fast path: if it converges, R = 1 and K0 = 0 exactly.
// Otherwise bisect [0,1] and return R = the last z confirmed convergent,
// K0 = -ln R. The probe z and every midpoint are dyadic, so the procedure
// is exactly reproducible.
ComplexityResult radius(const GenFunSystem& sys, const ConvergenceParams& params);

// classify -> system_from_grammar -> radius, end to end.
ComplexityResult k0_of_window(const BitString& window, int iso_depth, KMode mode,
                              const ConvergenceParams& params);

}  // namespace lsc
