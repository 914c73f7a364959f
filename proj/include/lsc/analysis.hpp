#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsc/bitstring.hpp"
#include "lsc/genfun.hpp"

namespace lsc {

struct WindowPlan {
  std::size_t window_bits = 512;  // power of two
  std::size_t stride_bits = 512;
  std::size_t dropped_tail_bits = 0;  // set by segment()
};

struct MeasureSet {
  bool k0 = true;
  bool te = true;
  bool lc = true;

  bool any() const { return k0 || te || lc; }
};

struct WindowRecord {
  std::size_t index = 0;
  std::size_t start_bit = 0;
  std::optional<double> k0;
  std::optional<double> te;
  std::optional<double> lc;
  bool anomaly = false;
};

struct WindowSeries {
  WindowPlan plan;
  std::vector<WindowRecord> records;
  std::string encoding_tag;
};

struct AnalyzeParams {
  MeasureSet measures;
  int iso_depth = 2;
  KMode k_mode = KMode::unit;
  ConvergenceParams conv;
};

// Windows [i*stride, i*stride + window_bits); the trailing partial window
// is dropped and its size recorded in plan.dropped_tail_bits.
std::vector<BitString> segment(const BitString& bits, WindowPlan& plan);

// Per-window K0 / TE / LC. TE and LC treat the window as a binary sequence
// (k = 2). Deterministic for fixed inputs.
WindowSeries analyze(const BitString& bits, WindowPlan plan,
                     const AnalyzeParams& params);

// Robust z-score flagging per measure: a record is anomalous when, for any
// computed measure, |v - median| > tau * (1.4826 * MAD). A zero MAD flags
// exact deviants from the median. Throws DomainError on an empty series or
// tau <= 0.
WindowSeries flag_anomalies(WindowSeries series, double tau);

}  // namespace lsc
