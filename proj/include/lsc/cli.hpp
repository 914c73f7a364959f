#pragma once

#include <iosfwd>
#include <string>

#include "lsc/analysis.hpp"
#include "lsc/genfun.hpp"

namespace lsc::cli {

// Aggregated configuration for all subcommands; each command reads the
// fields it cares about (512-bit windows, iso depth 2, m = 200, k = 1 by
// default).
struct RunConfig {
  std::string input_path;
  std::string output_path;        // empty = stdout
  std::string encoding = "lzw";   // {bin, lzw, raw-bits}
  std::string window_literal;     // grammar/complexity/baselines input
  bool hex = false;               // window_literal is hex, not bits
  std::string alphabet;           // LZW override; empty = a..z + space
  bool ascii_output = false;      // encode: '0'/'1' line instead of packed
  std::size_t window_bits = 512;
  std::size_t stride_bits = 0;    // 0 = window_bits
  int iso_depth = 2;
  KMode k_mode = KMode::unit;
  ConvergenceParams conv;
  MeasureSet measures;
  double anomaly_tau = 3.5;
  std::string format = "csv";     // {csv, json} for analyze; {text, json} elsewhere
  bool trace = false;
  unsigned alphabet_size = 2;     // baselines k
};

int cmd_encode(const RunConfig& cfg);
int cmd_grammar(const RunConfig& cfg);
int cmd_complexity(const RunConfig& cfg);
int cmd_baselines(const RunConfig& cfg);
int cmd_analyze(const RunConfig& cfg);

// Series emitters (exposed for tests).
void emit_csv(const WindowSeries& series, std::ostream& out);
void emit_json(const WindowSeries& series, std::ostream& out);

// "k0,te,lc" (any nonempty subset, any order) -> MeasureSet.
MeasureSet parse_measures(const std::string& spec);

// Nonnegative integer or "full".
int parse_iso_depth(const std::string& spec);

}  // namespace lsc::cli
