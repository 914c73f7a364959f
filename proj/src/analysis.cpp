#include "lsc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lsc/baselines.hpp"
#include "lsc/errors.hpp"

namespace lsc {

namespace {

void validate_plan(const WindowPlan& plan) {
  if (plan.window_bits < 2 || !std::has_single_bit(plan.window_bits)) {
    throw InvalidWindowError("window_bits must be a power of two >= 2");
  }
  if (plan.stride_bits < 1) throw InvalidWindowError("stride_bits must be >= 1");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<bool> robust_flags(const std::vector<double>& values, double tau) {
  double med = median(values);
  std::vector<double> devs;
  devs.reserve(values.size());
  for (double v : values) devs.push_back(std::abs(v - med));
  double sigma = 1.4826 * median(devs);
  std::vector<bool> flags(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    flags[i] = sigma == 0.0 ? values[i] != med : devs[i] > tau * sigma;
  }
  return flags;
}

}  // namespace

std::vector<BitString> segment(const BitString& bits, WindowPlan& plan) {
  validate_plan(plan);
  std::vector<BitString> out;
  if (bits.size() < plan.window_bits) {
    plan.dropped_tail_bits = bits.size();
    return out;
  }
  std::size_t count = (bits.size() - plan.window_bits) / plan.stride_bits + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t start = i * plan.stride_bits;
    out.push_back(bits.slice(start, start + plan.window_bits));
  }
  plan.dropped_tail_bits =
      bits.size() - ((count - 1) * plan.stride_bits + plan.window_bits);
  return out;
}

WindowSeries analyze(const BitString& bits, WindowPlan plan,
                     const AnalyzeParams& params) {
  if (!params.measures.any()) throw DomainError("analyze: no measures requested");
  params.conv.validate();
  WindowSeries series;
  std::vector<BitString> windows = segment(bits, plan);
  series.plan = plan;
  series.records.reserve(windows.size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    WindowRecord rec;
    rec.index = i;
    rec.start_bit = i * plan.stride_bits;
    if (params.measures.k0) {
      rec.k0 = k0_of_window(windows[i], params.iso_depth, params.k_mode, params.conv).k0;
    }
    if (params.measures.te || params.measures.lc) {
      std::string s = windows[i].str();
      if (params.measures.te) rec.te = topological_entropy(s, 2).value;
      if (params.measures.lc) rec.lc = linguistic_complexity(s, 2).lc;
    }
    series.records.push_back(std::move(rec));
  }
  return series;
}

WindowSeries flag_anomalies(WindowSeries series, double tau) {
  if (series.records.empty()) throw DomainError("flag_anomalies: empty series");
  if (!(tau > 0.0)) throw DomainError("flag_anomalies: tau must be > 0");

  auto apply = [&](auto getter) {
    std::vector<double> values;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < series.records.size(); ++i) {
      if (auto v = getter(series.records[i])) {
        values.push_back(*v);
        where.push_back(i);
      }
    }
    if (values.empty()) return;
    std::vector<bool> flags = robust_flags(values, tau);
    for (std::size_t j = 0; j < where.size(); ++j) {
      if (flags[j]) series.records[where[j]].anomaly = true;
    }
  };

  for (WindowRecord& rec : series.records) rec.anomaly = false;
  apply([](const WindowRecord& r) { return r.k0; });
  apply([](const WindowRecord& r) { return r.te; });
  apply([](const WindowRecord& r) { return r.lc; });
  return series;
}

}  // namespace lsc
