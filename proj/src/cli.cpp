#include "lsc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "lsc/baselines.hpp"
#include "lsc/bitio.hpp"
#include "lsc/encoding.hpp"
#include "lsc/errors.hpp"

namespace lsc::cli {

namespace {

// Deterministic, exact round-trip representation.
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Resolves --output: stdout when empty.
class DataSink {
 public:
  explicit DataSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

BitString window_from_config(const RunConfig& cfg) {
  std::string literal = cfg.window_literal;
  if (literal.empty() && !cfg.input_path.empty()) {
    return read_bit_file(cfg.input_path).first;
  }
  if (literal.empty()) throw Error("no window given (positional bits or --input)");
  if (cfg.hex) {
    BitString bits;
    for (char c : literal) {
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else throw CorruptStreamError("bad hex digit in window");
      for (int i = 3; i >= 0; --i) bits.push_back((v >> i) & 1);
    }
    return bits;
  }
  return BitString::from_string(literal);
}

nlohmann::json record_to_json(const WindowRecord& rec) {
  nlohmann::json j;
  j["window_index"] = rec.index;
  j["start_bit"] = rec.start_bit;
  j["k0"] = rec.k0 ? nlohmann::json(*rec.k0) : nlohmann::json(nullptr);
  j["te"] = rec.te ? nlohmann::json(*rec.te) : nlohmann::json(nullptr);
  j["lc"] = rec.lc ? nlohmann::json(*rec.lc) : nlohmann::json(nullptr);
  j["anomaly"] = rec.anomaly;
  return j;
}

std::string variant_to_string(const Variant& v) {
  if (v.terminal) {
    return "null(bit " + std::to_string(v.bit) + ") x" + std::to_string(v.mult);
  }
  return "C" + std::to_string(v.left) + "C" + std::to_string(v.right) + " x" +
         std::to_string(v.mult);
}

}  // namespace

MeasureSet parse_measures(const std::string& spec) {
  MeasureSet m{false, false, false};
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "k0") m.k0 = true;
    else if (item == "te") m.te = true;
    else if (item == "lc") m.lc = true;
    else if (!item.empty()) throw Error("unknown measure: " + item);
  }
  if (!m.any()) throw Error("measures must name at least one of k0,te,lc");
  return m;
}

int parse_iso_depth(const std::string& spec) {
  if (spec == "full") return kFullIsoDepth;
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(spec, &pos);
  } catch (const std::exception&) {
    throw Error("iso-depth must be a nonnegative integer or 'full'");
  }
  if (pos != spec.size() || v < 0) {
    throw Error("iso-depth must be a nonnegative integer or 'full'");
  }
  return v;
}

void emit_csv(const WindowSeries& series, std::ostream& out) {
  out << "window_index,start_bit,k0,te,lc,anomaly\n";
  for (const WindowRecord& rec : series.records) {
    out << rec.index << ',' << rec.start_bit << ',';
    if (rec.k0) out << fmt_double(*rec.k0);
    out << ',';
    if (rec.te) out << fmt_double(*rec.te);
    out << ',';
    if (rec.lc) out << fmt_double(*rec.lc);
    out << ',' << (rec.anomaly ? "true" : "false") << '\n';
  }
}

void emit_json(const WindowSeries& series, std::ostream& out) {
  nlohmann::json j;
  j["plan"] = {{"window_bits", series.plan.window_bits},
               {"stride_bits", series.plan.stride_bits},
               {"dropped_tail_bits", series.plan.dropped_tail_bits}};
  j["encoding"] = series.encoding_tag;
  j["records"] = nlohmann::json::array();
  for (const WindowRecord& rec : series.records) {
    j["records"].push_back(record_to_json(rec));
  }
  out << j.dump(2) << '\n';
}

int cmd_encode(const RunConfig& cfg) {
  std::string text = preprocess_text(read_text_file(cfg.input_path));
  BitString bits;
  BitFileMeta meta;
  if (cfg.encoding == "bin") {
    bits = encode_bin(text);
    meta.encoding = "bin";
  } else if (cfg.encoding == "lzw") {
    std::string alphabet =
        cfg.alphabet.empty() ? std::string(kTextAlphabet) : cfg.alphabet;
    auto [indices, dict] = encode_lzw(text, alphabet);
    unsigned width = index_bit_width(indices);
    bits = indices_to_bits(indices, width);
    meta.encoding = "lzw";
    meta.code_width = width;
  } else {
    throw Error("encode needs --encoding bin or lzw");
  }
  meta.bits = bits.size();
  DataSink sink(cfg.output_path);
  if (cfg.ascii_output) {
    write_ascii(sink.stream(), bits);
  } else {
    write_packed(sink.stream(), bits, meta);
  }
  return 0;
}

int cmd_grammar(const RunConfig& cfg) {
  BitString window = window_from_config(cfg);
  Grammar g = classify(build_tree(window), cfg.iso_depth);
  DataSink sink(cfg.output_path);
  std::ostream& out = sink.stream();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["iso_depth"] = g.iso_depth;
    j["window_depth"] = g.window_depth;
    j["class_count"] = g.classes.size();
    j["node_total"] = g.node_total;
    j["classes"] = nlohmann::json::array();
    for (const RuleClass& rc : g.classes) {
      nlohmann::json jc;
      jc["id"] = rc.id;
      jc["variant_count"] = rc.variants.size();
      jc["substring"] = rc.repr;
      jc["variants"] = nlohmann::json::array();
      for (const Variant& v : rc.variants) {
        nlohmann::json jv;
        jv["mult"] = v.mult;
        if (v.terminal) {
          jv["bit"] = v.bit;
        } else {
          jv["left"] = v.left;
          jv["right"] = v.right;
        }
        jc["variants"].push_back(jv);
      }
      j["classes"].push_back(jc);
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "class  n_i  variants";
  out << std::string(32, ' ') << "substring\n";
  for (const RuleClass& rc : g.classes) {
    std::string variants;
    for (std::size_t i = 0; i < rc.variants.size(); ++i) {
      if (i) variants += "; ";
      variants += "C" + std::to_string(rc.id) + "->" + variant_to_string(rc.variants[i]);
    }
    std::string repr = rc.repr;
    if (repr.size() > 64) repr = repr.substr(0, 61) + "...";
    char line[64];
    std::snprintf(line, sizeof line, "C%-5d %-4zu ", rc.id, rc.variants.size());
    out << line << variants;
    std::size_t pad = variants.size() < 40 ? 40 - variants.size() : 1;
    out << std::string(pad, ' ') << repr << '\n';
  }
  out << "classes " << g.classes.size() << "  node_total " << g.node_total << '\n';
  return 0;
}

int cmd_complexity(const RunConfig& cfg) {
  BitString window = window_from_config(cfg);
  ComplexityResult res =
      k0_of_window(window, cfg.iso_depth, cfg.k_mode, cfg.conv);
  DataSink sink(cfg.output_path);
  std::ostream& out = sink.stream();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["R"] = res.R;
    j["k0"] = res.k0;
    j["converged_at_one"] = res.converged_at_one;
    if (cfg.trace) {
      j["trace"] = nlohmann::json::array();
      for (const TraceStep& s : res.trace) {
        j["trace"].push_back(
            {{"z", s.z}, {"converged", s.converged}, {"iters", s.iters}});
      }
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  if (cfg.trace) {
    for (const TraceStep& s : res.trace) {
      out << "trace z=" << fmt_double(s.z)
          << (s.converged ? " converged" : " not-converged") << " iters=" << s.iters
          << '\n';
    }
  }
  out << "R " << fmt_double(res.R) << '\n';
  out << "K0 " << fmt_double(res.k0) << '\n';
  out << "converged_at_one " << (res.converged_at_one ? "true" : "false") << '\n';
  return 0;
}

int cmd_baselines(const RunConfig& cfg) {
  std::string s = cfg.window_literal;
  if (s.empty() && !cfg.input_path.empty()) {
    s = preprocess_text(read_text_file(cfg.input_path));
  }
  if (s.empty()) throw Error("no sequence given (positional or --input)");
  TeResult te = topological_entropy(s, cfg.alphabet_size);
  LcBreakdown lc = linguistic_complexity(s, cfg.alphabet_size);
  DataSink sink(cfg.output_path);
  std::ostream& out = sink.stream();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["te"] = te.value;
    j["te_subword_length"] = te.l;
    j["lc"] = lc.lc;
    j["A"] = lc.a;
    j["M"] = lc.m;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "TE " << fmt_double(te.value) << " (l=" << te.l << ", A_l=" << te.a_l
      << ")\n";
  out << "LC " << fmt_double(lc.lc) << " (A=" << lc.a << ", M=" << lc.m << ")\n";
  return 0;
}

int cmd_analyze(const RunConfig& cfg) {
  BitString bits;
  std::string tag = cfg.encoding;
  if (cfg.encoding == "bin") {
    bits = encode_bin(preprocess_text(read_text_file(cfg.input_path)));
  } else if (cfg.encoding == "lzw") {
    std::string alphabet =
        cfg.alphabet.empty() ? std::string(kTextAlphabet) : cfg.alphabet;
    auto [indices, dict] =
        encode_lzw(preprocess_text(read_text_file(cfg.input_path)), alphabet);
    bits = indices_to_bits(indices);
  } else if (cfg.encoding == "raw-bits") {
    auto [b, meta] = read_bit_file(cfg.input_path);
    bits = std::move(b);
    tag = meta.encoding;
  } else {
    throw Error("unknown encoding: " + cfg.encoding);
  }

  WindowPlan plan;
  plan.window_bits = cfg.window_bits;
  plan.stride_bits = cfg.stride_bits == 0 ? cfg.window_bits : cfg.stride_bits;

  AnalyzeParams params;
  params.measures = cfg.measures;
  params.iso_depth = cfg.iso_depth;
  params.k_mode = cfg.k_mode;
  params.conv = cfg.conv;

  WindowSeries series = analyze(bits, plan, params);
  series.encoding_tag = tag;
  if (series.records.empty()) {
    std::cerr << "warning: input has " << bits.size()
              << " bits, shorter than one " << plan.window_bits
              << "-bit window; series is empty\n";
  } else {
    series = flag_anomalies(std::move(series), cfg.anomaly_tau);
  }

  DataSink sink(cfg.output_path);
  if (cfg.format == "json") {
    emit_json(series, sink.stream());
  } else if (cfg.format == "csv") {
    emit_csv(series, sink.stream());
  } else {
    throw Error("unknown format: " + cfg.format);
  }
  return 0;
}

}  // namespace lsc::cli
