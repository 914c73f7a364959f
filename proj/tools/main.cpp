#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lsc/cli.hpp"
#include "lsc/errors.hpp"

namespace {

using lsc::cli::RunConfig;

void add_solver_options(CLI::App* cmd, RunConfig& cfg, std::string& iso_depth,
                        std::string& k_mode) {
  cmd->add_option("--iso-depth", iso_depth,
                  "isomorphism depth X (nonnegative integer or 'full')")
      ->envname("LSC_ISO_DEPTH")
      ->capture_default_str();
  cmd->add_option("--k-mode", k_mode, "exponent mode: unit (k=1) or inverse (k=1/n_ip)")
      ->check(CLI::IsMember({"unit", "inverse"}))
      ->envname("LSC_K_MODE")
      ->capture_default_str();
  cmd->add_option("--m-max", cfg.conv.m_max, "iteration budget per z")
      ->envname("LSC_M_MAX")
      ->capture_default_str();
  cmd->add_option("--eps", cfg.conv.eps, "absolute convergence tolerance")
      ->envname("LSC_EPS")
      ->capture_default_str();
  cmd->add_option("--bisect-iters", cfg.conv.bisect_iters,
                  "bisection steps")
      ->envname("LSC_BISECT_ITERS")
      ->capture_default_str();
  cmd->add_option("--value-cap", cfg.conv.value_cap, "divergence guard")
      ->envname("LSC_VALUE_CAP")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string iso_depth = "2";
  std::string k_mode = "unit";
  std::string measures = "k0,te,lc";

  CLI::App app{
      "L-system structural complexity (K0) of bit sequences, with topological\n"
      "entropy and linguistic complexity baselines. Text is normalized to\n"
      "lowercase a..z plus single spaces before encoding."};
  app.require_subcommand(1);

  auto* enc = app.add_subcommand("encode", "encode a text file into a bit file");
  enc->add_option("--input,-i", cfg.input_path, "UTF-8 text file")->required();
  enc->add_option("--output,-o", cfg.output_path, "output file (default stdout)");
  enc->add_option("--encoding,-e", cfg.encoding, "bin or lzw")
      ->check(CLI::IsMember({"bin", "lzw"}))
      ->envname("LSC_ENCODING")
      ->capture_default_str();
  enc->add_option("--alphabet", cfg.alphabet,
                  "LZW alphabet override (ordered symbols; default a..z + space)");
  enc->add_flag("--ascii", cfg.ascii_output, "write '0'/'1' text instead of packed bytes");

  auto* gra = app.add_subcommand("grammar", "classify one window and dump the rule table");
  gra->add_option("window", cfg.window_literal, "window bits, e.g. 0010011100101101");
  gra->add_option("--input,-i", cfg.input_path, "bit file holding the window");
  gra->add_option("--output,-o", cfg.output_path, "output file (default stdout)");
  gra->add_option("--format,-f", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  add_solver_options(gra, cfg, iso_depth, k_mode);

  auto* cpx = app.add_subcommand("complexity", "K0 of one window");
  cpx->add_option("window", cfg.window_literal, "window bits (or hex with --hex)");
  cpx->add_option("--input,-i", cfg.input_path, "bit file holding the window");
  cpx->add_option("--output,-o", cfg.output_path, "output file (default stdout)");
  cpx->add_flag("--hex", cfg.hex, "window is hex digits");
  cpx->add_flag("--trace", cfg.trace, "print the probe/bisection trace");
  cpx->add_option("--format,-f", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  add_solver_options(cpx, cfg, iso_depth, k_mode);

  auto* bas = app.add_subcommand("baselines", "TE and LC of a symbol sequence");
  bas->add_option("sequence", cfg.window_literal, "symbol sequence, e.g. 0111001100");
  bas->add_option("--input,-i", cfg.input_path, "text file (normalized before use)");
  bas->add_option("--output,-o", cfg.output_path, "output file (default stdout)");
  bas->add_option("--alphabet-size,-k", cfg.alphabet_size, "alphabet size k")
      ->capture_default_str();
  bas->add_option("--format,-f", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");

  auto* ana = app.add_subcommand("analyze", "per-window K0/TE/LC series over a file");
  ana->add_option("--input,-i", cfg.input_path, "text file (bin/lzw) or bit file (raw-bits)")
      ->required();
  ana->add_option("--output,-o", cfg.output_path, "output file (default stdout)");
  ana->add_option("--encoding,-e", cfg.encoding, "bin, lzw, or raw-bits")
      ->check(CLI::IsMember({"bin", "lzw", "raw-bits"}))
      ->envname("LSC_ENCODING")
      ->capture_default_str();
  ana->add_option("--alphabet", cfg.alphabet, "LZW alphabet override");
  ana->add_option("--window,-w", cfg.window_bits, "window size in bits (power of two)")
      ->envname("LSC_WINDOW_BITS")
      ->capture_default_str();
  ana->add_option("--stride,-s", cfg.stride_bits, "stride in bits (default: window size)")
      ->envname("LSC_STRIDE_BITS");
  ana->add_option("--measures,-m", measures, "comma list from {k0,te,lc}")
      ->envname("LSC_MEASURES")
      ->capture_default_str();
  ana->add_option("--tau", cfg.anomaly_tau, "anomaly threshold (robust z-score)")
      ->envname("LSC_TAU")
      ->capture_default_str();
  ana->add_option("--format,-f", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("LSC_FORMAT")
      ->capture_default_str();
  add_solver_options(ana, cfg, iso_depth, k_mode);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.iso_depth = lsc::cli::parse_iso_depth(iso_depth);
    cfg.k_mode = k_mode == "inverse" ? lsc::KMode::inverse : lsc::KMode::unit;
    cfg.measures = lsc::cli::parse_measures(measures);

    if (app.got_subcommand(enc)) return lsc::cli::cmd_encode(cfg);
    if (app.got_subcommand(gra)) return lsc::cli::cmd_grammar(cfg);
    if (app.got_subcommand(cpx)) return lsc::cli::cmd_complexity(cfg);
    if (app.got_subcommand(bas)) return lsc::cli::cmd_baselines(cfg);
    if (app.got_subcommand(ana)) return lsc::cli::cmd_analyze(cfg);
  } catch (const lsc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
