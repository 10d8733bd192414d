#include "cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "specnet/community.hpp"
#include "specnet/coreperiphery.hpp"
#include "specnet/error.hpp"
#include "specnet/io.hpp"
#include "specnet/market_data.hpp"
#include "specnet/pmfg.hpp"
#include "specnet/portfolio.hpp"
#include "specnet/randomization.hpp"
#include "specnet/rng.hpp"
#include "specnet/rolling.hpp"
#include "specnet/spectral.hpp"
#include "specnet/synthetic.hpp"

#ifndef SPECNET_VERSION
#define SPECNET_VERSION "0.0.0"
#endif

namespace specnet::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

template <class T>
std::vector<T> parse_list(const std::string& s, T (*conv)(const std::string&),
                          const std::vector<T>& all) {
  if (s == "all") return all;
  std::vector<T> out;
  for (const auto& item : split_list(s)) out.push_back(conv(item));
  if (out.empty()) throw ValidationError("empty list: '" + s + "'");
  return out;
}

ReturnPanel load_returns(const std::string& path) {
  const std::string text = read_text_file(path);
  if (fs::path(path).extension() == ".json") {
    try {
      return returns_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  return returns_from_csv(text);
}

std::optional<std::size_t> k_opt(int k) {
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

struct Spectral {
  CorrelationMatrix corr;
  EigenDecomposition eig;
  MPBounds bounds;
  ModeDecomposition modes;
};

Spectral spectral_pipeline(const ReturnPanel& panel, MpVariant variant, int k_override) {
  Spectral s;
  s.corr = correlation_matrix(panel);
  s.eig = eigendecompose(s.corr);
  s.bounds = mp_bounds(panel.num_stocks(), panel.num_samples(), variant);
  s.modes = decompose_modes(s.eig, select_sector_count(s.eig, s.bounds, k_opt(k_override)));
  return s;
}

const Eigen::MatrixXd& mode_similarity(const Spectral& s, Mode m) {
  switch (m) {
    case Mode::market: return s.modes.market;
    case Mode::sector:
      if (s.modes.k_sector == 0)
        throw ValidationError("no eigenvalue above the Marchenko-Pastur edge besides the market one; sector mode is empty");
      return s.modes.sector;
    case Mode::full: break;
  }
  return s.corr.values;
}

/// Writes every output, then <name>.manifest.json next to them.
class Outputs {
 public:
  Outputs(std::string command, fs::path dir) : command_(std::move(command)), dir_(std::move(dir)) {
    fs::create_directories(dir_);
  }
  void write(const std::string& name, const std::string& text) {
    write_text_atomic(dir_ / name, text);
    files_.push_back(name);
  }
  void add_existing(const std::string& name) { files_.push_back(name); }
  const fs::path& dir() const { return dir_; }
  void finish(const CLI::App& sub, std::optional<std::uint64_t> seed) const {
    const std::string config = sub.config_to_str(true, false);
    nlohmann::ordered_json m;
    m["command"] = command_;
    m["version"] = SPECNET_VERSION;
    m["config"] = config;
    m["config_hash"] = hex64(fnv1a64(config));
    m["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    m["outputs"] = nlohmann::ordered_json::object();
    for (const auto& f : files_) m["outputs"][f] = hex64(fnv1a64(read_text_file(dir_ / f)));
    write_text_atomic(dir_ / (command_ + ".manifest.json"), m.dump(2) + "\n");
  }

 private:
  std::string command_;
  fs::path dir_;
  std::vector<std::string> files_;
};

void apply_thread_env() {
  const char* env = std::getenv("SPECNET_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw ValidationError(std::string("SPECNET_THREADS must be a positive integer, got '") + env + "'");
  omp_set_num_threads(static_cast<int>(n));
}

std::vector<Mode> all_modes() { return {Mode::full, Mode::market, Mode::sector}; }
std::vector<Detector> all_detectors() { return {Detector::louvain, Detector::lpa, Detector::gn}; }
std::vector<CorenessMethod> all_methods() {
  return {CorenessMethod::rossa, CorenessMethod::rombach, CorenessMethod::minres};
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Spectral decomposition, filtered networks and community portfolios of stock returns",
               "specnet"};
  app.set_config("--config", "", "key = value file; options go under a [subcommand] section");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", SPECNET_VERSION);

  std::function<void()> action;

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Long-format prices to a log-return panel");
  struct {
    std::string input, out = ".";
    double min_coverage = 1.0;
    IngestSchema schema;
  } ig;
  ingest->add_option("--input", ig.input, "CSV with date,ticker,close columns")->required();
  ingest->add_option("--out", ig.out, "Output directory");
  ingest->add_option("--min-coverage", ig.min_coverage, "Keep stocks present on at least this fraction of dates");
  ingest->add_option("--max-gap-days", ig.schema.max_gap_days, "Calendar gap treated as non-successive");
  ingest->add_option("--date-col", ig.schema.date_col);
  ingest->add_option("--ticker-col", ig.schema.ticker_col);
  ingest->add_option("--close-col", ig.schema.close_col);
  ingest->callback([&] {
    action = [&] {
      const PricePanel prices =
          filter_complete_stocks(ingest_prices_csv(read_text_file(ig.input), ig.schema), ig.min_coverage);
      const ReturnPanel r = compute_log_returns(prices);
      Outputs out("ingest", ig.out);
      out.write("returns.csv", returns_to_csv(r));
      out.write("returns.json", returns_to_json(r).dump() + "\n");
      out.finish(*ingest, std::nullopt);
      std::cout << r.num_stocks() << " stocks, " << r.num_samples() << " returns\n";
    };
  });

  // shared spectral options
  struct SpectralOpts {
    std::string input, out = ".", variant = "standard";
    int k_override = -1;
  };
  auto add_spectral = [](CLI::App* sub, SpectralOpts& o) {
    sub->add_option("--input", o.input, "Return panel (.csv or .json)")->required();
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--mp-variant", o.variant, "standard or paper_literal");
    sub->add_option("--k-override", o.k_override, "Sector eigenvalue count; negative selects by threshold");
  };

  // spectra
  auto* spectra = app.add_subcommand("spectra", "Eigenvalues, Marchenko-Pastur bounds and mode split");
  SpectralOpts sp;
  add_spectral(spectra, sp);
  spectra->callback([&] {
    action = [&] {
      const ReturnPanel r = load_returns(sp.input);
      const Spectral s = spectral_pipeline(r, mp_variant_from_string(sp.variant), sp.k_override);
      std::string ev = "rank,eigenvalue,outside_mp\n";
      std::size_t outside = 0;
      for (long a = 0; a < s.eig.eigenvalues.size(); ++a) {
        const double l = s.eig.eigenvalues(a);
        const bool o = l > s.bounds.lambda_max || l < s.bounds.lambda_min;
        outside += o;
        ev += std::to_string(a + 1) + "," + format_double(l) + "," + (o ? "1" : "0") + "\n";
      }
      std::string dens = "lambda,density\n";
      constexpr int kGrid = 200;
      for (int g = 0; g <= kGrid; ++g) {
        const double l = s.bounds.lambda_min + (s.bounds.lambda_max - s.bounds.lambda_min) * g / kGrid;
        dens += format_double(l) + "," + format_double(l > 0.0 ? mp_density(l, s.bounds) : 0.0) + "\n";
      }
      nlohmann::ordered_json j;
      j["stocks"] = r.num_stocks();
      j["samples"] = r.num_samples();
      j["q"] = s.bounds.q;
      j["lambda_min"] = s.bounds.lambda_min;
      j["lambda_max"] = s.bounds.lambda_max;
      j["mp_variant"] = to_string(s.bounds.variant);
      j["k_sector"] = s.modes.k_sector;
      j["outside_fraction"] = static_cast<double>(outside) / static_cast<double>(r.num_stocks());
      Outputs out("spectra", sp.out);
      out.write("eigenvalues.csv", ev);
      out.write("mp_density.csv", dens);
      out.write("spectra.json", j.dump(2) + "\n");
      out.finish(*spectra, std::nullopt);
    };
  });

  // pmfg
  auto* pm = app.add_subcommand("pmfg", "Planar maximally filtered graph of one mode");
  SpectralOpts pmo;
  std::string pm_mode = "full", pm_transform = "absolute";
  add_spectral(pm, pmo);
  pm->add_option("--mode", pm_mode, "full, market or sector");
  pm->add_option("--transform", pm_transform, "signed, absolute or shifted");
  pm->callback([&] {
    action = [&] {
      const ReturnPanel r = load_returns(pmo.input);
      const Spectral s = spectral_pipeline(r, mp_variant_from_string(pmo.variant), pmo.k_override);
      const Mode m = mode_from_string(pm_mode);
      const WeightedNetwork net =
          pmfg(mode_similarity(s, m), r.tickers, weight_transform_from_string(pm_transform));
      Outputs out("pmfg", pmo.out);
      out.write("pmfg_" + pm_mode + ".csv", network_to_csv(net));
      out.finish(*pm, std::nullopt);
    };
  });

  // coreperiphery
  auto* cp = app.add_subcommand("coreperiphery", "Coreness scores and cp-centralization of one mode's PMFG");
  SpectralOpts cpo;
  struct {
    std::string mode = "full", methods = "all";
    int rombach_samples = 10000, core_size = -1, n_rand = 100;
    double swap_factor = 10.0;
    bool significance = false;
    std::uint64_t seed = 0;
  } cpx;
  add_spectral(cp, cpo);
  cp->add_option("--mode", cpx.mode, "full, market or sector");
  cp->add_option("--methods", cpx.methods, "Comma list of rossa,rombach,minres or all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  cp->add_option("--rombach-samples", cpx.rombach_samples);
  cp->add_option("--core-size", cpx.core_size, "Core block of the ideal matrix; negative means N/4");
  cp->add_flag("--significance", cpx.significance, "Test cp-centralization against degree-preserving nulls");
  cp->add_option("--n-rand", cpx.n_rand);
  cp->add_option("--swap-factor", cpx.swap_factor);
  cp->add_option("--seed", cpx.seed);
  cp->callback([&] {
    action = [&] {
      const ReturnPanel r = load_returns(cpo.input);
      const Spectral s = spectral_pipeline(r, mp_variant_from_string(cpo.variant), cpo.k_override);
      const Mode m = mode_from_string(cpx.mode);
      const WeightedNetwork net = pmfg(mode_similarity(s, m), r.tickers, WeightTransform::absolute);
      const auto methods = parse_list(cpx.methods, coreness_method_from_string, all_methods());
      const int core = cpx.core_size < 0 ? default_core_size(net.num_nodes()) : cpx.core_size;
      const auto prof = rossa_profile(net);
      const Eigen::MatrixXd adj = net.adjacency();
      std::string scores = "ticker,method,score\n";
      nlohmann::ordered_json j;
      j["mode"] = cpx.mode;
      j["cp_centralization"] = *prof.cp_centralization;
      j["cp_centralization_clamped"] = clamp_cp_centralization(*prof.cp_centralization);
      for (CorenessMethod method : methods) {
        std::vector<double> c;
        if (method == CorenessMethod::rossa) {
          c = prof.coreness().scores;
        } else if (method == CorenessMethod::rombach) {
          RombachOptions ro;
          ro.num_samples = cpx.rombach_samples;
          ro.seed = cpx.seed;
          c = rombach_coreness(net, ro).scores;
        } else {
          const auto mr = minres_coreness(net);
          c = mr.coreness.scores;
          j["minres_iterations"] = mr.iterations;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
          scores += csv_field(r.tickers[i]) + "," + to_string(method) + "," + format_double(c[i]) + "\n";
        j["frobenius"][to_string(method)] = cp_fit_distance(adj, c, core);
      }
      std::string profile = "step,ticker,alpha\n";
      for (std::size_t k = 0; k < prof.order.size(); ++k)
        profile += std::to_string(k + 1) + "," + csv_field(r.tickers[static_cast<std::size_t>(prof.order[k])]) +
                   "," + format_double(k < prof.alphas.size() ? prof.alphas[k] : 1.0) + "\n";
      if (cpx.significance) {
        SignificanceOptions so;
        so.n_rand = cpx.n_rand;
        so.seed = cpx.seed;
        so.swap_factor = cpx.swap_factor;
        j["significance"] = significance_to_json(cp_significance(net, so));
      }
      Outputs out("coreperiphery", cpo.out);
      out.write("coreness.csv", scores);
      out.write("cp_profile.csv", profile);
      out.write("cp_summary.json", j.dump(2) + "\n");
      out.finish(*cp, cpx.seed);
    };
  });

  // communities
  auto* cm = app.add_subcommand("communities", "Community detection on the mode PMFGs");
  SpectralOpts cmo;
  struct {
    std::string modes = "all", detectors = "all";
    std::uint64_t seed = 0;
    int window_id = 0;
  } cmx;
  add_spectral(cm, cmo);
  cm->add_option("--modes", cmx.modes, "Comma list of full,market,sector or all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  cm->add_option("--detectors", cmx.detectors, "Comma list of louvain,lpa,gn or all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  cm->add_option("--seed", cmx.seed);
  cm->add_option("--window-id", cmx.window_id, "Written to the window_id column");
  cm->callback([&] {
    action = [&] {
      const ReturnPanel r = load_returns(cmo.input);
      const Spectral s = spectral_pipeline(r, mp_variant_from_string(cmo.variant), cmo.k_override);
      const auto modes = parse_list(cmx.modes, mode_from_string, all_modes());
      const auto dets = parse_list(cmx.detectors, detector_from_string, all_detectors());
      std::string parts = "ticker,community_id,method,mode,window_id\n";
      std::string q = "method,mode,modularity,communities\n";
      Outputs out("communities", cmo.out);
      for (Mode m : modes) {
        if (m == Mode::sector && s.modes.k_sector == 0) {
          std::cerr << "sector mode is empty; skipped\n";
          continue;
        }
        const WeightedNetwork net = pmfg(mode_similarity(s, m), r.tickers, WeightTransform::absolute);
        for (Detector d : dets) {
          Partition p;
          const std::uint64_t seed = derive_seed(cmx.seed, static_cast<std::uint64_t>(m) * 16 + static_cast<std::uint64_t>(d));
          if (d == Detector::louvain) {
            p = louvain(net, {seed, 1.0, {}}).partition;
          } else if (d == Detector::lpa) {
            p = label_propagation(net, seed);
          } else {
            const auto gn = girvan_newman(net);
            p = gn.partition;
            out.write("dendrogram_" + to_string(m) + ".json", gn.dendrogram.dump() + "\n");
          }
          for (int i = 0; i < p.size(); ++i)
            parts += csv_field(r.tickers[static_cast<std::size_t>(i)]) + "," + std::to_string(p[i] + 1) + "," +
                     to_string(d) + "," + to_string(m) + "," + std::to_string(cmx.window_id) + "\n";
          q += to_string(d) + "," + to_string(m) + "," + format_double(modularity(net, p).q) + "," +
               std::to_string(p.num_communities()) + "\n";
        }
      }
      out.write("partitions.csv", parts);
      out.write("modularity.csv", q);
      out.finish(*cm, cmx.seed);
    };
  });

  // rolling
  auto* rl = app.add_subcommand("rolling", "Sliding-window analysis with heatmap grids");
  SpectralOpts rlo;
  struct {
    std::size_t window = 250, step = 1;
    std::string modes = "all", detectors = "all", methods = "all", significance = "auto", checkpoint;
    int n_rand = 100, rombach_samples = 500, core_size = -1, max_windows = -1;
    std::uint64_t seed = 0;
  } rlx;
  add_spectral(rl, rlo);
  rl->add_option("--window", rlx.window, "Window length in samples");
  rl->add_option("--step", rlx.step, "Window step in samples");
  rl->add_option("--modes", rlx.modes)
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  rl->add_option("--detectors", rlx.detectors)
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  rl->add_option("--methods", rlx.methods, "Core-periphery methods for the ideal-matrix fit")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  rl->add_option("--significance", rlx.significance, "on, off, or auto (on for at most 200 windows)");
  rl->add_option("--n-rand", rlx.n_rand);
  rl->add_option("--rombach-samples", rlx.rombach_samples);
  rl->add_option("--core-size", rlx.core_size);
  rl->add_option("--seed", rlx.seed);
  rl->add_option("--checkpoint", rlx.checkpoint, "Resume from and update this file");
  rl->add_option("--max-windows", rlx.max_windows, "Stop after this many windows; negative runs all");
  rl->callback([&] {
    action = [&] {
      const ReturnPanel r = load_returns(rlo.input);
      const WindowSpec spec{rlx.window, rlx.step};
      WindowConfig c;
      c.modes = parse_list(rlx.modes, mode_from_string, all_modes());
      c.detectors = parse_list(rlx.detectors, detector_from_string, all_detectors());
      c.cp_methods = parse_list(rlx.methods, coreness_method_from_string, all_methods());
      c.k_override = k_opt(rlo.k_override);
      c.mp_variant = mp_variant_from_string(rlo.variant);
      if (rlx.significance == "auto")
        c.significance = enumerate_windows(r.num_samples(), spec).size() <= 200;
      else if (rlx.significance == "on" || rlx.significance == "off")
        c.significance = rlx.significance == "on";
      else
        throw ValidationError("--significance must be on, off or auto");
      c.n_rand = rlx.n_rand;
      c.rombach_samples = rlx.rombach_samples;
      if (rlx.core_size >= 0) c.core_size = rlx.core_size;
      c.seed = rlx.seed;
      RollingOptions ro;
      if (!rlx.checkpoint.empty()) ro.checkpoint = rlx.checkpoint;
      if (rlx.max_windows >= 0) ro.max_windows = static_cast<std::size_t>(rlx.max_windows);
      const RollingResult res = run_rolling(r, spec, c, ro);
      Outputs out("rolling", rlo.out);
      for (const auto& name : write_rolling_outputs(res, r.tickers, rlo.out)) out.add_existing(name);
      out.finish(*rl, rlx.seed);
      std::cout << res.windows.size() << " of " << res.total_windows << " windows\n";
    };
  });

  // portfolio
  auto* pf = app.add_subcommand("portfolio", "Community portfolios and out-of-sample Sharpe curves");
  struct {
    std::string returns, strategies = "all", weighting = "uniform,markowitz", out = "portfolio.csv",
                         variant = "standard";
    std::size_t window = 250, step = 1, max_hold = 250;
    double rf = 0.0, ridge = -1.0;
    bool long_only = false;
    int max_windows = -1, k_override = -1;
    std::uint64_t seed = 0;
  } pfx;
  pf->add_option("--returns", pfx.returns, "Return panel (.csv or .json)")->required();
  pf->add_option("--window", pfx.window, "In-sample length");
  pf->add_option("--step", pfx.step);
  pf->add_option("--max-hold", pfx.max_hold, "Longest holding period");
  pf->add_option("--strategies", pfx.strategies, "Comma list of strategy ids or all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  pf->add_option("--weighting", pfx.weighting, "Comma list of uniform,markowitz")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  pf->add_option("--rf", pfx.rf, "Per-period risk-free rate");
  pf->add_option("--ridge", pfx.ridge, "Covariance ridge; negative uses 1e-4 of the mean variance");
  pf->add_flag("--long-only", pfx.long_only);
  pf->add_option("--max-windows", pfx.max_windows);
  pf->add_option("--mp-variant", pfx.variant);
  pf->add_option("--k-override", pfx.k_override);
  pf->add_option("--seed", pfx.seed);
  pf->add_option("--out", pfx.out, "Report CSV path");
  pf->callback([&] {
    action = [&] {
      const ReturnPanel r = load_returns(pfx.returns);
      WindowConfig wc;
      wc.seed = pfx.seed;
      wc.mp_variant = mp_variant_from_string(pfx.variant);
      wc.k_override = k_opt(pfx.k_override);
      PortfolioConfig pc;
      pc.strategies = parse_list(pfx.strategies, strategy_from_string, all_strategies());
      pc.weightings = parse_list(pfx.weighting, weighting_from_string,
                                 std::vector<Weighting>{Weighting::uniform, Weighting::markowitz});
      pc.max_hold = pfx.max_hold;
      pc.rf = pfx.rf;
      if (pfx.ridge >= 0.0) pc.ridge = pfx.ridge;
      pc.long_only = pfx.long_only;
      pc.seed = pfx.seed;
      std::optional<std::size_t> mw;
      if (pfx.max_windows >= 0) mw = static_cast<std::size_t>(pfx.max_windows);
      const auto reports = rolling_backtest(r, {pfx.window, pfx.step}, wc, pc, mw);
      for (const auto& rep : reports)
        for (const auto& w : rep.warnings) std::cerr << "window " << rep.window_id << ": " << w << "\n";
      const fs::path path(pfx.out);
      Outputs out("portfolio", path.has_parent_path() ? path.parent_path() : fs::path("."));
      out.write(path.filename().string(), backtest_reports_to_csv(reports));
      out.finish(*pf, pfx.seed);
    };
  });

  // report
  auto* rp = app.add_subcommand("report", "Summary tables from rolling and portfolio outputs");
  std::string rp_results, rp_portfolio, rp_out;
  rp->add_option("--results", rp_results, "Rolling output directory")->required();
  rp->add_option("--portfolio", rp_portfolio, "Portfolio report; defaults to <results>/portfolio.csv");
  rp->add_option("--out", rp_out, "Defaults to <results>/report");
  rp->callback([&] {
    action = [&] {
      const fs::path results(rp_results);
      const fs::path pfile = rp_portfolio.empty() ? results / "portfolio.csv" : fs::path(rp_portfolio);
      const fs::path dir = rp_out.empty() ? results / "report" : fs::path(rp_out);
      Outputs out("report", dir);
      for (const auto& name : emit_report(results, pfile, dir)) out.add_existing(name);
      out.finish(*rp, std::nullopt);
    };
  });

  // synth
  auto* sy = app.add_subcommand("synth", "Synthetic factor-model prices in long format");
  SyntheticMarketSpec sys;
  std::string sy_out = "prices.csv";
  sy->add_option("--n", sys.n, "Stocks");
  sy->add_option("--t", sys.t, "Returns per stock");
  sy->add_option("--sectors", sys.sectors);
  sy->add_option("--seed", sys.seed);
  sy->add_option("--out", sy_out, "Price CSV path");
  sy->callback([&] {
    action = [&] {
      const fs::path path(sy_out);
      Outputs out("synth", path.has_parent_path() ? path.parent_path() : fs::path("."));
      out.write(path.filename().string(), synthetic_prices_csv(sys));
      out.finish(*sy, sys.seed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    apply_thread_env();
    if (action) action();
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace specnet::cli
