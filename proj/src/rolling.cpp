#include "specnet/rolling.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>

#include <omp.h>

#include "specnet/error.hpp"
#include "specnet/io.hpp"
#include "specnet/pmfg.hpp"
#include "specnet/randomization.hpp"
#include "specnet/rng.hpp"

namespace specnet {

namespace {

constexpr const char* kModeNames[] = {"full", "market", "sector"};
constexpr const char* kDetectorNames[] = {"louvain", "lpa", "gn"};

template <class F>
auto annotated(std::size_t window, F&& f) {
  const std::string prefix = "window " + std::to_string(window) + ": ";
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(prefix + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.what());
  } catch (const NumericError& e) {
    throw NumericError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  }
}

struct Spectra {
  CorrelationMatrix corr;
  ModeDecomposition modes;
  double resum_error = 0.0;
};

Spectra spectra_of(const ReturnPanel& slice, const WindowConfig& cfg) {
  Spectra s;
  s.corr = correlation_matrix(slice, cfg.exec);
  const auto eig = eigendecompose(s.corr);
  const auto bounds = mp_bounds(slice.num_stocks(), slice.num_samples(), cfg.mp_variant);
  const auto k = select_sector_count(eig, bounds, cfg.k_override);
  s.modes = decompose_modes(eig, k);
  s.resum_error =
      (s.corr.values - (s.modes.market + s.modes.sector + s.modes.random)).cwiseAbs().maxCoeff();
  return s;
}

const Eigen::MatrixXd* mode_matrix(const Spectra& s, Mode m) {
  switch (m) {
    case Mode::full: return &s.corr.values;
    case Mode::market: return &s.modes.market;
    case Mode::sector: return s.modes.k_sector > 0 ? &s.modes.sector : nullptr;
  }
  return nullptr;
}

std::uint64_t sub_seed(std::uint64_t window_seed, Mode m, std::uint64_t purpose) {
  return derive_seed(window_seed, static_cast<std::uint64_t>(m) * 16 + purpose);
}

Partition detect(const WeightedNetwork& net, Detector d, std::uint64_t seed) {
  switch (d) {
    case Detector::louvain: return louvain(net, {seed, 1.0, {}}).partition;
    case Detector::lpa: return label_propagation(net, seed);
    case Detector::gn: return girvan_newman(net).partition;
  }
  return {};
}

std::string opt_num(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

nlohmann::json opt_json(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

std::optional<double> opt_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

std::string to_string(Mode m) { return kModeNames[static_cast<int>(m)]; }

Mode mode_from_string(const std::string& s) {
  for (int i = 0; i < 3; ++i)
    if (s == kModeNames[i]) return static_cast<Mode>(i);
  throw ValidationError("unknown mode: " + s);
}

std::string to_string(Detector d) { return kDetectorNames[static_cast<int>(d)]; }

Detector detector_from_string(const std::string& s) {
  for (int i = 0; i < 3; ++i)
    if (s == kDetectorNames[i]) return static_cast<Detector>(i);
  throw ValidationError("unknown detector: " + s);
}

std::vector<WindowBounds> enumerate_windows(std::size_t t_total, const WindowSpec& spec) {
  if (spec.length < 1 || spec.step < 1 || spec.step > spec.length)
    throw ValidationError("window spec needs 1 <= step <= length");
  if (t_total < spec.length)
    throw ValidationError("series of " + std::to_string(t_total) +
                          " samples is shorter than the window length " +
                          std::to_string(spec.length));
  std::vector<WindowBounds> out;
  for (std::size_t s = 0; s + spec.length <= t_total; s += spec.step)
    out.push_back({s, s + spec.length});
  return out;
}

nlohmann::json config_to_json(const WindowConfig& c) {
  nlohmann::json j;
  for (Mode m : c.modes) j["modes"].push_back(to_string(m));
  for (Detector d : c.detectors) j["detectors"].push_back(to_string(d));
  for (CorenessMethod m : c.cp_methods) j["cp_methods"].push_back(to_string(m));
  j["k_override"] = c.k_override ? nlohmann::json(*c.k_override) : nlohmann::json(nullptr);
  j["mp_variant"] = to_string(c.mp_variant);
  j["significance"] = c.significance;
  j["n_rand"] = c.n_rand;
  j["rombach_samples"] = c.rombach_samples;
  j["core_size"] = c.core_size ? nlohmann::json(*c.core_size) : nlohmann::json(nullptr);
  j["seed"] = c.seed;
  return j;
}

const ModeResult* WindowResult::mode(Mode m) const {
  for (const auto& r : modes)
    if (r.mode == m) return &r;
  return nullptr;
}

nlohmann::json window_to_json(const WindowResult& w) {
  nlohmann::json j;
  j["window_index"] = w.window_index;
  j["start"] = format_iso_date(w.start);
  j["end"] = format_iso_date(w.end);
  j["k_sector"] = w.k_sector;
  j["resum_error"] = w.resum_error;
  j["modes"] = nlohmann::json::array();
  for (const auto& m : w.modes) {
    nlohmann::json mj;
    mj["mode"] = to_string(m.mode);
    mj["available"] = m.available;
    mj["cp_centralization"] = m.cp_centralization;
    mj["p_value"] = opt_json(m.p_value);
    mj["detectors"] = nlohmann::json::array();
    for (const auto& d : m.detectors)
      mj["detectors"].push_back({{"detector", to_string(d.detector)},
                                 {"modularity", d.modularity},
                                 {"community_count", d.community_count},
                                 {"nmi_vs_full", opt_json(d.nmi_vs_full)},
                                 {"labels", d.partition.labels()}});
    mj["cp_fits"] = nlohmann::json::array();
    for (const auto& f : m.cp_fits)
      mj["cp_fits"].push_back(
          {{"method", to_string(f.method)}, {"frobenius", f.frobenius}, {"coreness", f.coreness}});
    j["modes"].push_back(std::move(mj));
  }
  return j;
}

WindowResult window_from_json(const nlohmann::json& j) {
  try {
    WindowResult w;
    w.window_index = j.at("window_index").get<std::size_t>();
    w.start = parse_iso_date(j.at("start").get<std::string>());
    w.end = parse_iso_date(j.at("end").get<std::string>());
    w.k_sector = j.at("k_sector").get<std::size_t>();
    w.resum_error = j.at("resum_error").get<double>();
    for (const auto& mj : j.at("modes")) {
      ModeResult m;
      m.mode = mode_from_string(mj.at("mode").get<std::string>());
      m.available = mj.at("available").get<bool>();
      m.cp_centralization = mj.at("cp_centralization").get<double>();
      m.p_value = opt_from(mj.at("p_value"));
      for (const auto& dj : mj.at("detectors")) {
        DetectorOutcome d;
        d.detector = detector_from_string(dj.at("detector").get<std::string>());
        d.modularity = dj.at("modularity").get<double>();
        d.community_count = dj.at("community_count").get<int>();
        d.nmi_vs_full = opt_from(dj.at("nmi_vs_full"));
        d.partition = Partition(dj.at("labels").get<std::vector<int>>());
        m.detectors.push_back(std::move(d));
      }
      for (const auto& fj : mj.at("cp_fits"))
        m.cp_fits.push_back({coreness_method_from_string(fj.at("method").get<std::string>()),
                             fj.at("frobenius").get<double>(),
                             fj.at("coreness").get<std::vector<double>>()});
      w.modes.push_back(std::move(m));
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed window record: ") + e.what());
  }
}

WindowResult analyze_window(const ReturnPanel& slice, const WindowConfig& cfg,
                            std::size_t window_index) {
  return annotated(window_index, [&] {
    if (slice.num_samples() < 1) throw ValidationError("empty window");
    const std::uint64_t wseed = derive_seed(cfg.seed, window_index);
    const Spectra sp = spectra_of(slice, cfg);
    WindowResult w;
    w.window_index = window_index;
    w.start = slice.dates.front();
    w.end = slice.dates.back();
    w.k_sector = sp.modes.k_sector;
    w.resum_error = sp.resum_error;
    const int n = static_cast<int>(slice.num_stocks());
    const int core = cfg.core_size ? *cfg.core_size : default_core_size(n);

    for (Mode mode : cfg.modes) {
      ModeResult mr;
      mr.mode = mode;
      const Eigen::MatrixXd* sim = mode_matrix(sp, mode);
      if (!sim) {
        mr.available = false;
        w.modes.push_back(std::move(mr));
        continue;
      }
      const WeightedNetwork net = pmfg(*sim, slice.tickers, WeightTransform::absolute);
      const auto prof = rossa_profile(net);
      mr.cp_centralization = *prof.cp_centralization;
      if (cfg.significance) {
        SignificanceOptions so;
        so.n_rand = cfg.n_rand;
        so.seed = sub_seed(wseed, mode, 1);
        so.exec = cfg.exec;
        mr.p_value = cp_significance(net, so).p_value;
      }
      const Eigen::MatrixXd adj = net.adjacency();
      for (CorenessMethod method : cfg.cp_methods) {
        std::vector<double> scores;
        switch (method) {
          case CorenessMethod::rossa: scores = prof.coreness().scores; break;
          case CorenessMethod::rombach: {
            RombachOptions ro;
            ro.num_samples = cfg.rombach_samples;
            ro.seed = sub_seed(wseed, mode, 2);
            ro.exec = cfg.exec;
            scores = rombach_coreness(net, ro).scores;
            break;
          }
          case CorenessMethod::minres:
            try {
              scores = minres_coreness(net).coreness.scores;
            } catch (const MinresNonConvergence& e) {
              scores = e.last_iterate;
            }
            break;
        }
        mr.cp_fits.push_back({method, cp_fit_distance(adj, scores, core), std::move(scores)});
      }
      for (Detector d : cfg.detectors) {
        DetectorOutcome out;
        out.detector = d;
        out.partition = detect(net, d, sub_seed(wseed, mode, 3 + static_cast<std::uint64_t>(d)));
        out.modularity = modularity(net, out.partition).q;
        out.community_count = out.partition.num_communities();
        mr.detectors.push_back(std::move(out));
      }
      w.modes.push_back(std::move(mr));
    }

    if (const ModeResult* full = w.mode(Mode::full)) {
      for (auto& mr : w.modes) {
        if (mr.mode == Mode::full) continue;
        for (auto& d : mr.detectors)
          for (const auto& fd : full->detectors)
            if (fd.detector == d.detector) d.nmi_vs_full = nmi(fd.partition, d.partition);
      }
    }
    return w;
  });
}

std::string rolling_fingerprint(const ReturnPanel& panel, const WindowSpec& spec,
                                const WindowConfig& config) {
  nlohmann::json j = config_to_json(config);
  j["window_length"] = spec.length;
  j["window_step"] = spec.step;
  j["panel"] = hex64(fnv1a64(returns_to_csv(panel)));
  return hex64(fnv1a64(j.dump()));
}

RollingResult run_rolling(const ReturnPanel& panel, const WindowSpec& spec,
                          const WindowConfig& config, const RollingOptions& opt) {
  const auto bounds = enumerate_windows(panel.num_samples(), spec);
  const std::string fingerprint = rolling_fingerprint(panel, spec, config);
  RollingResult res;
  res.total_windows = bounds.size();

  if (opt.checkpoint && std::filesystem::exists(*opt.checkpoint)) {
    nlohmann::json cj;
    try {
      cj = nlohmann::json::parse(read_text_file(*opt.checkpoint));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("unreadable checkpoint " + opt.checkpoint->string() + ": " + e.what());
    }
    if (cj.value("version", -1) != kCheckpointVersion)
      throw ValidationError("checkpoint version mismatch in " + opt.checkpoint->string());
    if (cj.value("fingerprint", std::string()) != fingerprint)
      throw ValidationError("checkpoint " + opt.checkpoint->string() +
                            " was written for a different panel or configuration");
    for (const auto& wj : cj.at("windows")) res.windows.push_back(window_from_json(wj));
    for (std::size_t i = 0; i < res.windows.size(); ++i)
      if (res.windows[i].window_index != i || i >= bounds.size())
        throw ValidationError("checkpoint window sequence is corrupt");
  }

  auto save = [&] {
    if (!opt.checkpoint) return;
    nlohmann::json cj;
    cj["version"] = kCheckpointVersion;
    cj["fingerprint"] = fingerprint;
    cj["windows"] = nlohmann::json::array();
    for (const auto& w : res.windows) cj["windows"].push_back(window_to_json(w));
    write_text_atomic(*opt.checkpoint, cj.dump());
  };

  const std::size_t stop = std::min(bounds.size(), opt.max_windows.value_or(bounds.size()));
  const std::size_t chunk =
      opt.exec == Exec::parallel ? static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 2 : 1;
  while (res.windows.size() < stop) {
    const std::size_t first = res.windows.size();
    const std::size_t count = std::min(chunk, stop - first);
    std::vector<WindowResult> batch(count);
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](long k) {
      const std::size_t w = first + static_cast<std::size_t>(k);
      try {
        batch[static_cast<std::size_t>(k)] =
            analyze_window(panel.slice(bounds[w].start, spec.length), config, w);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    };
    if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long k = 0; k < static_cast<long>(count); ++k) run(k);
    } else {
      for (long k = 0; k < static_cast<long>(count); ++k) run(k);
    }
    for (std::size_t k = 0; k < count; ++k) {
      if (errors[k]) {
        save();
        std::rethrow_exception(errors[k]);
      }
      res.windows.push_back(std::move(batch[k]));
    }
    save();
  }
  return res;
}

std::vector<std::string> write_rolling_outputs(const RollingResult& result,
                                               const std::vector<std::string>& tickers,
                                               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string windows = "window,start,end,mode,available,k_sector,cp_centralization,p_value,detector,modularity,community_count,nmi_vs_full\n";
  std::string fits = "window,mode,method,frobenius\n";
  std::string coreness = "window,mode,method,ticker,score\n";
  std::string comms = "window,mode,detector,ticker,community_id\n";
  std::vector<Mode> mode_rows;
  std::vector<std::pair<Mode, Detector>> nmi_rows;
  for (const auto& w : result.windows) {
    const std::string head = std::to_string(w.window_index) + "," + format_iso_date(w.start) + "," +
                             format_iso_date(w.end) + ",";
    for (const auto& m : w.modes) {
      if (std::find(mode_rows.begin(), mode_rows.end(), m.mode) == mode_rows.end())
        mode_rows.push_back(m.mode);
      const std::string mhead = head + to_string(m.mode) + "," + (m.available ? "1" : "0") + "," +
                                std::to_string(w.k_sector) + ",";
      if (!m.available || m.detectors.empty()) {
        windows += mhead + (m.available ? format_double(m.cp_centralization) : "") + "," +
                   opt_num(m.p_value) + ",,,,\n";
      }
      for (const auto& d : m.detectors) {
        windows += mhead + format_double(m.cp_centralization) + "," + opt_num(m.p_value) + "," +
                   to_string(d.detector) + "," + format_double(d.modularity) + "," +
                   std::to_string(d.community_count) + "," + opt_num(d.nmi_vs_full) + "\n";
        if (m.mode != Mode::full &&
            std::find(nmi_rows.begin(), nmi_rows.end(), std::pair{m.mode, d.detector}) == nmi_rows.end())
          nmi_rows.emplace_back(m.mode, d.detector);
        for (int i = 0; i < d.partition.size(); ++i)
          comms += std::to_string(w.window_index) + "," + to_string(m.mode) + "," +
                   to_string(d.detector) + "," + csv_field(tickers[static_cast<std::size_t>(i)]) + "," +
                   std::to_string(d.partition[i] + 1) + "\n";
      }
      for (const auto& f : m.cp_fits) {
        fits += std::to_string(w.window_index) + "," + to_string(m.mode) + "," + to_string(f.method) +
                "," + format_double(f.frobenius) + "\n";
        for (std::size_t i = 0; i < f.coreness.size(); ++i)
          coreness += std::to_string(w.window_index) + "," + to_string(m.mode) + "," +
                      to_string(f.method) + "," + csv_field(tickers[i]) + "," +
                      format_double(f.coreness[i]) + "\n";
      }
    }
  }

  std::string header;
  for (const auto& w : result.windows) header += "," + std::to_string(w.window_index);
  std::string heat_cp = "mode" + header + "\n";
  for (Mode m : mode_rows) {
    heat_cp += to_string(m);
    for (const auto& w : result.windows) {
      const ModeResult* r = w.mode(m);
      heat_cp += "," + (r && r->available ? format_double(r->cp_centralization) : std::string());
    }
    heat_cp += "\n";
  }
  std::string heat_nmi = "mode,detector" + header + "\n";
  for (const auto& [m, d] : nmi_rows) {
    heat_nmi += to_string(m) + "," + to_string(d);
    for (const auto& w : result.windows) {
      std::optional<double> v;
      if (const ModeResult* r = w.mode(m))
        for (const auto& o : r->detectors)
          if (o.detector == d) v = o.nmi_vs_full;
      heat_nmi += "," + opt_num(v);
    }
    heat_nmi += "\n";
  }

  const std::vector<std::pair<std::string, const std::string*>> files = {
      {"windows.csv", &windows},   {"cp_fit.csv", &fits},           {"coreness.csv", &coreness},
      {"heatmap_cp.csv", &heat_cp}, {"heatmap_nmi.csv", &heat_nmi}, {"communities.csv", &comms}};
  std::vector<std::string> names;
  for (const auto& [name, text] : files) {
    write_text_atomic(dir / name, *text);
    names.push_back(name);
  }
  return names;
}

ModePartitions mode_partitions(const ReturnPanel& slice, const WindowConfig& cfg,
                               std::size_t window_index) {
  return annotated(window_index, [&] {
    const std::uint64_t wseed = derive_seed(cfg.seed, window_index);
    const Spectra sp = spectra_of(slice, cfg);
    auto part = [&](Mode m) {
      const WeightedNetwork net = pmfg(*mode_matrix(sp, m), slice.tickers, WeightTransform::absolute);
      return detect(net, Detector::louvain, sub_seed(wseed, m, 3));
    };
    ModePartitions mp{part(Mode::full), part(Mode::market), std::nullopt};
    if (sp.modes.k_sector > 0) mp.sector = part(Mode::sector);
    return mp;
  });
}

std::vector<BacktestReport> rolling_backtest(const ReturnPanel& panel, const WindowSpec& spec,
                                             const WindowConfig& wc, const PortfolioConfig& pc,
                                             std::optional<std::size_t> max_windows, Exec exec) {
  if (spec.length < 2 || spec.step < 1) throw ValidationError("invalid window spec");
  const std::size_t span = spec.length + pc.max_hold;
  if (panel.num_samples() < span)
    throw ValidationError("series of " + std::to_string(panel.num_samples()) +
                          " samples cannot hold a " + std::to_string(spec.length) +
                          "-day window plus " + std::to_string(pc.max_hold) + " holding days");
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s + span <= panel.num_samples(); s += spec.step) starts.push_back(s);
  if (max_windows && *max_windows < starts.size()) starts.resize(*max_windows);
  std::vector<BacktestReport> reports(starts.size());
  std::vector<std::exception_ptr> errors(starts.size());
  auto run = [&](long k) {
    const auto w = static_cast<std::size_t>(k);
    try {
      const ReturnPanel in = panel.slice(starts[w], spec.length);
      const ReturnPanel out = panel.slice(starts[w] + spec.length, pc.max_hold);
      const ModePartitions parts = mode_partitions(in, wc, w);
      reports[w] = annotated(w, [&] { return run_strategies(in, out, parts, pc, w); });
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < static_cast<long>(starts.size()); ++k) run(k);
  } else {
    for (long k = 0; k < static_cast<long>(starts.size()); ++k) run(k);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

}  // namespace specnet
