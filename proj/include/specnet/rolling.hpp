#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specnet/community.hpp"
#include "specnet/coreperiphery.hpp"
#include "specnet/market_data.hpp"
#include "specnet/portfolio.hpp"
#include "specnet/spectral.hpp"

namespace specnet {

enum class Mode { full, market, sector };
std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

enum class Detector { louvain, lpa, gn };
std::string to_string(Detector d);
Detector detector_from_string(const std::string& s);

struct WindowSpec {
  std::size_t length = 250;
  std::size_t step = 1;
};

/// Half-open column range [start, end).
struct WindowBounds {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const WindowBounds&, const WindowBounds&) = default;
};

std::vector<WindowBounds> enumerate_windows(std::size_t t_total, const WindowSpec& spec);

struct WindowConfig {
  std::vector<Mode> modes = {Mode::full, Mode::market, Mode::sector};
  std::vector<Detector> detectors = {Detector::louvain, Detector::lpa, Detector::gn};
  std::vector<CorenessMethod> cp_methods = {CorenessMethod::rossa, CorenessMethod::rombach,
                                            CorenessMethod::minres};
  std::optional<std::size_t> k_override;
  MpVariant mp_variant = MpVariant::standard;
  bool significance = false;
  int n_rand = 100;
  int rombach_samples = 500;
  /// Core block size for the ideal-matrix fit; defaults to N/4.
  std::optional<int> core_size;
  std::uint64_t seed = 0;
  /// Kernel flavour inside one window.
  Exec exec = Exec::serial;
};

nlohmann::json config_to_json(const WindowConfig& c);

struct DetectorOutcome {
  Detector detector = Detector::louvain;
  double modularity = 0.0;
  int community_count = 0;
  /// NMI against the same detector's full-mode partition.
  std::optional<double> nmi_vs_full;
  Partition partition;
};

struct CpFit {
  CorenessMethod method = CorenessMethod::rossa;
  double frobenius = 0.0;
  std::vector<double> coreness;
};

struct ModeResult {
  Mode mode = Mode::full;
  /// False for the sector mode of a window without sector eigenvalues.
  bool available = true;
  double cp_centralization = 0.0;
  std::optional<double> p_value;
  std::vector<DetectorOutcome> detectors;
  std::vector<CpFit> cp_fits;
};

struct WindowResult {
  std::size_t window_index = 0;
  Date start{};
  Date end{};
  std::size_t k_sector = 0;
  /// max |C - (market + sector + random)|.
  double resum_error = 0.0;
  std::vector<ModeResult> modes;
  const ModeResult* mode(Mode m) const;
};

nlohmann::json window_to_json(const WindowResult& w);
WindowResult window_from_json(const nlohmann::json& j);

/// Correlation, mode split, one PMFG per mode, core-periphery and community
/// metrics. Seeds derive from (config.seed, window_index).
WindowResult analyze_window(const ReturnPanel& slice, const WindowConfig& config,
                            std::size_t window_index = 0);

struct RollingOptions {
  /// Window-level parallelism.
  Exec exec = Exec::parallel;
  /// Resume from and update this file when set.
  std::optional<std::filesystem::path> checkpoint;
  /// Stop after this many windows in total are done.
  std::optional<std::size_t> max_windows;
};

struct RollingResult {
  std::vector<WindowResult> windows;  ///< in window order
  std::size_t total_windows = 0;
  bool complete() const { return windows.size() == total_windows; }
};

constexpr int kCheckpointVersion = 1;

/// Hash of the panel contents, window spec and config; guards checkpoints.
std::string rolling_fingerprint(const ReturnPanel& panel, const WindowSpec& spec,
                                const WindowConfig& config);

RollingResult run_rolling(const ReturnPanel& panel, const WindowSpec& spec,
                          const WindowConfig& config, const RollingOptions& options = {});

/// windows.csv, cp_fit.csv, coreness.csv, heatmap_cp.csv, heatmap_nmi.csv and
/// communities.csv. Returns the written file names.
std::vector<std::string> write_rolling_outputs(const RollingResult& result,
                                               const std::vector<std::string>& tickers,
                                               const std::filesystem::path& dir);

/// Louvain partitions of the full, market and sector PMFGs of one panel.
ModePartitions mode_partitions(const ReturnPanel& slice, const WindowConfig& config,
                               std::size_t window_index = 0);

/// In-sample windows of spec.length followed by max_hold out-of-sample days.
std::vector<BacktestReport> rolling_backtest(const ReturnPanel& panel, const WindowSpec& spec,
                                             const WindowConfig& window_config,
                                             const PortfolioConfig& portfolio_config,
                                             std::optional<std::size_t> max_windows = std::nullopt,
                                             Exec exec = Exec::parallel);

}  // namespace specnet
