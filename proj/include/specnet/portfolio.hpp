#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specnet/community.hpp"
#include "specnet/market_data.hpp"

namespace specnet {

enum class StrategyId { P_f_max, P_f_rand, P_mar_max, P_mar_ran, P_sec_max, P_sec_ran, P_MKT };
std::string to_string(StrategyId s);
StrategyId strategy_from_string(const std::string& s);
std::vector<StrategyId> all_strategies();

enum class Weighting { uniform, markowitz };
std::string to_string(Weighting w);
Weighting weighting_from_string(const std::string& s);

enum class Picker { max_sharpe, random };

/// Fractions of capital per ticker; sums to one.
struct WeightVector {
  std::vector<std::string> tickers;
  std::vector<double> weights;
  double sum() const;
};

/// sqrt(factor) * (mean - rf) / stdev with the n-1 divisor.
double sharpe_ratio(std::span<const double> returns, double rf = 0.0,
                    double annualization_factor = 252.0);

struct Selection {
  std::vector<std::string> tickers;  ///< one per community, in community order
  std::vector<std::string> warnings;
};

/// One ticker per community of `partition`, whose nodes are the panel rows.
/// max_sharpe ties go to the lexicographically smaller ticker; members with a
/// degenerate series are passed over, and a community with no usable member
/// yields its lexicographically first ticker plus a warning.
Selection select_stocks(const Partition& partition, const ReturnPanel& insample, Picker picker,
                        std::uint64_t seed, double rf = 0.0);

WeightVector uniform_weights(const std::vector<std::string>& tickers);

struct MarkowitzOptions {
  double rf = 0.0;
  /// Added to the covariance diagonal; defaults to 1e-4 times its mean.
  std::optional<double> ridge;
  bool long_only = false;
};

/// w proportional to (cov + ridge I)^-1 (mu - rf), normalised to sum 1.
Eigen::VectorXd tangency_weights(const Eigen::VectorXd& mu, const Eigen::MatrixXd& cov, double rf,
                                 double ridge, bool long_only);

/// Tangency weights from the in-sample mean and sample covariance of the
/// given tickers. A single ticker gets weight 1.
WeightVector markowitz_weights(const std::vector<std::string>& tickers,
                               const ReturnPanel& insample, const MarkowitzOptions& options = {});

/// Daily simple returns of a buy-and-hold portfolio over the first `days`
/// columns of the log-return panel.
std::vector<double> portfolio_returns(const WeightVector& w, const ReturnPanel& outsample,
                                      std::size_t days);

/// Sharpe of days 1..h of the buy-and-hold series for h = 1..max_hold. The
/// h = 1 entry is the raw excess return of the first day.
std::vector<double> backtest(const WeightVector& w, const ReturnPanel& outsample,
                             std::size_t max_hold = 250, double rf = 0.0,
                             double annualization_factor = 252.0);

struct PortfolioConfig {
  std::vector<StrategyId> strategies = all_strategies();
  std::vector<Weighting> weightings = {Weighting::uniform, Weighting::markowitz};
  std::size_t max_hold = 250;
  double rf = 0.0;
  double annualization_factor = 252.0;
  std::optional<double> ridge;
  bool long_only = false;
  std::uint64_t seed = 0;
};

struct ModePartitions {
  Partition full;
  Partition market;
  std::optional<Partition> sector;  ///< absent when no sector mode exists
};

struct StrategyResult {
  StrategyId strategy = StrategyId::P_MKT;
  Weighting weighting = Weighting::uniform;
  WeightVector weights;
  std::vector<double> sharpe;  ///< holding periods 1..max_hold
  /// Sample variance of the daily portfolio returns over the holding range.
  double oos_variance = 0.0;
};

struct BacktestReport {
  std::size_t window_id = 0;
  std::vector<StrategyResult> results;
  /// Strategies left out because their partition was absent.
  std::vector<StrategyId> skipped;
  std::vector<std::string> warnings;
};

BacktestReport run_strategies(const ReturnPanel& insample, const ReturnPanel& outsample,
                              const ModePartitions& partitions, const PortfolioConfig& config,
                              std::size_t window_id = 0);

/// CSV with columns window,strategy,weighting,holding_period,sharpe.
std::string backtest_reports_to_csv(const std::vector<BacktestReport>& reports);

}  // namespace specnet
