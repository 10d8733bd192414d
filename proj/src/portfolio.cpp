#include "specnet/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specnet/error.hpp"
#include "specnet/io.hpp"
#include "specnet/rng.hpp"

namespace specnet {

namespace {

constexpr const char* kStrategyNames[] = {"P_f_max",   "P_f_rand",  "P_mar_max", "P_mar_ran",
                                          "P_sec_max", "P_sec_ran", "P_MKT"};

std::vector<double> row_of(const ReturnPanel& p, long i) {
  std::vector<double> out(p.num_samples());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = p.returns(i, static_cast<long>(t));
  return out;
}

long require_row(const ReturnPanel& p, const std::string& ticker, const char* what) {
  const long i = p.index_of(ticker);
  if (i < 0) throw ValidationError(std::string("ticker ") + ticker + " missing from " + what);
  return i;
}

double sample_variance(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(x.size() - 1);
}

}  // namespace

std::string to_string(StrategyId s) { return kStrategyNames[static_cast<int>(s)]; }

StrategyId strategy_from_string(const std::string& s) {
  for (int i = 0; i < 7; ++i)
    if (s == kStrategyNames[i]) return static_cast<StrategyId>(i);
  throw ValidationError("unknown strategy: " + s);
}

std::vector<StrategyId> all_strategies() {
  std::vector<StrategyId> out;
  for (int i = 0; i < 7; ++i) out.push_back(static_cast<StrategyId>(i));
  return out;
}

std::string to_string(Weighting w) { return w == Weighting::uniform ? "uniform" : "markowitz"; }

Weighting weighting_from_string(const std::string& s) {
  if (s == "uniform") return Weighting::uniform;
  if (s == "markowitz") return Weighting::markowitz;
  throw ValidationError("unknown weighting: " + s);
}

double WeightVector::sum() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

double sharpe_ratio(std::span<const double> r, double rf, double factor) {
  if (r.size() < 2) throw ValidationError("Sharpe ratio needs at least two returns");
  if (!(factor > 0.0)) throw ValidationError("annualization factor must be positive");
  const double mean = std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(r.size());
  const double sd = std::sqrt(sample_variance(r));
  if (!(sd > 0.0)) throw NumericError("degenerate series");
  return std::sqrt(factor) * (mean - rf) / sd;
}

Selection select_stocks(const Partition& partition, const ReturnPanel& insample, Picker picker,
                        std::uint64_t seed, double rf) {
  if (static_cast<std::size_t>(partition.size()) != insample.num_stocks())
    throw ValidationError("partition does not cover the panel's tickers");
  Selection sel;
  Rng rng(seed);
  for (auto members : partition.groups()) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return insample.tickers[static_cast<std::size_t>(a)] < insample.tickers[static_cast<std::size_t>(b)];
    });
    if (picker == Picker::random) {
      sel.tickers.push_back(insample.tickers[static_cast<std::size_t>(members[uniform_index(rng, members.size())])]);
      continue;
    }
    int best = -1;
    double best_s = 0.0;
    for (int m : members) {
      double s;
      try {
        s = sharpe_ratio(row_of(insample, m), rf, 1.0);
      } catch (const NumericError&) {
        continue;
      }
      if (best < 0 || s > best_s) {
        best = m;
        best_s = s;
      }
    }
    if (best < 0) {
      best = members.front();
      sel.warnings.push_back("community of " + insample.tickers[static_cast<std::size_t>(best)] +
                             " has only degenerate series; picked " +
                             insample.tickers[static_cast<std::size_t>(best)]);
    }
    sel.tickers.push_back(insample.tickers[static_cast<std::size_t>(best)]);
  }
  return sel;
}

WeightVector uniform_weights(const std::vector<std::string>& tickers) {
  if (tickers.empty()) throw ValidationError("cannot weight an empty stock set");
  WeightVector w;
  w.tickers = tickers;
  w.weights.assign(tickers.size(), 1.0 / static_cast<double>(tickers.size()));
  return w;
}

Eigen::VectorXd tangency_weights(const Eigen::VectorXd& mu, const Eigen::MatrixXd& cov, double rf,
                                 double ridge, bool long_only) {
  const long k = mu.size();
  if (k < 1 || cov.rows() != k || cov.cols() != k)
    throw ValidationError("mean and covariance dimensions differ");
  if (!(ridge >= 0.0)) throw ValidationError("ridge must be nonnegative");
  const Eigen::MatrixXd reg = cov + ridge * Eigen::MatrixXd::Identity(k, k);
  const Eigen::LLT<Eigen::MatrixXd> llt(reg);
  if (llt.info() != Eigen::Success) throw NumericError("regularized covariance is singular");
  Eigen::VectorXd w = llt.solve(mu - Eigen::VectorXd::Constant(k, rf));
  if (!w.allFinite()) throw NumericError("regularized covariance is singular");
  if (long_only) {
    w = w.cwiseMax(0.0);
    if (!(w.sum() > 0.0)) throw NumericError("all tangency weights are negative under long_only");
  }
  const double s = w.sum();
  if (std::abs(s) < 1e-12) throw NumericError("tangency weights sum to zero");
  return w / s;
}

WeightVector markowitz_weights(const std::vector<std::string>& tickers, const ReturnPanel& insample,
                               const MarkowitzOptions& opt) {
  if (tickers.empty()) throw ValidationError("cannot weight an empty stock set");
  if (tickers.size() == 1) return uniform_weights(tickers);
  const auto k = static_cast<long>(tickers.size());
  const auto t = static_cast<long>(insample.num_samples());
  if (t < 2) throw ValidationError("in-sample panel needs at least two returns");
  Eigen::MatrixXd x(k, t);
  for (long a = 0; a < k; ++a)
    x.row(a) = insample.returns.row(require_row(insample, tickers[static_cast<std::size_t>(a)], "in-sample panel"));
  const Eigen::VectorXd mu = x.rowwise().mean();
  const Eigen::MatrixXd centered = x.colwise() - mu;
  const Eigen::MatrixXd cov = centered * centered.transpose() / static_cast<double>(t - 1);
  const double ridge = opt.ridge ? *opt.ridge : 1e-4 * cov.diagonal().mean();
  const Eigen::VectorXd w = tangency_weights(mu, cov, opt.rf, ridge, opt.long_only);
  WeightVector out;
  out.tickers = tickers;
  out.weights.assign(w.data(), w.data() + k);
  return out;
}

std::vector<double> portfolio_returns(const WeightVector& w, const ReturnPanel& outsample,
                                      std::size_t days) {
  if (w.tickers.size() != w.weights.size() || w.tickers.empty())
    throw ValidationError("malformed weight vector");
  if (days > outsample.num_samples())
    throw ValidationError("holding period " + std::to_string(days) + " exceeds the " +
                          std::to_string(outsample.num_samples()) + " out-of-sample days");
  std::vector<long> rows;
  for (const auto& tk : w.tickers) rows.push_back(require_row(outsample, tk, "out-of-sample panel"));
  std::vector<double> value(w.weights);
  double total = w.sum();
  std::vector<double> out(days);
  for (std::size_t d = 0; d < days; ++d) {
    if (!(total > 0.0)) throw NumericError("portfolio value is not positive");
    double next = 0.0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      value[a] *= std::exp(outsample.returns(rows[a], static_cast<long>(d)));
      next += value[a];
    }
    out[d] = next / total - 1.0;
    total = next;
  }
  return out;
}

std::vector<double> backtest(const WeightVector& w, const ReturnPanel& outsample,
                             std::size_t max_hold, double rf, double factor) {
  if (max_hold < 1) throw ValidationError("max_hold must be at least 1");
  const auto r = portfolio_returns(w, outsample, max_hold);
  std::vector<double> curve(max_hold);
  curve[0] = r[0] - rf;
  for (std::size_t h = 2; h <= max_hold; ++h)
    curve[h - 1] = sharpe_ratio(std::span<const double>(r.data(), h), rf, factor);
  return curve;
}

BacktestReport run_strategies(const ReturnPanel& insample, const ReturnPanel& outsample,
                              const ModePartitions& parts, const PortfolioConfig& cfg,
                              std::size_t window_id) {
  BacktestReport rep;
  rep.window_id = window_id;
  for (StrategyId s : cfg.strategies) {
    const Partition* p = nullptr;
    Picker picker = Picker::max_sharpe;
    switch (s) {
      case StrategyId::P_f_rand: picker = Picker::random; [[fallthrough]];
      case StrategyId::P_f_max: p = &parts.full; break;
      case StrategyId::P_mar_ran: picker = Picker::random; [[fallthrough]];
      case StrategyId::P_mar_max: p = &parts.market; break;
      case StrategyId::P_sec_ran: picker = Picker::random; [[fallthrough]];
      case StrategyId::P_sec_max: p = parts.sector ? &*parts.sector : nullptr; break;
      case StrategyId::P_MKT: break;
    }
    std::vector<std::string> stocks;
    if (s == StrategyId::P_MKT) {
      stocks = insample.tickers;
    } else if (!p) {
      rep.skipped.push_back(s);
      continue;
    } else {
      const auto sel = select_stocks(*p, insample, picker,
                                     derive_seed(cfg.seed, window_id, static_cast<std::uint64_t>(s)), cfg.rf);
      stocks = sel.tickers;
      for (const auto& msg : sel.warnings) rep.warnings.push_back(to_string(s) + ": " + msg);
    }
    for (Weighting wt : cfg.weightings) {
      StrategyResult res;
      res.strategy = s;
      res.weighting = wt;
      try {
        res.weights = wt == Weighting::uniform
                          ? uniform_weights(stocks)
                          : markowitz_weights(stocks, insample, {cfg.rf, cfg.ridge, cfg.long_only});
        const auto daily = portfolio_returns(res.weights, outsample, cfg.max_hold);
        res.sharpe = backtest(res.weights, outsample, cfg.max_hold, cfg.rf, cfg.annualization_factor);
        res.oos_variance = sample_variance(daily);
      } catch (const NumericError& e) {
        rep.warnings.push_back(to_string(s) + "/" + to_string(wt) + " dropped: " + e.what());
        continue;
      }
      rep.results.push_back(std::move(res));
    }
  }
  return rep;
}

std::string backtest_reports_to_csv(const std::vector<BacktestReport>& reports) {
  std::string out = "window,strategy,weighting,holding_period,sharpe\n";
  for (const auto& rep : reports)
    for (const auto& r : rep.results)
      for (std::size_t h = 0; h < r.sharpe.size(); ++h)
        out += std::to_string(rep.window_id) + "," + to_string(r.strategy) + "," +
               to_string(r.weighting) + "," + std::to_string(h + 1) + "," +
               format_double(r.sharpe[h]) + "\n";
  return out;
}

}  // namespace specnet
