#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "specnet/io.hpp"

namespace specnet {

/// Column names of the long-format price CSV (one row per date and ticker).
struct IngestSchema {
  std::string date_col = "date";
  std::string ticker_col = "ticker";
  std::string close_col = "close";
  /// A pair of consecutive calendar entries further apart than this is a
  /// non-successive trading-day gap.
  int max_gap_days = 4;
};

/// Closing prices, stocks by dates. Absent cells hold NaN.
struct PricePanel {
  std::vector<std::string> tickers;
  std::vector<Date> dates;
  Eigen::MatrixXd prices;
  /// gap_mask[t] is set when dates[t-1] -> dates[t] is not a successive
  /// trading-day step. gap_mask[0] is always false.
  std::vector<bool> gap_mask;

  std::size_t num_stocks() const { return tickers.size(); }
  std::size_t num_dates() const { return dates.size(); }
  bool present(std::size_t i, std::size_t t) const;
  double coverage(std::size_t i) const;
};

/// Daily log returns, stocks by return dates. dates[t] is the later day of the pair.
struct ReturnPanel {
  std::vector<std::string> tickers;
  std::vector<Date> dates;
  Eigen::MatrixXd returns;

  std::size_t num_stocks() const { return tickers.size(); }
  std::size_t num_samples() const { return static_cast<std::size_t>(returns.cols()); }

  /// Columns [start, start + length).
  ReturnPanel slice(std::size_t start, std::size_t length) const;
  /// Row index of `ticker`, or -1.
  long index_of(std::string_view ticker) const;
};

PricePanel ingest_prices(std::istream& in, const IngestSchema& schema = {});
PricePanel ingest_prices_csv(std::string_view text, const IngestSchema& schema = {});

/// Keeps tickers whose fraction of present cells is at least min_coverage.
PricePanel filter_complete_stocks(const PricePanel& panel, double min_coverage = 1.0);

/// r(t) = ln p(t+1) - ln p(t), dropping pairs that straddle a flagged gap.
ReturnPanel compute_log_returns(const PricePanel& panel);

constexpr int kReturnsSchemaVersion = 1;

std::string returns_to_csv(const ReturnPanel& panel);
ReturnPanel returns_from_csv(std::string_view text);
nlohmann::json returns_to_json(const ReturnPanel& panel);
ReturnPanel returns_from_json(const nlohmann::json& j);

}  // namespace specnet
