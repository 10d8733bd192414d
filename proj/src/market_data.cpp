#include "specnet/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

#include "specnet/error.hpp"

namespace specnet {

namespace {

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw ParseError("missing column '" + name + "' in header");
  return static_cast<std::size_t>(it - header.begin());
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

bool PricePanel::present(std::size_t i, std::size_t t) const {
  return !std::isnan(prices(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)));
}

double PricePanel::coverage(std::size_t i) const {
  if (dates.empty()) return 0.0;
  std::size_t n = 0;
  for (std::size_t t = 0; t < dates.size(); ++t) n += present(i, t);
  return static_cast<double>(n) / static_cast<double>(dates.size());
}

ReturnPanel ReturnPanel::slice(std::size_t start, std::size_t length) const {
  if (start + length > num_samples()) throw ValidationError("slice exceeds return panel length");
  ReturnPanel out;
  out.tickers = tickers;
  out.dates.assign(dates.begin() + static_cast<long>(start),
                   dates.begin() + static_cast<long>(start + length));
  out.returns = returns.middleCols(static_cast<Eigen::Index>(start),
                                   static_cast<Eigen::Index>(length));
  return out;
}

long ReturnPanel::index_of(std::string_view ticker) const {
  auto it = std::find(tickers.begin(), tickers.end(), ticker);
  return it == tickers.end() ? -1 : static_cast<long>(it - tickers.begin());
}

PricePanel ingest_prices(std::istream& in, const IngestSchema& schema) {
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!is_blank(line)) break;
  }
  if (row == 0 || is_blank(line)) throw ParseError("empty price stream");
  const auto header = split_csv_line(line);
  const std::size_t dcol = column_index(header, schema.date_col);
  const std::size_t tcol = column_index(header, schema.ticker_col);
  const std::size_t ccol = column_index(header, schema.close_col);
  const std::size_t need = std::max({dcol, tcol, ccol}) + 1;

  std::map<std::pair<Date, std::string>, double> cells;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank(line)) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < need)
      throw ParseError("row " + std::to_string(row) + ": expected at least " +
                       std::to_string(need) + " fields");
    Date date;
    double close;
    try {
      date = parse_iso_date(fields[dcol]);
      close = parse_double(fields[ccol]);
    } catch (const ParseError& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what());
    }
    const std::string& ticker = fields[tcol];
    if (ticker.empty()) throw ParseError("row " + std::to_string(row) + ": empty ticker");
    if (!(close > 0.0) || !std::isfinite(close))
      throw ValidationError("row " + std::to_string(row) + ": non-positive close for " + ticker);
    if (!cells.emplace(std::make_pair(date, ticker), close).second)
      throw ValidationError("row " + std::to_string(row) + ": duplicate entry for " + ticker +
                            " on " + format_iso_date(date));
  }

  PricePanel panel;
  std::map<std::string, std::size_t> tick_idx;
  std::map<Date, std::size_t> date_idx;
  for (const auto& [key, _] : cells) {
    date_idx.emplace(key.first, 0);
    tick_idx.emplace(key.second, 0);
  }
  for (auto& [d, idx] : date_idx) {
    idx = panel.dates.size();
    panel.dates.push_back(d);
  }
  for (auto& [t, idx] : tick_idx) {
    idx = panel.tickers.size();
    panel.tickers.push_back(t);
  }
  panel.prices = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(panel.tickers.size()),
                                           static_cast<Eigen::Index>(panel.dates.size()),
                                           std::nan(""));
  for (const auto& [key, close] : cells)
    panel.prices(static_cast<Eigen::Index>(tick_idx[key.second]),
                 static_cast<Eigen::Index>(date_idx[key.first])) = close;
  panel.gap_mask.assign(panel.dates.size(), false);
  for (std::size_t t = 1; t < panel.dates.size(); ++t)
    panel.gap_mask[t] = days_between(panel.dates[t - 1], panel.dates[t]) > schema.max_gap_days;
  return panel;
}

PricePanel ingest_prices_csv(std::string_view text, const IngestSchema& schema) {
  std::istringstream in{std::string(text)};
  return ingest_prices(in, schema);
}

PricePanel filter_complete_stocks(const PricePanel& panel, double min_coverage) {
  if (!(min_coverage > 0.0 && min_coverage <= 1.0))
    throw ValidationError("min_coverage must lie in (0, 1]");
  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < panel.num_stocks(); ++i)
    if (panel.coverage(i) >= min_coverage) keep.push_back(static_cast<Eigen::Index>(i));
  if (keep.empty()) throw ValidationError("no complete stocks");
  PricePanel out;
  out.dates = panel.dates;
  out.gap_mask = panel.gap_mask;
  out.prices.resize(static_cast<Eigen::Index>(keep.size()), panel.prices.cols());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    out.tickers.push_back(panel.tickers[static_cast<std::size_t>(keep[r])]);
    out.prices.row(static_cast<Eigen::Index>(r)) = panel.prices.row(keep[r]);
  }
  return out;
}

ReturnPanel compute_log_returns(const PricePanel& panel) {
  const std::size_t n = panel.num_stocks();
  const std::size_t t_total = panel.num_dates();
  if (t_total < 2) throw ValidationError("at least two dates are required for returns");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < t_total; ++t) {
      const double p = panel.prices(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t));
      if (std::isnan(p))
        throw ValidationError("absent price for " + panel.tickers[i] + " on " +
                              format_iso_date(panel.dates[t]));
      if (!(p > 0.0)) throw ValidationError("non-positive price for " + panel.tickers[i]);
    }
  std::vector<std::size_t> cols;
  for (std::size_t t = 0; t + 1 < t_total; ++t)
    if (panel.gap_mask.empty() || !panel.gap_mask[t + 1]) cols.push_back(t);

  ReturnPanel out;
  out.tickers = panel.tickers;
  out.returns.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto t = static_cast<Eigen::Index>(cols[c]);
    out.dates.push_back(panel.dates[cols[c] + 1]);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i)
      out.returns(i, static_cast<Eigen::Index>(c)) =
          std::log(panel.prices(i, t + 1)) - std::log(panel.prices(i, t));
  }
  return out;
}

std::string returns_to_csv(const ReturnPanel& panel) {
  std::string out = "ticker";
  for (const auto& d : panel.dates) out += "," + format_iso_date(d);
  out += "\n";
  for (std::size_t i = 0; i < panel.num_stocks(); ++i) {
    out += csv_field(panel.tickers[i]);
    for (Eigen::Index t = 0; t < panel.returns.cols(); ++t)
      out += "," + format_double(panel.returns(static_cast<Eigen::Index>(i), t));
    out += "\n";
  }
  return out;
}

ReturnPanel returns_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty returns file");
  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "ticker")
    throw ParseError("returns CSV must start with a 'ticker' column");
  ReturnPanel panel;
  for (std::size_t c = 1; c < header.size(); ++c) panel.dates.push_back(parse_iso_date(header[c]));
  std::vector<std::vector<double>> rows;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank(line)) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError("row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    panel.tickers.push_back(fields[0]);
    std::vector<double> vals;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      try {
        vals.push_back(parse_double(fields[c]));
      } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(row) + ": " + e.what());
      }
      if (!std::isfinite(vals.back()))
        throw ValidationError("row " + std::to_string(row) + ": missing return value");
    }
    rows.push_back(std::move(vals));
  }
  panel.returns.resize(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(panel.dates.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t t = 0; t < rows[i].size(); ++t)
      panel.returns(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) = rows[i][t];
  return panel;
}

nlohmann::json returns_to_json(const ReturnPanel& panel) {
  nlohmann::json j;
  j["schema_version"] = kReturnsSchemaVersion;
  j["tickers"] = panel.tickers;
  auto& dates = j["dates"] = nlohmann::json::array();
  for (const auto& d : panel.dates) dates.push_back(format_iso_date(d));
  auto& rets = j["returns"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < panel.returns.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(panel.returns.cols()));
    for (Eigen::Index t = 0; t < panel.returns.cols(); ++t)
      row[static_cast<std::size_t>(t)] = panel.returns(i, t);
    rets.push_back(row);
  }
  return j;
}

ReturnPanel returns_from_json(const nlohmann::json& j) {
  if (j.value("schema_version", -1) != kReturnsSchemaVersion)
    throw ParseError("unsupported returns schema_version");
  ReturnPanel panel;
  panel.tickers = j.at("tickers").get<std::vector<std::string>>();
  for (const auto& d : j.at("dates")) panel.dates.push_back(parse_iso_date(d.get<std::string>()));
  const auto& rets = j.at("returns");
  if (rets.size() != panel.tickers.size()) throw ParseError("returns rows do not match tickers");
  panel.returns.resize(static_cast<Eigen::Index>(panel.tickers.size()),
                       static_cast<Eigen::Index>(panel.dates.size()));
  for (std::size_t i = 0; i < rets.size(); ++i) {
    if (rets[i].size() != panel.dates.size()) throw ParseError("returns row length mismatch");
    for (std::size_t t = 0; t < rets[i].size(); ++t)
      panel.returns(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) =
          rets[i][t].get<double>();
  }
  return panel;
}

}  // namespace specnet
