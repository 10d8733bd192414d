#pragma once

#include <cstdint>
#include <string>

#include "specnet/market_data.hpp"
#include "specnet/network.hpp"

namespace specnet {

/// One global factor plus disjoint sector factors plus idiosyncratic noise:
///   r_i(t) = mu_i + vol * (b_i f(t) + g_i f_{s(i)}(t) + e_i(t))
/// with loadings b_i, g_i drawn uniformly from the given ranges.
struct SyntheticMarketSpec {
  int n = 60;
  int t = 500;
  int sectors = 4;
  double market_loading_min = 0.4;
  double market_loading_max = 0.8;
  double sector_loading_min = 0.5;
  double sector_loading_max = 0.9;
  double daily_vol = 0.01;
  /// Per-stock drift is drawn uniformly from [-drift_spread, drift_spread].
  double drift_spread = 0.0005;
  std::uint64_t seed = 1;
};

/// Stocks are grouped into contiguous sector blocks; tickers are "S<sector>_<index>".
ReturnPanel synthetic_market(const SyntheticMarketSpec& spec);
/// Sector of stock i under synthetic_market's layout.
int synthetic_sector(const SyntheticMarketSpec& spec, int i);

/// I.i.d. standard normal returns.
ReturnPanel gaussian_panel(int n, int t, std::uint64_t seed);

/// Long-format price CSV (date,ticker,close) built by compounding a synthetic
/// market from price 100 over a weekday calendar starting 2010-01-04.
std::string synthetic_prices_csv(const SyntheticMarketSpec& spec);

/// Unit-weight ideal core-periphery graph (core clique of k nodes joined to
/// every periphery node) plus each periphery-periphery pair independently
/// with probability noise.
WeightedNetwork planted_core_periphery(int n, int k, double noise, std::uint64_t seed);

}  // namespace specnet
