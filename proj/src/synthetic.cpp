#include "specnet/synthetic.hpp"

#include <cmath>
#include <cstdio>

#include "specnet/error.hpp"
#include "specnet/rng.hpp"

namespace specnet {

namespace {

std::vector<Date> weekday_calendar(int count) {
  std::vector<Date> out;
  std::chrono::sys_days day{std::chrono::year{2010} / std::chrono::January / 4};
  while (static_cast<int>(out.size()) < count) {
    const std::chrono::weekday wd{day};
    if (wd != std::chrono::Saturday && wd != std::chrono::Sunday) out.emplace_back(day);
    day += std::chrono::days{1};
  }
  return out;
}

}  // namespace

int synthetic_sector(const SyntheticMarketSpec& spec, int i) {
  return static_cast<int>(static_cast<long>(i) * spec.sectors / spec.n);
}

ReturnPanel synthetic_market(const SyntheticMarketSpec& spec) {
  if (spec.n < 2 || spec.t < 2 || spec.sectors < 1 || spec.sectors > spec.n)
    throw ValidationError("invalid synthetic market dimensions");
  Rng rng(spec.seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * uniform01(rng); };
  std::vector<double> beta(static_cast<std::size_t>(spec.n)), gamma(beta.size()), mu(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    beta[i] = uniform(spec.market_loading_min, spec.market_loading_max);
    gamma[i] = uniform(spec.sector_loading_min, spec.sector_loading_max);
    mu[i] = uniform(-spec.drift_spread, spec.drift_spread);
  }
  ReturnPanel panel;
  for (int i = 0; i < spec.n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "S%d_%03d", synthetic_sector(spec, i), i);
    panel.tickers.emplace_back(buf);
  }
  const auto cal = weekday_calendar(spec.t + 1);
  panel.dates.assign(cal.begin() + 1, cal.end());
  panel.returns.resize(spec.n, spec.t);
  std::vector<double> sector_f(static_cast<std::size_t>(spec.sectors));
  for (int t = 0; t < spec.t; ++t) {
    const double f = standard_normal(rng);
    for (double& s : sector_f) s = standard_normal(rng);
    for (int i = 0; i < spec.n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double e = standard_normal(rng);
      panel.returns(i, t) =
          mu[ui] + spec.daily_vol * (beta[ui] * f +
                                     gamma[ui] * sector_f[static_cast<std::size_t>(synthetic_sector(spec, i))] + e);
    }
  }
  return panel;
}

ReturnPanel gaussian_panel(int n, int t, std::uint64_t seed) {
  Rng rng(seed);
  ReturnPanel panel;
  for (int i = 0; i < n; ++i) panel.tickers.push_back("G" + std::to_string(i));
  const auto cal = weekday_calendar(t + 1);
  panel.dates.assign(cal.begin() + 1, cal.end());
  panel.returns.resize(n, t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < t; ++j) panel.returns(i, j) = standard_normal(rng);
  return panel;
}

std::string synthetic_prices_csv(const SyntheticMarketSpec& spec) {
  const ReturnPanel r = synthetic_market(spec);
  const auto cal = weekday_calendar(spec.t + 1);
  std::string out = "date,ticker,close\n";
  for (int t = 0; t <= spec.t; ++t)
    for (int i = 0; i < spec.n; ++i) {
      double logp = std::log(100.0);
      for (int s = 0; s < t; ++s) logp += r.returns(i, s);
      out += format_iso_date(cal[static_cast<std::size_t>(t)]) + "," +
             r.tickers[static_cast<std::size_t>(i)] + "," + format_double(std::exp(logp)) + "\n";
    }
  return out;
}

WeightedNetwork planted_core_periphery(int n, int k, double noise, std::uint64_t seed) {
  if (k < 1 || k >= n) throw ValidationError("core size must satisfy 1 <= k < n");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i < k || j < k)
        edges.push_back({i, j, 1.0});
      else if (uniform01(rng) < noise)
        edges.push_back({i, j, 1.0});
    }
  return WeightedNetwork::from_edges(n, std::move(edges));
}

}  // namespace specnet
