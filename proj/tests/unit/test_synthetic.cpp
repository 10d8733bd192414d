#include <doctest.h>

#include "specnet/error.hpp"
#include "specnet/market_data.hpp"
#include "specnet/spectral.hpp"
#include "specnet/synthetic.hpp"

using namespace specnet;

TEST_CASE("synthetic market layout and determinism") {
  SyntheticMarketSpec s;
  s.n = 12;
  s.t = 300;
  s.sectors = 3;
  const auto a = synthetic_market(s);
  CHECK(a.num_stocks() == 12);
  CHECK(a.num_samples() == 300);
  CHECK(a.tickers[0] == "S0_000");
  CHECK(a.tickers[11] == "S2_011");
  CHECK(synthetic_sector(s, 4) == 1);
  CHECK(a.returns == synthetic_market(s).returns);
  const auto c = correlation_matrix(a).values;
  // same-sector pairs correlate more than cross-sector pairs
  CHECK(c(0, 1) > c(0, 11));
  s.sectors = 13;
  CHECK_THROWS_AS(synthetic_market(s), ValidationError);
}

TEST_CASE("synthetic prices ingest back to the same returns") {
  SyntheticMarketSpec s;
  s.n = 4;
  s.t = 30;
  const auto r = compute_log_returns(ingest_prices_csv(synthetic_prices_csv(s)));
  const auto direct = synthetic_market(s);
  REQUIRE(r.num_samples() == 30);
  CHECK((r.returns - direct.returns).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(r.dates == direct.dates);
}

TEST_CASE("planted core-periphery graph") {
  const auto net = planted_core_periphery(10, 3, 0.0, 1);
  CHECK(net.num_edges() == 3 + 3 * 7);
  CHECK(planted_core_periphery(10, 3, 1.0, 1).num_edges() == 45);
  CHECK_THROWS_AS(planted_core_periphery(5, 5, 0.1, 1), ValidationError);
}
