#include <doctest.h>

#include <cmath>

#include "specnet/error.hpp"
#include "specnet/market_data.hpp"
#include "support.hpp"

using namespace specnet;

namespace {

std::string join_rows(const std::vector<std::string>& rows) {
  std::string s = "date,ticker,close\n";
  for (const auto& r : rows) s += r + "\n";
  return s;
}

}  // namespace

TEST_CASE("ingest transcribes a single ticker") {
  const auto p = ingest_prices_csv(join_rows({"2010-01-04,A,100.0", "2010-01-05,A,101.0"}));
  REQUIRE(p.num_stocks() == 1);
  REQUIRE(p.num_dates() == 2);
  CHECK(p.prices(0, 0) == 100.0);
  CHECK(p.prices(0, 1) == 101.0);
}

TEST_CASE("ingest rejects non-positive closes and reports malformed rows") {
  CHECK_THROWS_AS(ingest_prices_csv(join_rows({"2010-01-04,A,-5.0"})), ValidationError);
  CHECK_THROWS_AS(ingest_prices_csv(join_rows({"2010-01-04,A,0"})), ValidationError);
  try {
    ingest_prices_csv(join_rows({"2010-01-04,A,1.0", "2010-13-01,A,2.0"}));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
  CHECK_THROWS_AS(ingest_prices_csv(join_rows({"2010-01-04,A,1.0", "2010-01-04,A,2.0"})), ValidationError);
  CHECK_THROWS_AS(ingest_prices_csv("day,ticker,close\n2010-01-04,A,1\n"), ParseError);
}

TEST_CASE("ingest honours a custom schema") {
  IngestSchema s;
  s.date_col = "Date";
  s.ticker_col = "Sym";
  s.close_col = "Px";
  const auto p = ingest_prices_csv("Px,Sym,Date\n5,X,2011-03-01\n6,X,2011-03-02\n", s);
  CHECK(p.tickers == std::vector<std::string>{"X"});
  CHECK(p.prices(0, 1) == 6.0);
}

TEST_CASE("absent cells are marked and filtered by coverage") {
  const std::string csv = join_rows({"2010-01-04,A,1", "2010-01-05,A,2", "2010-01-06,A,3",
                                     "2010-01-04,B,1", "2010-01-06,B,2"});
  const auto p = ingest_prices_csv(csv);
  REQUIRE(p.num_stocks() == 2);
  REQUIRE(p.num_dates() == 3);
  int absent = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t t = 0; t < 3; ++t) absent += !p.present(i, t);
  CHECK(absent == 1);
  CHECK_FALSE(p.present(1, 1));

  const std::string half = join_rows({"2010-01-04,A,1", "2010-01-05,A,2", "2010-01-04,B,1"});
  const auto hp = ingest_prices_csv(half);
  CHECK(filter_complete_stocks(hp, 1.0).tickers == std::vector<std::string>{"A"});
  CHECK(filter_complete_stocks(hp, 0.4).num_stocks() == 2);
  CHECK_THROWS_AS(filter_complete_stocks(hp, 0.0), ValidationError);
  const auto none = ingest_prices_csv(join_rows({"2010-01-04,A,1", "2010-01-05,B,1"}));
  CHECK_THROWS_WITH_AS(filter_complete_stocks(none, 1.0), "no complete stocks", ValidationError);
}

TEST_CASE("log returns follow the logarithm identity") {
  const auto p = ingest_prices_csv(
      join_rows({"2010-01-04,A,100", "2010-01-05,A," + format_double(100.0 * std::exp(0.01))}));
  const auto r = compute_log_returns(p);
  REQUIRE(r.num_samples() == 1);
  CHECK(r.returns(0, 0) == doctest::Approx(0.01).epsilon(1e-14));

  const auto flat = compute_log_returns(
      ingest_prices_csv(join_rows({"2010-01-04,A,50", "2010-01-05,A,50", "2010-01-06,A,50"})));
  CHECK(flat.returns(0, 0) == 0.0);
  CHECK(flat.returns(0, 1) == 0.0);

  CHECK_THROWS_AS(compute_log_returns(ingest_prices_csv(join_rows({"2010-01-04,A,50"}))), ValidationError);
}

TEST_CASE("pairs spanning a calendar gap are dropped") {
  // dates 2 and 3 are 8 days apart
  const auto p = ingest_prices_csv(join_rows(
      {"2010-01-04,A,1", "2010-01-05,A,2", "2010-01-13,A,3", "2010-01-14,A,4"}));
  CHECK(p.gap_mask == std::vector<bool>{false, false, true, false});
  const auto r = compute_log_returns(p);
  REQUIRE(r.num_samples() == 2);
  CHECK(r.returns(0, 0) == doctest::Approx(std::log(2.0)));
  CHECK(r.returns(0, 1) == doctest::Approx(std::log(4.0 / 3.0)));
  CHECK(format_iso_date(r.dates[1]) == "2010-01-14");
}

TEST_CASE("property: returns rebuild prices and lose one column per gap") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    testkit::Gen g(seed);
    const int t = 5 + g.below(30);
    std::chrono::sys_days day{std::chrono::year{2015} / 6 / 1};
    std::vector<std::string> rows;
    std::vector<double> px;
    double price = 10.0 + 90.0 * g.unit();
    int gaps = 0;
    for (int k = 0; k < t; ++k) {
      const bool gap = k > 0 && g.unit() < 0.15;
      gaps += gap;
      day += std::chrono::days{gap ? 7 + g.below(5) : 1 + g.below(4)};
      price *= std::exp(0.02 * g.normal());
      px.push_back(price);
      rows.push_back(format_iso_date(Date{day}) + ",Z," + format_double(price));
    }
    // shuffled input gives the same panel
    std::vector<std::string> shuffled = rows;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[static_cast<std::size_t>(g.below(static_cast<int>(i)))]);
    const auto p = ingest_prices_csv(join_rows(rows));
    const auto q = ingest_prices_csv(join_rows(shuffled));
    CHECK(p.prices == q.prices);
    CHECK(p.dates == q.dates);

    const auto r = compute_log_returns(p);
    CHECK(r.num_samples() == static_cast<std::size_t>(t - 1 - gaps));
    // rebuild every gap-free run of prices from its first price
    std::size_t col = 0;
    double logp = std::log(px[0]);
    for (int k = 1; k < t; ++k) {
      if (p.gap_mask[static_cast<std::size_t>(k)]) {
        logp = std::log(px[static_cast<std::size_t>(k)]);
        continue;
      }
      logp += r.returns(0, static_cast<long>(col++));
      CHECK(std::abs(std::exp(logp) / px[static_cast<std::size_t>(k)] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("return panels round-trip through csv and json") {
  auto r = testkit::panel_of({{0.1, -0.2, 1.0 / 3.0}, {0.0, 5e-7, -1e-3}});
  const auto a = returns_from_csv(returns_to_csv(r));
  CHECK(a.tickers == r.tickers);
  CHECK(a.dates == r.dates);
  CHECK(a.returns == r.returns);
  const auto j = returns_to_json(r);
  CHECK(j.at("schema_version") == kReturnsSchemaVersion);
  const auto b = returns_from_json(j);
  CHECK(b.returns == r.returns);
  auto bad = j;
  bad["schema_version"] = 99;
  CHECK_THROWS(returns_from_json(bad));
  CHECK(r.slice(1, 2).returns(1, 1) == -1e-3);
  CHECK_THROWS_AS(r.slice(2, 2), ValidationError);
  CHECK(r.index_of("B") == 1);
  CHECK(r.index_of("Q") == -1);
}
