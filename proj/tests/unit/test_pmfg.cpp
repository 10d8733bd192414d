#include <doctest.h>

#include <set>

#include "specnet/error.hpp"
#include "specnet/pmfg.hpp"
#include "support.hpp"

using namespace specnet;

namespace {

std::set<std::pair<int, int>> edge_set(const WeightedNetwork& net) {
  std::set<std::pair<int, int>> s;
  for (const auto& e : net.edges()) s.insert({e.u, e.v});
  return s;
}

}  // namespace

TEST_CASE("four nodes give K4") {
  testkit::Gen g(1);
  const auto net = pmfg(testkit::random_symmetric(g, 4));
  CHECK(net.num_edges() == 6);
}

TEST_CASE("five equal similarities give K5 minus the last pair") {
  Eigen::MatrixXd s = Eigen::MatrixXd::Constant(5, 5, 0.3);
  s.diagonal().setOnes();
  const auto net = pmfg(s);
  CHECK(net.num_edges() == 9);
  CHECK_FALSE(net.has_edge(3, 4));
  // brute force: every other edge order is irrelevant, the tie rule scans (i, j) lexicographically
  std::vector<NodePair> all;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) all.emplace_back(i, j);
  all.pop_back();
  CHECK(planar(5, all));
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS(pmfg(Eigen::MatrixXd::Identity(2, 2)), ValidationError);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(4, 4);
  s(0, 1) = 0.5;
  CHECK_THROWS_AS(pmfg(s), ValidationError);
  CHECK_THROWS_AS(pmfg(Eigen::MatrixXd::Identity(4, 3)), ValidationError);
}

TEST_CASE("weights follow the transform and ranking uses signed values") {
  Eigen::MatrixXd s(4, 4);
  s << 1, -0.9, 0.2, 0.1, -0.9, 1, 0.3, 0.4, 0.2, 0.3, 1, 0.5, 0.1, 0.4, 0.5, 1;
  const auto abs_net = pmfg(s, {}, WeightTransform::absolute);
  CHECK(abs_net.weight(0, 1) == 0.9);
  CHECK(abs_net.edges().back().u == 0);  // the -0.9 pair ranks last
  CHECK(abs_net.edges().back().v == 1);
  CHECK(pmfg(s, {}, WeightTransform::signed_value).weight(0, 1) == -0.9);
  CHECK(pmfg(s, {}, WeightTransform::shifted).weight(2, 3) == doctest::Approx(0.75));
}

TEST_CASE("property: size, planarity witnesses, replay and spanning tree") {
  for (int n : {10, 30, 60}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      testkit::Gen g(seed * 100 + static_cast<std::uint64_t>(n));
      const Eigen::MatrixXd s = testkit::random_symmetric(g, n);
      const auto net = pmfg(s);
      CHECK(net.num_edges() == static_cast<std::size_t>(3 * (n - 2)));
      const auto pairs = testkit::pairs_of(net);
      CHECK(testkit::embedding_is_planar(n, pairs, is_planar(n, pairs).rotation));

      const auto kept = edge_set(net);
      for (const auto& e : testkit::max_spanning_tree(s)) CHECK(kept.count(e));

      // replay: each scanned pair was kept iff it preserved planarity
      std::vector<NodePair> acc;
      for (const auto& c : pmfg_candidate_order(s)) {
        if (acc.size() == static_cast<std::size_t>(3 * (n - 2))) break;
        acc.push_back(c);
        const auto r = is_planar(n, acc);
        if (kept.count(c)) {
          REQUIRE(r.planar);
        } else {
          REQUIRE_FALSE(r.planar);
          CHECK(testkit::is_kuratowski_subdivision(r.kuratowski));
          acc.pop_back();
        }
      }
      CHECK(acc.size() == kept.size());

      // strictly increasing relabelling keeps the edge set
      const Eigen::MatrixXd t = s.unaryExpr([](double x) { return std::atan(3.0 * x) + x * x * x; });
      CHECK(edge_set(pmfg(t)) == kept);
    }
  }
}
