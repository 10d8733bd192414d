#include <doctest.h>

#include "specnet/error.hpp"
#include "specnet/network.hpp"
#include "support.hpp"

using namespace specnet;

TEST_CASE("weight transforms") {
  CHECK(apply_transform(WeightTransform::signed_value, -0.4) == -0.4);
  CHECK(apply_transform(WeightTransform::absolute, -0.4) == 0.4);
  CHECK(apply_transform(WeightTransform::shifted, -1.0) == 0.0);
  CHECK(apply_transform(WeightTransform::shifted, 1.0) == 1.0);
  for (auto t : {WeightTransform::signed_value, WeightTransform::absolute, WeightTransform::shifted})
    CHECK(weight_transform_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(weight_transform_from_string("log"), ValidationError);
}

TEST_CASE("networks stay simple") {
  CHECK_THROWS_AS(WeightedNetwork::from_edges(3, {{1, 1, 1.0}}), ValidationError);
  CHECK_THROWS_AS(WeightedNetwork::from_edges(3, {{0, 1, 1.0}, {1, 0, 2.0}}), ValidationError);
  CHECK_THROWS_AS(WeightedNetwork::from_edges(3, {{0, 3, 1.0}}), ValidationError);
  const auto net = WeightedNetwork::from_edges(3, {{2, 0, 0.5}});
  CHECK(net.edges()[0].u == 0);
  CHECK(net.edges()[0].v == 2);
  CHECK(net.weight(2, 0) == 0.5);
  CHECK(net.weight(0, 1) == 0.0);
  CHECK_FALSE(net.has_edge(0, 1));
}

TEST_CASE("degrees, strengths and components") {
  const auto net = WeightedNetwork::from_edges(5, {{0, 1, 2.0}, {1, 2, 3.0}, {3, 4, 1.0}});
  CHECK(net.degree(1) == 2);
  CHECK(net.strength(1) == 5.0);
  CHECK(net.total_weight() == 6.0);
  CHECK(net.components() == std::vector<int>{0, 0, 0, 1, 1});
  CHECK_FALSE(net.is_connected());
  CHECK(testkit::complete(4).is_connected());
  const Eigen::MatrixXd a = net.adjacency();
  CHECK(a(2, 1) == 3.0);
  CHECK(a.trace() == 0.0);
  const auto back = WeightedNetwork::from_adjacency(a);
  CHECK(back.num_edges() == 3);
}

TEST_CASE("edge lists round-trip through csv and json") {
  testkit::Gen g(4);
  const auto net = testkit::random_connected(g, 12, 0.3);
  const auto a = network_from_csv(network_to_csv(net), net.labels());
  CHECK(a.adjacency() == net.adjacency());
  const auto b = network_from_json(network_to_json(net));
  CHECK(b.adjacency() == net.adjacency());
  CHECK(b.labels() == net.labels());
  CHECK_THROWS_AS(network_from_csv("a,b\n"), ParseError);
  CHECK_THROWS_AS(network_from_csv("source,target,weight\nx,y,1\n", {"x", "z"}), ValidationError);
}
