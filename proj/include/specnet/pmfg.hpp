#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "specnet/network.hpp"
#include "specnet/planarity.hpp"

namespace specnet {

/// Off-diagonal pairs (i < j) sorted by similarity descending, ties by (i, j).
std::vector<NodePair> pmfg_candidate_order(const Eigen::MatrixXd& similarity);

/// Planar Maximally Filtered Graph: scan pairs in candidate order and keep each
/// one whose insertion leaves the graph planar, until 3(N-2) edges are placed.
/// Stored weights are transform(similarity); edges are kept in insertion order.
WeightedNetwork pmfg(const Eigen::MatrixXd& similarity, std::vector<std::string> labels = {},
                     WeightTransform transform = WeightTransform::absolute);

}  // namespace specnet
