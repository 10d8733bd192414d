#pragma once

#include <span>
#include <utility>
#include <vector>

namespace specnet {

using NodePair = std::pair<int, int>;

/// Outcome of a planarity test with its certificate: a combinatorial
/// embedding (cyclic neighbour order around each node) when planar, or the
/// edges of a Kuratowski subgraph (a subdivision of K5 or K3,3) when not.
struct PlanarityResult {
  bool planar = false;
  std::vector<std::vector<int>> rotation;
  std::vector<NodePair> kuratowski;
};

/// Linear-time Boyer-Myrvold test on a simple graph with nodes 0..n-1.
PlanarityResult is_planar(int n, std::span<const NodePair> edges);

/// Same test without materialising a certificate.
bool planar(int n, std::span<const NodePair> edges);

}  // namespace specnet
