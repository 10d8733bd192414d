#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specnet/network.hpp"

namespace specnet {

/// Community assignment. Labels are canonical: 0..n_c-1 numbered in order of
/// first appearance. Exported files use 1-based community ids.
class Partition {
 public:
  Partition() = default;
  /// Canonicalises arbitrary integer labels.
  explicit Partition(const std::vector<int>& raw_labels);
  static Partition singletons(int n);
  static Partition whole(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_communities() const { return num_communities_; }
  int operator[](int node) const { return labels_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<std::vector<int>> groups() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> labels_;
  int num_communities_ = 0;
};

struct ModularityScore {
  double q = 0.0;
  bool weighted = false;  ///< some edge weight differs from 1
};

/// Q = 1/(2M) sum_ij (w_ij - resolution * s_i s_j / (2M)) delta(c_i, c_j).
ModularityScore modularity(const WeightedNetwork& net, const Partition& p, double resolution = 1.0);

struct LouvainMove {
  int level = 0;
  int node = 0;  ///< node of the level graph
  double delta_q = 0.0;
  /// Node-level partition right after the move (only filled for observers).
  const std::vector<int>* flat_labels = nullptr;
};

struct LouvainOptions {
  std::uint64_t seed = 0;
  double resolution = 1.0;
  /// Called after every accepted local move; for auditing.
  std::function<void(const LouvainMove&)> observer;
};

struct LouvainResult {
  Partition partition;
  double q = 0.0;
  int levels = 0;
};

/// Local moving in a seeded random node order (reshuffled each sweep) followed
/// by aggregation into a weighted graph with self-loops, repeated until no
/// move improves modularity.
LouvainResult louvain(const WeightedNetwork& net, const LouvainOptions& options = {});

/// Asynchronous weighted label propagation followed by splitting every label
/// class into its connected pieces.
Partition label_propagation(const WeightedNetwork& net, std::uint64_t seed, int max_sweeps = 1000);

/// Relabels each community's connected components (within the community's
/// induced subgraph) as separate communities.
Partition split_disconnected_labels(const WeightedNetwork& net, const Partition& p);

enum class DistanceMode { hops, inverse_weight };

/// Brandes accumulation over unordered node pairs; entry k belongs to net.edges()[k].
std::vector<double> edge_betweenness(const WeightedNetwork& net,
                                     DistanceMode mode = DistanceMode::hops);

struct RemovedEdge {
  int u = 0;
  int v = 0;
  double betweenness = 0.0;
  int components_after = 0;
};

struct GirvanNewmanResult {
  Partition partition;  ///< best-modularity cut along the removal sequence
  double q = 0.0;
  std::vector<RemovedEdge> removals;
  /// Nested lists of node labels; every split becomes a two-element list.
  nlohmann::json dendrogram;
};

GirvanNewmanResult girvan_newman(const WeightedNetwork& net,
                                 DistanceMode mode = DistanceMode::hops);

/// 2 I(p1; p2) / (H(p1) + H(p2)) with natural logarithms.
double nmi(const Partition& p1, const Partition& p2);

}  // namespace specnet
