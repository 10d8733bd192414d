#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace specnet {

/// How a similarity becomes a stored edge weight.
enum class WeightTransform {
  signed_value,  ///< w = s
  absolute,      ///< w = |s|
  shifted        ///< w = (1 + s) / 2, maps correlations onto [0, 1]
};

std::string to_string(WeightTransform t);
WeightTransform weight_transform_from_string(const std::string& s);
double apply_transform(WeightTransform t, double s);

struct Edge {
  int u = 0;  ///< u < v
  int v = 0;
  double weight = 0.0;
};

/// Undirected simple weighted graph. Immutable after construction.
class WeightedNetwork {
 public:
  WeightedNetwork() = default;
  /// Validates simplicity (no self-loops, no duplicate pairs) and orders each
  /// edge so u < v; edges are kept in the order given.
  WeightedNetwork(std::vector<std::string> labels, std::vector<Edge> edges,
                  WeightTransform transform = WeightTransform::signed_value);
  /// Unlabelled network with nodes named "0".."n-1".
  static WeightedNetwork from_edges(int n, std::vector<Edge> edges,
                                    WeightTransform transform = WeightTransform::signed_value);
  /// Edges for every nonzero off-diagonal entry of a symmetric matrix.
  static WeightedNetwork from_adjacency(const Eigen::MatrixXd& a,
                                        std::vector<std::string> labels = {});

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  WeightTransform transform() const { return transform_; }

  struct Neighbor {
    int node;
    double weight;
    std::size_t edge;  ///< index into edges()
  };
  const std::vector<Neighbor>& neighbors(int u) const {
    return adj_[static_cast<std::size_t>(u)];
  }
  std::size_t degree(int u) const { return neighbors(u).size(); }
  /// Sum of incident edge weights.
  double strength(int u) const;
  std::vector<double> strengths() const;
  double total_weight() const;
  bool has_negative_weight() const;
  /// Weight of (u, v), or 0 when absent.
  double weight(int u, int v) const;
  bool has_edge(int u, int v) const;

  Eigen::MatrixXd adjacency() const;
  /// Component index per node, numbered in order of lowest member.
  std::vector<int> components() const;
  bool is_connected() const;

  /// Same topology with every weight replaced by f(weight).
  template <class F>
  WeightedNetwork map_weights(F f, WeightTransform transform) const {
    std::vector<Edge> e = edges_;
    for (auto& x : e) x.weight = f(x.weight);
    return WeightedNetwork(labels_, std::move(e), transform);
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  WeightTransform transform_ = WeightTransform::signed_value;
};

/// Edge list CSV with header source,target,weight (node labels).
std::string network_to_csv(const WeightedNetwork& net);
/// Reads an edge list; node labels come from `labels` when given (others are
/// rejected), otherwise from first appearance.
WeightedNetwork network_from_csv(std::string_view text, std::vector<std::string> labels = {});
nlohmann::json network_to_json(const WeightedNetwork& net);
WeightedNetwork network_from_json(const nlohmann::json& j);

}  // namespace specnet
