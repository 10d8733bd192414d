#include "specnet/pmfg.hpp"

#include <algorithm>
#include <cmath>

#include "specnet/error.hpp"

namespace specnet {

std::vector<NodePair> pmfg_candidate_order(const Eigen::MatrixXd& s) {
  const int n = static_cast<int>(s.rows());
  std::vector<NodePair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const NodePair& a, const NodePair& b) {
    return s(a.first, a.second) > s(b.first, b.second);
  });
  return pairs;
}

WeightedNetwork pmfg(const Eigen::MatrixXd& s, std::vector<std::string> labels,
                     WeightTransform transform) {
  const int n = static_cast<int>(s.rows());
  if (s.rows() != s.cols()) throw ValidationError("similarity matrix must be square");
  if (n < 3) throw ValidationError("PMFG needs at least 3 nodes");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ValidationError("label count does not match similarity matrix");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!std::isfinite(s(i, j))) throw ValidationError("similarity matrix has non-finite entries");
      if (std::abs(s(i, j) - s(j, i)) > 1e-10 * std::max(1.0, std::abs(s(i, j))))
        throw ValidationError("similarity matrix is not symmetric");
    }

  const std::size_t target = 3 * static_cast<std::size_t>(n - 2);
  std::vector<NodePair> accepted;
  accepted.reserve(target);
  for (const auto& p : pmfg_candidate_order(s)) {
    accepted.push_back(p);
    if (!planar(n, accepted)) accepted.pop_back();
    if (accepted.size() == target) break;
  }

  std::vector<Edge> edges;
  edges.reserve(accepted.size());
  for (const auto& [i, j] : accepted) edges.push_back({i, j, apply_transform(transform, s(i, j))});
  return WeightedNetwork(std::move(labels), std::move(edges), transform);
}

}  // namespace specnet
