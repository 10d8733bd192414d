#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specnet/error.hpp"
#include "specnet/network.hpp"
#include "specnet/spectral.hpp"

namespace specnet {

enum class CorenessMethod { rossa, minres, rombach };

std::string to_string(CorenessMethod m);
CorenessMethod coreness_method_from_string(const std::string& s);

struct CorenessVector {
  CorenessMethod method = CorenessMethod::rossa;
  std::vector<double> scores;
};

/// Persistence-probability profile of a greedy random-walk peeling.
///
/// order[0] is the node of least weighted degree; each later entry is the
/// node whose addition gives the smallest persistence probability
///   alpha_S = sum_{i,j in S} a_ij / sum_{i in S} strength(i),
/// ties going to lower weighted degree and then lower index. alphas holds
/// alpha_1..alpha_{n-1}; the full node set always has alpha_n = 1 and is not
/// part of the profile.
struct CorePeripheryProfile {
  std::vector<int> order;
  std::vector<double> alphas;
  /// Raw centralization; absent for networks with fewer than 3 nodes.
  std::optional<double> cp_centralization;

  /// Alpha at which each node joined (the last node gets 1).
  CorenessVector coreness() const;
};

/// Requires a connected network with nonnegative weights and n >= 2.
CorePeripheryProfile rossa_profile(const WeightedNetwork& net);

/// 1 - 2/(n-2) * sum(alphas). Returned unclamped.
double cp_centralization(std::span<const double> alphas, int n);
/// Value clamped to [0, 1] for display.
double clamp_cp_centralization(double raw);

struct MinresOptions {
  double tol = 1e-10;
  int max_iter = 500;
  /// Initial vector; defaults to the weighted-degree vector scaled to unit norm.
  std::optional<std::vector<double>> start;
};

struct MinresResult {
  CorenessVector coreness;
  int iterations = 0;
  /// sum_{i != j} (a_ij - c_i c_j)^2 at the start and after every sweep.
  std::vector<double> objective;
};

class MinresNonConvergence : public NumericError {
 public:
  MinresNonConvergence(const std::string& what, std::vector<double> last)
      : NumericError(what), last_iterate(std::move(last)) {}
  std::vector<double> last_iterate;
};

/// Rank-one fit of the off-diagonal adjacency by Gauss-Seidel sweeps of
/// c_i = sum_{j != i} a_ij c_j / sum_{j != i} c_j^2. Each update is the exact
/// minimiser in c_i, so the objective never increases.
MinresResult minres_coreness(const WeightedNetwork& net, const MinresOptions& options = {});

/// Profile vector c*(alpha, beta) indexed 1..n (returned 0-based), ascending.
std::vector<double> rombach_profile(int n, double alpha, double beta);

struct RombachOptions {
  int num_samples = 10000;
  std::uint64_t seed = 0;
  /// Swap attempts per sample are capped at swap_cap_factor * n^2.
  int swap_cap_factor = 5;
  Exec exec = Exec::parallel;
};

/// Quality Q = sum_ij a_ij c_i c_j for a node-indexed c.
double rombach_quality(const WeightedNetwork& net, std::span<const double> c);

/// Assigns the profile c* to nodes (largest values to the highest weighted
/// degree) and improves the assignment by pairwise-swap hill climbing.
/// Returns the node-indexed vector.
std::vector<double> rombach_assign(const WeightedNetwork& net, std::span<const double> profile,
                                   int swap_cap_factor = 5);

/// Core scores CS(i) = Z sum_samples c_i Q over uniformly sampled (alpha, beta),
/// normalised so the largest score is 1.
CorenessVector rombach_coreness(const WeightedNetwork& net, const RombachOptions& options = {});

/// Core block size used when none is given: N/4, at least 1.
int default_core_size(int n);

/// Ones in the core-core and core-periphery blocks (diagonal included), zeros
/// in the periphery-periphery block.
Eigen::MatrixXd ideal_cp_matrix(int n, int k);

/// Frobenius distance between the adjacency permuted by descending coreness
/// (ties by index) and scaled by its largest absolute entry, and the ideal
/// core-periphery matrix. Diagonal entries are left out of the sum.
double cp_fit_distance(const Eigen::MatrixXd& adjacency, std::span<const double> coreness, int k);

double cosine_similarity(std::span<const double> x, std::span<const double> y);

}  // namespace specnet
