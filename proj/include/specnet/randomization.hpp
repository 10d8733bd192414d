#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "specnet/network.hpp"
#include "specnet/spectral.hpp"

namespace specnet {

struct RandomizedNetwork {
  WeightedNetwork network;
  std::size_t accepted_swaps = 0;
  std::size_t attempts = 0;
  /// Fewer swaps than requested could be made. When no swap at all was
  /// possible the input is returned unchanged.
  bool saturated = false;
};

/// Double-edge-swap rewiring: (a,b),(c,d) -> (a,d),(c,b) or (a,c),(b,d),
/// rejecting self-loops and multi-edges. Each edge keeps its weight through
/// the swap, so the weight multiset and the degree sequence are preserved.
/// Targets swap_factor * E accepted swaps within 100 * that many attempts;
/// gives up after 100 * E attempts without a single success.
RandomizedNetwork degree_preserving_randomize(const WeightedNetwork& net, std::uint64_t seed,
                                              double swap_factor = 10.0);

/// Fraction of null values strictly greater than the observed one.
double exceedance_p_value(double observed, const std::vector<double>& nulls);

struct SignificanceOptions {
  int n_rand = 100;
  std::uint64_t seed = 0;
  double swap_factor = 10.0;
  /// Redraws allowed for a disconnected null before the sample is skipped.
  int max_retries = 10;
  Exec exec = Exec::parallel;
};

struct SignificanceResult {
  double observed = 0.0;
  std::vector<double> null_values;  ///< in sample-index order
  double p_value = 0.0;
  int skipped = 0;
};

/// Compares the observed cp-centralization with degree-preserving nulls.
/// Sample i uses seeds derived from (seed, i, retry).
SignificanceResult cp_significance(const WeightedNetwork& net,
                                   const SignificanceOptions& options = {});

nlohmann::json significance_to_json(const SignificanceResult& r);

}  // namespace specnet
