#include "specnet/randomization.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_set>

#include "specnet/coreperiphery.hpp"
#include "specnet/error.hpp"
#include "specnet/rng.hpp"

namespace specnet {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

RandomizedNetwork degree_preserving_randomize(const WeightedNetwork& net, std::uint64_t seed,
                                              double swap_factor) {
  const std::size_t m = net.num_edges();
  if (m < 2) throw ValidationError("randomization needs at least two edges");
  if (!(swap_factor > 0.0)) throw ValidationError("swap_factor must be positive");
  std::vector<Edge> edges = net.edges();
  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * m);
  for (const auto& e : edges) present.insert(pair_key(e.u, e.v));

  const auto target = static_cast<std::size_t>(std::ceil(swap_factor * static_cast<double>(m)));
  const std::size_t budget = 100 * target;
  const std::size_t give_up = 100 * m;
  Rng rng(seed);
  RandomizedNetwork out;
  while (out.accepted_swaps < target && out.attempts < budget) {
    if (out.accepted_swaps == 0 && out.attempts >= give_up) break;
    ++out.attempts;
    const std::size_t i = uniform_index(rng, m);
    const std::size_t j = uniform_index(rng, m);
    if (i == j) continue;
    Edge& e1 = edges[i];
    Edge& e2 = edges[j];
    const int a = e1.u, b = e1.v;
    int c = e2.u, d = e2.v;
    if (rng() & 1) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b) continue;
    if (present.count(pair_key(a, d)) || present.count(pair_key(c, b))) continue;
    present.erase(pair_key(a, b));
    present.erase(pair_key(c, d));
    present.insert(pair_key(a, d));
    present.insert(pair_key(c, b));
    e1.u = std::min(a, d);
    e1.v = std::max(a, d);
    e2.u = std::min(c, b);
    e2.v = std::max(c, b);
    ++out.accepted_swaps;
  }
  out.saturated = out.accepted_swaps < target;
  if (out.accepted_swaps == 0)
    out.network = net;
  else
    out.network = WeightedNetwork(net.labels(), std::move(edges), net.transform());
  return out;
}

double exceedance_p_value(double observed, const std::vector<double>& nulls) {
  if (nulls.empty()) throw ValidationError("p-value needs at least one null sample");
  const auto above =
      std::count_if(nulls.begin(), nulls.end(), [&](double x) { return x > observed; });
  return static_cast<double>(above) / static_cast<double>(nulls.size());
}

SignificanceResult cp_significance(const WeightedNetwork& net, const SignificanceOptions& opt) {
  if (opt.n_rand < 1) throw ValidationError("n_rand must be positive");
  const auto prof = rossa_profile(net);
  if (!prof.cp_centralization) throw ValidationError("cp-centralization needs at least 3 nodes");

  std::vector<std::optional<double>> samples(static_cast<std::size_t>(opt.n_rand));
  auto draw = [&](int i) {
    for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
      const auto seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i),
                                    static_cast<std::uint64_t>(attempt));
      const auto null = degree_preserving_randomize(net, seed, opt.swap_factor);
      if (!null.network.is_connected()) continue;
      samples[static_cast<std::size_t>(i)] = *rossa_profile(null.network).cp_centralization;
      return;
    }
  };
  if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < opt.n_rand; ++i) draw(i);
  } else {
    for (int i = 0; i < opt.n_rand; ++i) draw(i);
  }

  SignificanceResult res;
  res.observed = *prof.cp_centralization;
  for (const auto& s : samples) {
    if (s)
      res.null_values.push_back(*s);
    else
      ++res.skipped;
  }
  if (2 * res.null_values.size() < static_cast<std::size_t>(opt.n_rand))
    throw NumericError("too few connected null networks (" +
                       std::to_string(res.null_values.size()) + " of " +
                       std::to_string(opt.n_rand) + ")");
  res.p_value = exceedance_p_value(res.observed, res.null_values);
  return res;
}

nlohmann::json significance_to_json(const SignificanceResult& r) {
  return {{"observed", r.observed},
          {"p_value", r.p_value},
          {"null_values", r.null_values},
          {"skipped", r.skipped}};
}

}  // namespace specnet
