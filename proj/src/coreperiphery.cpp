#include "specnet/coreperiphery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specnet/rng.hpp"

namespace specnet {

namespace {

void require_nonnegative(const WeightedNetwork& net, const char* method) {
  if (net.has_negative_weight())
    throw ValidationError(std::string(method) + " requires nonnegative edge weights");
}

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

std::string to_string(CorenessMethod m) {
  switch (m) {
    case CorenessMethod::rossa: return "rossa";
    case CorenessMethod::minres: return "minres";
    case CorenessMethod::rombach: return "rombach";
  }
  return "?";
}

CorenessMethod coreness_method_from_string(const std::string& s) {
  if (s == "rossa") return CorenessMethod::rossa;
  if (s == "minres") return CorenessMethod::minres;
  if (s == "rombach") return CorenessMethod::rombach;
  throw ValidationError("unknown coreness method '" + s + "'");
}

// ---------------------------------------------------------------- Rossa

CorenessVector CorePeripheryProfile::coreness() const {
  CorenessVector cv;
  cv.method = CorenessMethod::rossa;
  cv.scores.assign(order.size(), 1.0);
  for (std::size_t k = 0; k < alphas.size(); ++k)
    cv.scores[static_cast<std::size_t>(order[k])] = alphas[k];
  return cv;
}

CorePeripheryProfile rossa_profile(const WeightedNetwork& net) {
  const int n = net.num_nodes();
  if (n < 2) throw ValidationError("core-periphery profile needs at least 2 nodes");
  require_nonnegative(net, "Rossa profile");
  if (!net.is_connected()) throw ValidationError("Rossa profile requires a connected network");

  const std::vector<double> deg = net.strengths();
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  // link[j]: weight between j and the current set
  std::vector<double> link(static_cast<std::size_t>(n), 0.0);
  double internal = 0.0;  // ordered-pair sum over the set
  double volume = 0.0;

  CorePeripheryProfile prof;
  auto add = [&](int j) {
    in_set[static_cast<std::size_t>(j)] = 1;
    internal += 2.0 * link[static_cast<std::size_t>(j)];
    volume += deg[static_cast<std::size_t>(j)];
    for (const auto& nb : net.neighbors(j)) link[static_cast<std::size_t>(nb.node)] += nb.weight;
    prof.order.push_back(j);
  };

  int first = 0;
  for (int j = 1; j < n; ++j)
    if (deg[static_cast<std::size_t>(j)] < deg[static_cast<std::size_t>(first)]) first = j;
  add(first);
  prof.alphas.push_back(0.0);

  for (int step = 1; step < n - 1; ++step) {
    int best = -1;
    double best_alpha = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (in_set[uj]) continue;
      const double a = ratio(internal + 2.0 * link[uj], volume + deg[uj]);
      if (best < 0) {
        best = j;
        best_alpha = a;
        continue;
      }
      const auto ub = static_cast<std::size_t>(best);
      if (nearly_equal(a, best_alpha)) {
        if (deg[uj] < deg[ub]) {
          best = j;
          best_alpha = a;
        }
      } else if (a < best_alpha) {
        best = j;
        best_alpha = a;
      }
    }
    add(best);
    prof.alphas.push_back(best_alpha);
  }
  for (int j = 0; j < n; ++j)
    if (!in_set[static_cast<std::size_t>(j)]) prof.order.push_back(j);

  if (n >= 3) prof.cp_centralization = cp_centralization(prof.alphas, n);
  return prof;
}

double cp_centralization(std::span<const double> alphas, int n) {
  if (n < 3) throw ValidationError("cp-centralization needs n >= 3");
  if (alphas.size() != static_cast<std::size_t>(n - 1))
    throw ValidationError("profile must hold n-1 persistence probabilities");
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("persistence probability outside [0, 1]");
  const double sum = std::accumulate(alphas.begin(), alphas.end(), 0.0);
  return 1.0 - 2.0 / static_cast<double>(n - 2) * sum;
}

double clamp_cp_centralization(double raw) { return std::clamp(raw, 0.0, 1.0); }

// ---------------------------------------------------------------- MINRES

MinresResult minres_coreness(const WeightedNetwork& net, const MinresOptions& opt) {
  const int n = net.num_nodes();
  if (n < 2) throw ValidationError("MINRES needs at least 2 nodes");
  require_nonnegative(net, "MINRES");
  const Eigen::MatrixXd a = net.adjacency();

  std::vector<double> c;
  if (opt.start) {
    if (opt.start->size() != static_cast<std::size_t>(n))
      throw ValidationError("MINRES start vector has wrong length");
    c = *opt.start;
  } else {
    // degree direction, scaled to the least-squares fit of s^2 d d^T to A
    c = net.strengths();
    double fit = 0.0, sq = 0.0, sum_sq = 0.0, sum_4 = 0.0;
    for (int i = 0; i < n; ++i)
      for (const auto& nb : net.neighbors(i))
        fit += nb.weight * c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(nb.node)];
    for (double x : c) {
      sum_sq += x * x;
      sum_4 += x * x * x * x;
    }
    sq = sum_sq * sum_sq - sum_4;
    if (!(fit > 0.0) || !(sq > 0.0)) throw NumericError("MINRES undefined on an edgeless network");
    const double scale = std::sqrt(fit / sq);
    for (double& x : c) x *= scale;
  }

  auto objective = [&] {
    double f = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          const double r = a(i, j) - c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)];
          f += r * r;
        }
    return f;
  };

  MinresResult res;
  res.coreness.method = CorenessMethod::minres;
  res.objective.push_back(objective());
  double sumsq = 0.0;
  for (double x : c) sumsq += x * x;

  for (int it = 1; it <= opt.max_iter; ++it) {
    double max_change = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double den = sumsq - c[ui] * c[ui];
      if (!(den > 0.0)) throw NumericError("MINRES update has a zero denominator");
      double num = 0.0;
      for (const auto& nb : net.neighbors(i)) num += nb.weight * c[static_cast<std::size_t>(nb.node)];
      const double next = num / den;
      max_change = std::max(max_change, std::abs(next - c[ui]));
      sumsq += next * next - c[ui] * c[ui];
      c[ui] = next;
    }
    sumsq = 0.0;
    for (double x : c) sumsq += x * x;
    res.objective.push_back(objective());
    if (max_change < opt.tol) {
      res.iterations = it;
      res.coreness.scores = std::move(c);
      return res;
    }
  }
  throw MinresNonConvergence("MINRES did not converge in " + std::to_string(opt.max_iter) +
                                 " iterations",
                             c);
}

// ---------------------------------------------------------------- Rombach

std::vector<double> rombach_profile(int n, double alpha, double beta) {
  if (n < 1) throw ValidationError("profile needs n >= 1");
  const int b = static_cast<int>(std::floor(beta * n));
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    double v;
    if (i <= b)
      v = i * (1.0 - alpha) / (2.0 * b);
    else
      v = (i - b) * (1.0 - alpha) / (2.0 * (n - b)) + (1.0 + alpha) / 2.0;
    c[static_cast<std::size_t>(i - 1)] = v;
  }
  return c;
}

double rombach_quality(const WeightedNetwork& net, std::span<const double> c) {
  double q = 0.0;
  for (const auto& e : net.edges())
    q += e.weight * c[static_cast<std::size_t>(e.u)] * c[static_cast<std::size_t>(e.v)];
  return 2.0 * q;
}

namespace {

std::vector<int> degree_rank(const WeightedNetwork& net) {
  const auto deg = net.strengths();
  std::vector<int> order(static_cast<std::size_t>(net.num_nodes()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(y)];
  });
  return order;
}

std::vector<double> assign_and_climb(const WeightedNetwork& net, const Eigen::MatrixXd& a,
                                     const std::vector<int>& rank, std::span<const double> profile,
                                     int swap_cap_factor) {
  const int n = net.num_nodes();
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    c[static_cast<std::size_t>(rank[static_cast<std::size_t>(r)])] =
        profile[static_cast<std::size_t>(n - 1 - r)];

  std::vector<double> s(static_cast<std::size_t>(n), 0.0);  // s_i = sum_j a_ij c_j
  for (const auto& e : net.edges()) {
    s[static_cast<std::size_t>(e.u)] += e.weight * c[static_cast<std::size_t>(e.v)];
    s[static_cast<std::size_t>(e.v)] += e.weight * c[static_cast<std::size_t>(e.u)];
  }
  double q = 0.0;
  for (int i = 0; i < n; ++i) q += c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];

  const long long cap = static_cast<long long>(swap_cap_factor) * n * n;
  long long attempts = 0;
  bool improved = true;
  while (improved && attempts < cap) {
    improved = false;
    for (int u = 0; u < n && attempts < cap; ++u)
      for (int v = u + 1; v < n && attempts < cap; ++v) {
        ++attempts;
        const auto uu = static_cast<std::size_t>(u);
        const auto uv = static_cast<std::size_t>(v);
        const double d = c[uv] - c[uu];
        if (d == 0.0) continue;
        const double gain = 2.0 * d * (s[uu] - s[uv]) - 2.0 * a(u, v) * d * d;
        if (gain <= 1e-12 * std::max(1.0, std::abs(q))) continue;
        std::swap(c[uu], c[uv]);
        for (const auto& nb : net.neighbors(u)) s[static_cast<std::size_t>(nb.node)] += nb.weight * d;
        for (const auto& nb : net.neighbors(v)) s[static_cast<std::size_t>(nb.node)] -= nb.weight * d;
        q += gain;
        improved = true;
      }
  }
  return c;
}

constexpr int kRombachBlock = 128;

}  // namespace

std::vector<double> rombach_assign(const WeightedNetwork& net, std::span<const double> profile,
                                   int swap_cap_factor) {
  if (profile.size() != static_cast<std::size_t>(net.num_nodes()))
    throw ValidationError("profile length must equal node count");
  return assign_and_climb(net, net.adjacency(), degree_rank(net), profile, swap_cap_factor);
}

CorenessVector rombach_coreness(const WeightedNetwork& net, const RombachOptions& opt) {
  const int n = net.num_nodes();
  if (n < 1) throw ValidationError("Rombach needs at least one node");
  if (opt.num_samples < 1) throw ValidationError("Rombach needs at least one sample");
  require_nonnegative(net, "Rombach");
  const Eigen::MatrixXd a = net.adjacency();
  const std::vector<int> rank = degree_rank(net);

  const int num_blocks = (opt.num_samples + kRombachBlock - 1) / kRombachBlock;
  std::vector<std::vector<double>> partial(static_cast<std::size_t>(num_blocks),
                                           std::vector<double>(static_cast<std::size_t>(n), 0.0));
  auto run_block = [&](int blk) {
    auto& acc = partial[static_cast<std::size_t>(blk)];
    const int end = std::min(opt.num_samples, (blk + 1) * kRombachBlock);
    for (int sample = blk * kRombachBlock; sample < end; ++sample) {
      Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(sample)));
      const double alpha = uniform01(rng);
      const double beta = uniform01(rng);
      const auto profile = rombach_profile(n, alpha, beta);
      const auto c = assign_and_climb(net, a, rank, profile, opt.swap_cap_factor);
      const double q = rombach_quality(net, c);
      for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)] * q;
    }
  };
  if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int blk = 0; blk < num_blocks; ++blk) run_block(blk);
  } else {
    for (int blk = 0; blk < num_blocks; ++blk) run_block(blk);
  }

  CorenessVector cv;
  cv.method = CorenessMethod::rombach;
  cv.scores.assign(static_cast<std::size_t>(n), 0.0);
  for (const auto& acc : partial)
    for (int i = 0; i < n; ++i) cv.scores[static_cast<std::size_t>(i)] += acc[static_cast<std::size_t>(i)];
  const double mx = *std::max_element(cv.scores.begin(), cv.scores.end());
  if (!(mx > 0.0)) throw NumericError("Rombach core scores are all zero (no positive-weight edges)");
  for (double& x : cv.scores) x /= mx;
  return cv;
}

// ---------------------------------------------------------------- comparison

int default_core_size(int n) { return std::max(1, n / 4); }

Eigen::MatrixXd ideal_cp_matrix(int n, int k) {
  if (k < 1 || k >= n) throw ValidationError("core size k must satisfy 1 <= k < n");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.topRows(k).setOnes();
  m.leftCols(k).setOnes();
  return m;
}

double cp_fit_distance(const Eigen::MatrixXd& adjacency, std::span<const double> coreness, int k) {
  const int n = static_cast<int>(adjacency.rows());
  if (adjacency.cols() != n) throw ValidationError("adjacency must be square");
  if (coreness.size() != static_cast<std::size_t>(n))
    throw ValidationError("coreness length must equal node count");
  const Eigen::MatrixXd ideal = ideal_cp_matrix(n, k);
  const double scale = adjacency.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw ValidationError("cannot normalise an all-zero adjacency");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return coreness[static_cast<std::size_t>(x)] > coreness[static_cast<std::size_t>(y)];
  });
  double sum = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c) continue;
      const double d = adjacency(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]) / scale -
                       ideal(r, c);
      sum += d * d;
    }
  return std::sqrt(sum);
}

double cosine_similarity(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("cosine similarity needs equal-length vectors");
  double xy = 0.0, xx = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xy += x[i] * y[i];
    xx += x[i] * x[i];
    yy += y[i] * y[i];
  }
  if (!(xx > 0.0) || !(yy > 0.0)) throw ValidationError("cosine similarity of a zero vector");
  return xy / (std::sqrt(xx) * std::sqrt(yy));
}

}  // namespace specnet
