// Fixtures, seeded generators and brute-force oracles shared by the tests.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "specnet/community.hpp"
#include "specnet/market_data.hpp"
#include "specnet/network.hpp"
#include "specnet/planarity.hpp"

namespace testkit {

using specnet::Edge;
using specnet::WeightedNetwork;

/// xorshift64* stream, independent of the library's generator.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {
    if (s_ == 0) s_ = 1;
  }
  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1DULL;
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  double normal() {
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * unit());
  }

 private:
  std::uint64_t s_;
};

inline WeightedNetwork star(int n) {  // centre 0 plus n-1 leaves
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i, 1.0});
  return WeightedNetwork::from_edges(n, e);
}

inline WeightedNetwork complete(int n, double w = 1.0) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, w});
  return WeightedNetwork::from_edges(n, e);
}

/// Cliques of the given size on consecutive nodes; `bridges` joins clique c's
/// last node to clique c+1's first node.
inline WeightedNetwork cliques(int count, int size, bool bridges) {
  std::vector<Edge> e;
  for (int c = 0; c < count; ++c) {
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) e.push_back({c * size + i, c * size + j, 1.0});
    if (bridges && c + 1 < count) e.push_back({c * size + size - 1, (c + 1) * size, 1.0});
  }
  return WeightedNetwork::from_edges(count * size, e);
}

/// Random spanning tree plus independent extra edges, weights in [0.1, 1].
inline WeightedNetwork random_connected(Gen& g, int n, double p, bool unit_weights = false) {
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> e;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == b || !seen.insert({a, b}).second) return;
    e.push_back({a, b, unit_weights ? 1.0 : g.uniform(0.1, 1.0)});
  };
  for (int i = 1; i < n; ++i) add(i, g.below(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.unit() < p) add(i, j);
  return WeightedNetwork::from_edges(n, e);
}

/// Dense-matrix modularity, written from the textbook definition.
inline double modularity_oracle(const Eigen::MatrixXd& a, const std::vector<int>& label) {
  const long n = a.rows();
  const Eigen::VectorXd s = a.rowwise().sum();
  const double two_m = s.sum();
  double q = 0.0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (label[static_cast<std::size_t>(i)] == label[static_cast<std::size_t>(j)])
        q += a(i, j) - s(i) * s(j) / two_m;
  return q / two_m;
}

/// Calls f on every set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxl) {
    if (i == n) {
      f(a);
      return;
    }
    for (int l = 0; l <= maxl + 1; ++l) {
      a[static_cast<std::size_t>(i)] = l;
      rec(i + 1, std::max(maxl, l));
    }
  };
  if (n == 0) {
    f(a);
    return;
  }
  rec(1, 0);
}

struct BestPartition {
  double q = -1.0;
  std::vector<int> labels;
};

inline BestPartition best_partition(const Eigen::MatrixXd& a) {
  BestPartition best;
  for_each_partition(static_cast<int>(a.rows()), [&](const std::vector<int>& l) {
    const double q = modularity_oracle(a, l);
    if (q > best.q + 1e-12) best = {q, l};
  });
  return best;
}

/// Kruskal maximum spanning forest of a dense similarity matrix.
inline std::set<std::pair<int, int>> max_spanning_tree(const Eigen::MatrixXd& s) {
  const int n = static_cast<int>(s.rows());
  std::vector<std::tuple<double, int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(s(i, j), i, j);
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return std::get<0>(x) > std::get<0>(y); });
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::set<std::pair<int, int>> tree;
  for (const auto& [w, i, j] : pairs) {
    const int a = find(i), b = find(j);
    if (a == b) continue;
    parent[static_cast<std::size_t>(a)] = b;
    tree.insert({i, j});
  }
  return tree;
}

inline int count_components(int n, const std::vector<specnet::NodePair>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int c = n;
  for (const auto& [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --c;
    }
  }
  return c;
}

/// Checks that a rotation system is a planar embedding of the edge set by
/// tracing its faces and testing Euler's formula V - E + F = 2C, one outer face per component.
inline bool embedding_is_planar(int n, const std::vector<specnet::NodePair>& edges,
                                const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != n) return false;
  std::set<std::pair<int, int>> darts;
  for (const auto& [u, v] : edges) {
    darts.insert({u, v});
    darts.insert({v, u});
  }
  std::size_t listed = 0;
  for (int u = 0; u < n; ++u) {
    for (int v : rotation[static_cast<std::size_t>(u)])
      if (!darts.count({u, v})) return false;
    listed += rotation[static_cast<std::size_t>(u)].size();
  }
  if (listed != darts.size()) return false;
  auto next_around = [&](int v, int u) {  // neighbour after u in v's rotation
    const auto& r = rotation[static_cast<std::size_t>(v)];
    const auto it = std::find(r.begin(), r.end(), u);
    return r[static_cast<std::size_t>((it - r.begin() + 1) % static_cast<long>(r.size()))];
  };
  std::set<std::pair<int, int>> used;
  int faces = 0;
  for (const auto& d : darts) {
    if (used.count(d)) continue;
    ++faces;
    auto cur = d;
    while (used.insert(cur).second) cur = {cur.second, next_around(cur.second, cur.first)};
  }
  int isolated = 0;
  for (int u = 0; u < n; ++u) isolated += rotation[static_cast<std::size_t>(u)].empty();
  const int comps = count_components(n, edges) - isolated;
  if (edges.empty()) return true;
  return (n - isolated) - static_cast<int>(edges.size()) + faces == 2 * comps;
}

/// True when the edges form a subdivision of K5 or K3,3.
inline bool is_kuratowski_subdivision(std::vector<specnet::NodePair> edges) {
  std::map<int, std::multiset<int>> adj;
  for (const auto& [u, v] : edges) {
    if (u == v) return false;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() != 2) continue;
      const int x = *it->second.begin(), y = *std::next(it->second.begin());
      if (x == y) return false;
      const int v = it->first;
      adj[x].erase(adj[x].find(v));
      adj[y].erase(adj[y].find(v));
      adj[x].insert(y);
      adj[y].insert(x);
      adj.erase(it);
      changed = true;
      break;
    }
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() < 3) return false;
    if (std::set<int>(nb.begin(), nb.end()).size() != nb.size()) return false;
  }
  if (adj.size() == 5) {
    for (const auto& [v, nb] : adj)
      if (nb.size() != 4) return false;
    return true;
  }
  if (adj.size() == 6) {
    for (const auto& [v, nb] : adj)
      if (nb.size() != 3) return false;
    std::map<int, int> side;  // 2-colouring
    std::vector<int> stack{adj.begin()->first};
    side[adj.begin()->first] = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!side.count(w)) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
    return side.size() == 6;
  }
  return false;
}

inline std::vector<specnet::NodePair> pairs_of(const WeightedNetwork& net) {
  std::vector<specnet::NodePair> out;
  for (const auto& e : net.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline Eigen::MatrixXd random_symmetric(Gen& g, int n) {
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i) {
    s(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) s(i, j) = s(j, i) = g.uniform(-1.0, 1.0);
  }
  return s;
}

inline specnet::ReturnPanel panel_of(const std::vector<std::vector<double>>& rows) {
  specnet::ReturnPanel p;
  const auto t = static_cast<long>(rows.front().size());
  p.returns.resize(static_cast<long>(rows.size()), t);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    p.tickers.push_back(std::string(1, static_cast<char>('A' + i)));
    for (long j = 0; j < t; ++j) p.returns(static_cast<long>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  std::chrono::sys_days d{std::chrono::year{2020} / 1 / 1};
  for (long j = 0; j < t; ++j) p.dates.emplace_back(d + std::chrono::days{j});
  return p;
}

}  // namespace testkit
