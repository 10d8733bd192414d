#include "specnet/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "specnet/error.hpp"
#include "specnet/rng.hpp"

namespace specnet {

// ---------------------------------------------------------------- Partition

Partition::Partition(const std::vector<int>& raw) {
  std::unordered_map<int, int> map;
  labels_.reserve(raw.size());
  for (int x : raw) {
    auto [it, inserted] = map.emplace(x, static_cast<int>(map.size()));
    labels_.push_back(it->second);
  }
  num_communities_ = static_cast<int>(map.size());
}

Partition Partition::singletons(int n) {
  std::vector<int> l(static_cast<std::size_t>(n));
  std::iota(l.begin(), l.end(), 0);
  return Partition(l);
}

Partition Partition::whole(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

std::vector<std::vector<int>> Partition::groups() const {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(num_communities_));
  for (int i = 0; i < size(); ++i) g[static_cast<std::size_t>(labels_[static_cast<std::size_t>(i)])].push_back(i);
  return g;
}

// ---------------------------------------------------------------- modularity

ModularityScore modularity(const WeightedNetwork& net, const Partition& p, double resolution) {
  if (p.size() != net.num_nodes()) throw ValidationError("partition does not cover the network");
  if (net.num_edges() == 0) throw ValidationError("modularity undefined on an empty edge set");
  if (net.has_negative_weight()) throw ValidationError("modularity requires nonnegative weights");
  const double m2 = 2.0 * net.total_weight();
  if (!(m2 > 0.0)) throw ValidationError("modularity undefined for zero total weight");
  std::vector<double> internal(static_cast<std::size_t>(p.num_communities()), 0.0);
  std::vector<double> tot(static_cast<std::size_t>(p.num_communities()), 0.0);
  ModularityScore score;
  for (const auto& e : net.edges()) {
    if (e.weight != 1.0) score.weighted = true;
    tot[static_cast<std::size_t>(p[e.u])] += e.weight;
    tot[static_cast<std::size_t>(p[e.v])] += e.weight;
    if (p[e.u] == p[e.v]) internal[static_cast<std::size_t>(p[e.u])] += 2.0 * e.weight;
  }
  for (int c = 0; c < p.num_communities(); ++c) {
    const double t = tot[static_cast<std::size_t>(c)] / m2;
    score.q += internal[static_cast<std::size_t>(c)] / m2 - resolution * t * t;
  }
  return score;
}

// ---------------------------------------------------------------- Louvain

namespace {

// Level graph for Louvain: neighbours exclude self; loops[i] is W_ii counted
// over ordered pairs, degree[i] includes it.
struct LevelGraph {
  std::vector<std::vector<std::pair<int, double>>> nbrs;
  std::vector<double> loops;
  std::vector<double> degree;
  int size() const { return static_cast<int>(nbrs.size()); }
};

LevelGraph level_from_network(const WeightedNetwork& net) {
  LevelGraph g;
  const auto n = static_cast<std::size_t>(net.num_nodes());
  g.nbrs.resize(n);
  g.loops.assign(n, 0.0);
  g.degree.assign(n, 0.0);
  for (const auto& e : net.edges()) {
    g.nbrs[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
    g.nbrs[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
    g.degree[static_cast<std::size_t>(e.u)] += e.weight;
    g.degree[static_cast<std::size_t>(e.v)] += e.weight;
  }
  return g;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<int>& comm, int num_comm) {
  LevelGraph h;
  const auto nc = static_cast<std::size_t>(num_comm);
  h.nbrs.resize(nc);
  h.loops.assign(nc, 0.0);
  h.degree.assign(nc, 0.0);
  std::vector<std::map<int, double>> w(nc);
  for (int i = 0; i < g.size(); ++i) {
    const int ci = comm[static_cast<std::size_t>(i)];
    h.loops[static_cast<std::size_t>(ci)] += g.loops[static_cast<std::size_t>(i)];
    h.degree[static_cast<std::size_t>(ci)] += g.degree[static_cast<std::size_t>(i)];
    for (const auto& [j, wt] : g.nbrs[static_cast<std::size_t>(i)]) {
      const int cj = comm[static_cast<std::size_t>(j)];
      if (ci == cj)
        h.loops[static_cast<std::size_t>(ci)] += wt;
      else
        w[static_cast<std::size_t>(ci)][cj] += wt;
    }
  }
  for (std::size_t c = 0; c < nc; ++c)
    for (const auto& [d, wt] : w[c]) h.nbrs[c].emplace_back(d, wt);
  return h;
}

int renumber(std::vector<int>& comm) {
  std::vector<int> map(comm.size(), -1);
  int next = 0;
  for (int& c : comm) {
    if (map[static_cast<std::size_t>(c)] < 0) map[static_cast<std::size_t>(c)] = next++;
    c = map[static_cast<std::size_t>(c)];
  }
  return next;
}

}  // namespace

LouvainResult louvain(const WeightedNetwork& net, const LouvainOptions& opt) {
  if (net.has_negative_weight()) throw ValidationError("Louvain requires nonnegative weights");
  const int n = net.num_nodes();
  LevelGraph g = level_from_network(net);
  const double m2 = std::accumulate(g.degree.begin(), g.degree.end(), 0.0);
  if (!(m2 > 0.0)) throw ValidationError("Louvain needs positive total edge weight");
  const double eps = 1e-12;

  std::vector<int> node_to_level(static_cast<std::size_t>(n));
  std::iota(node_to_level.begin(), node_to_level.end(), 0);
  std::vector<int> flat;
  Rng rng(opt.seed);
  LouvainResult res;

  for (int level = 0;; ++level) {
    const int ln = g.size();
    std::vector<int> comm(static_cast<std::size_t>(ln));
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> tot = g.degree;
    std::vector<double> link(static_cast<std::size_t>(ln), 0.0);
    std::vector<int> touched;
    std::vector<int> order(static_cast<std::size_t>(ln));
    std::iota(order.begin(), order.end(), 0);

    bool any_move = false;
    bool moved = true;
    while (moved) {
      moved = false;
      shuffle(order, rng);
      for (int i : order) {
        const auto ui = static_cast<std::size_t>(i);
        const int own = comm[ui];
        const double ki = g.degree[ui];
        for (const auto& [j, w] : g.nbrs[ui]) {
          const int c = comm[static_cast<std::size_t>(j)];
          if (link[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
          link[static_cast<std::size_t>(c)] += w;
        }
        tot[static_cast<std::size_t>(own)] -= ki;
        // gain of joining c, in units of 1/m
        auto gain = [&](int c) {
          return link[static_cast<std::size_t>(c)] -
                 opt.resolution * tot[static_cast<std::size_t>(c)] * ki / m2;
        };
        const double stay = gain(own);
        int best = own;
        double best_gain = stay;
        for (int c : touched) {
          if (c == own) continue;
          const double gc = gain(c);
          if (gc > best_gain) {
            best_gain = gc;
            best = c;
          }
        }
        const double delta_q = 2.0 * (best_gain - stay) / m2;
        if (best != own && delta_q > eps) {
          comm[ui] = best;
          tot[static_cast<std::size_t>(best)] += ki;
          moved = true;
          any_move = true;
          if (opt.observer) {
            flat.resize(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
              flat[static_cast<std::size_t>(v)] =
                  comm[static_cast<std::size_t>(node_to_level[static_cast<std::size_t>(v)])];
            opt.observer(LouvainMove{level, i, delta_q, &flat});
          }
        } else {
          tot[static_cast<std::size_t>(own)] += ki;
        }
        for (int c : touched) link[static_cast<std::size_t>(c)] = 0.0;
        touched.clear();
      }
    }

    const int num_comm = renumber(comm);
    for (int& x : node_to_level) x = comm[static_cast<std::size_t>(x)];
    res.levels = level + 1;
    g = aggregate(g, comm, num_comm);
    if (!any_move) break;
  }

  // modularity of the final aggregated graph: each node is one community
  double q = 0.0;
  for (int c = 0; c < g.size(); ++c) {
    const double t = g.degree[static_cast<std::size_t>(c)] / m2;
    q += g.loops[static_cast<std::size_t>(c)] / m2 - opt.resolution * t * t;
  }
  res.partition = Partition(node_to_level);
  res.q = q;
  return res;
}

// ---------------------------------------------------------------- label propagation

Partition split_disconnected_labels(const WeightedNetwork& net, const Partition& p) {
  const int n = net.num_nodes();
  if (p.size() != n) throw ValidationError("partition does not cover the network");
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (out[static_cast<std::size_t>(s)] >= 0) continue;
    out[static_cast<std::size_t>(s)] = next;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& nb : net.neighbors(u))
        if (out[static_cast<std::size_t>(nb.node)] < 0 && p[nb.node] == p[u]) {
          out[static_cast<std::size_t>(nb.node)] = next;
          q.push(nb.node);
        }
    }
    ++next;
  }
  return Partition(out);
}

Partition label_propagation(const WeightedNetwork& net, std::uint64_t seed, int max_sweeps) {
  if (net.has_negative_weight()) throw ValidationError("label propagation requires nonnegative weights");
  const int n = net.num_nodes();
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::vector<int> order = label;
  std::vector<double> support(static_cast<std::size_t>(n), 0.0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> touched, best;
  Rng rng(seed);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    shuffle(order, rng);
    for (int u : order) {
      if (net.degree(u) == 0) continue;
      for (const auto& nb : net.neighbors(u)) {
        const int l = label[static_cast<std::size_t>(nb.node)];
        if (!seen[static_cast<std::size_t>(l)]) {
          seen[static_cast<std::size_t>(l)] = 1;
          touched.push_back(l);
        }
        support[static_cast<std::size_t>(l)] += nb.weight;
      }
      double mx = -std::numeric_limits<double>::infinity();
      for (int l : touched) mx = std::max(mx, support[static_cast<std::size_t>(l)]);
      const double tol = 1e-12 * std::max(1.0, std::abs(mx));
      const int own = label[static_cast<std::size_t>(u)];
      const double own_support = seen[static_cast<std::size_t>(own)] ? support[static_cast<std::size_t>(own)] : 0.0;
      if (own_support < mx - tol) {
        best.clear();
        for (int l : touched)
          if (support[static_cast<std::size_t>(l)] >= mx - tol) best.push_back(l);
        std::sort(best.begin(), best.end());
        label[static_cast<std::size_t>(u)] = best[uniform_index(rng, best.size())];
        changed = true;
      }
      for (int l : touched) {
        support[static_cast<std::size_t>(l)] = 0.0;
        seen[static_cast<std::size_t>(l)] = 0;
      }
      touched.clear();
    }
    if (!changed) break;
  }
  return split_disconnected_labels(net, Partition(label));
}

// ---------------------------------------------------------------- betweenness

namespace {

// Brandes over the edges flagged active; result indexed like net.edges().
std::vector<double> brandes(const WeightedNetwork& net, const std::vector<char>& active,
                            DistanceMode mode) {
  const int n = net.num_nodes();
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> eb(net.num_edges(), 0.0);
  std::vector<double> sigma(un), delta(un), dist(un);
  std::vector<std::vector<std::pair<int, std::size_t>>> pred(un);
  std::vector<int> stack;
  stack.reserve(un);
  const double inf = std::numeric_limits<double>::infinity();

  for (int s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), inf);
    for (auto& p : pred) p.clear();
    stack.clear();
    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0.0;

    if (mode == DistanceMode::hops) {
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        stack.push_back(v);
        for (const auto& nb : net.neighbors(v)) {
          if (!active[nb.edge]) continue;
          const auto w = static_cast<std::size_t>(nb.node);
          if (dist[w] == inf) {
            dist[w] = dist[static_cast<std::size_t>(v)] + 1.0;
            q.push(nb.node);
          }
          if (dist[w] == dist[static_cast<std::size_t>(v)] + 1.0) {
            sigma[w] += sigma[static_cast<std::size_t>(v)];
            pred[w].emplace_back(v, nb.edge);
          }
        }
      }
    } else {
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      std::vector<char> done(un, 0);
      pq.emplace(0.0, s);
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
        for (const auto& nb : net.neighbors(v)) {
          if (!active[nb.edge] || !(nb.weight > 0.0)) continue;
          const auto w = static_cast<std::size_t>(nb.node);
          const double nd = d + 1.0 / nb.weight;
          const double tol = 1e-12 * std::max(1.0, nd);
          if (nd < dist[w] - tol) {
            dist[w] = nd;
            sigma[w] = sigma[static_cast<std::size_t>(v)];
            pred[w].assign(1, {v, nb.edge});
            pq.emplace(nd, nb.node);
          } else if (std::abs(nd - dist[w]) <= tol && !done[w]) {
            sigma[w] += sigma[static_cast<std::size_t>(v)];
            pred[w].emplace_back(v, nb.edge);
          }
        }
      }
    }

    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const auto w = static_cast<std::size_t>(*it);
      for (const auto& [v, e] : pred[w]) {
        const double c = sigma[static_cast<std::size_t>(v)] / sigma[w] * (1.0 + delta[w]);
        eb[e] += c;
        delta[static_cast<std::size_t>(v)] += c;
      }
    }
  }
  for (double& x : eb) x *= 0.5;  // every unordered pair was counted from both ends
  return eb;
}

}  // namespace

std::vector<double> edge_betweenness(const WeightedNetwork& net, DistanceMode mode) {
  return brandes(net, std::vector<char>(net.num_edges(), 1), mode);
}

// ---------------------------------------------------------------- Girvan-Newman

GirvanNewmanResult girvan_newman(const WeightedNetwork& net, DistanceMode mode) {
  const int n = net.num_nodes();
  const auto& edges = net.edges();
  std::vector<char> active(edges.size(), 1);

  std::vector<int> comp = net.components();
  int num_comp = 1 + (n ? *std::max_element(comp.begin(), comp.end()) : -1);

  // dendrogram bookkeeping: tree node per live component
  struct TreeNode {
    std::vector<int> members;
    int left = -1, right = -1;
  };
  std::vector<TreeNode> tree;
  std::vector<int> comp_tree(static_cast<std::size_t>(num_comp));
  for (int c = 0; c < num_comp; ++c) {
    comp_tree[static_cast<std::size_t>(c)] = static_cast<int>(tree.size());
    tree.push_back({});
  }
  for (int v = 0; v < n; ++v) tree[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].members.push_back(v);
  std::vector<int> roots(comp_tree);

  GirvanNewmanResult res;
  const bool scorable = net.num_edges() > 0 && net.total_weight() > 0.0;
  auto consider = [&](const std::vector<int>& labels) {
    if (!scorable) return;
    Partition p(labels);
    const double q = modularity(net, p).q;
    if (res.partition.size() == 0 || q > res.q + 1e-12) {
      res.partition = std::move(p);
      res.q = q;
    }
  };
  consider(comp);
  if (!scorable) res.partition = Partition(comp);

  for (std::size_t step = 0; step < edges.size(); ++step) {
    const auto eb = brandes(net, active, mode);
    std::size_t pick = edges.size();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!active[k]) continue;
      if (pick == edges.size()) {
        pick = k;
        continue;
      }
      const double tol = 1e-9 * std::max(1.0, std::abs(eb[pick]));
      if (eb[k] > eb[pick] + tol) {
        pick = k;
      } else if (std::abs(eb[k] - eb[pick]) <= tol &&
                 std::make_pair(edges[k].u, edges[k].v) < std::make_pair(edges[pick].u, edges[pick].v)) {
        pick = k;
      }
    }
    active[pick] = 0;
    const int u = edges[pick].u;
    const int v = edges[pick].v;

    // does u still reach v?
    std::vector<char> reach(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{u};
    reach[static_cast<std::size_t>(u)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& nb : net.neighbors(x))
        if (active[nb.edge] && !reach[static_cast<std::size_t>(nb.node)]) {
          reach[static_cast<std::size_t>(nb.node)] = 1;
          stack.push_back(nb.node);
        }
    }
    if (!reach[static_cast<std::size_t>(v)]) {
      const int old = comp[static_cast<std::size_t>(u)];
      const int fresh = num_comp++;
      TreeNode left, right;
      for (int x : tree[static_cast<std::size_t>(comp_tree[static_cast<std::size_t>(old)])].members) {
        if (reach[static_cast<std::size_t>(x)]) {
          left.members.push_back(x);
        } else {
          right.members.push_back(x);
          comp[static_cast<std::size_t>(x)] = fresh;
        }
      }
      const int parent = comp_tree[static_cast<std::size_t>(old)];
      tree[static_cast<std::size_t>(parent)].left = static_cast<int>(tree.size());
      tree.push_back(std::move(left));
      tree[static_cast<std::size_t>(parent)].right = static_cast<int>(tree.size());
      tree.push_back(std::move(right));
      comp_tree[static_cast<std::size_t>(old)] = tree[static_cast<std::size_t>(parent)].left;
      comp_tree.push_back(tree[static_cast<std::size_t>(parent)].right);
      consider(comp);
    }
    res.removals.push_back({u, v, eb[pick], num_comp});
  }

  std::function<nlohmann::json(int)> render = [&](int t) -> nlohmann::json {
    const TreeNode& node = tree[static_cast<std::size_t>(t)];
    if (node.left >= 0) return nlohmann::json::array({render(node.left), render(node.right)});
    if (node.members.size() == 1) return net.labels()[static_cast<std::size_t>(node.members[0])];
    nlohmann::json arr = nlohmann::json::array();
    for (int m : node.members) arr.push_back(net.labels()[static_cast<std::size_t>(m)]);
    return arr;
  };
  if (roots.size() == 1) {
    res.dendrogram = render(roots[0]);
  } else {
    res.dendrogram = nlohmann::json::array();
    for (int r : roots) res.dendrogram.push_back(render(r));
  }
  return res;
}

// ---------------------------------------------------------------- NMI

double nmi(const Partition& p1, const Partition& p2) {
  if (p1.size() != p2.size()) throw ValidationError("NMI needs partitions of the same node set");
  const int n = p1.size();
  if (n == 0) throw ValidationError("NMI of empty partitions");
  std::map<std::pair<int, int>, double> joint;
  std::vector<double> a(static_cast<std::size_t>(p1.num_communities()), 0.0);
  std::vector<double> b(static_cast<std::size_t>(p2.num_communities()), 0.0);
  for (int i = 0; i < n; ++i) {
    joint[{p1[i], p2[i]}] += 1.0;
    a[static_cast<std::size_t>(p1[i])] += 1.0;
    b[static_cast<std::size_t>(p2[i])] += 1.0;
  }
  const double total = n;
  auto entropy = [&](const std::vector<double>& counts) {
    double h = 0.0;
    for (double c : counts)
      if (c > 0.0) h -= c / total * std::log(c / total);
    return h;
  };
  const double h1 = entropy(a);
  const double h2 = entropy(b);
  if (h1 == 0.0 && h2 == 0.0) return 1.0;
  if (h1 == 0.0 || h2 == 0.0) return 0.0;
  double mi = 0.0;
  for (const auto& [key, c] : joint)
    mi += c / total *
          std::log(c * total / (a[static_cast<std::size_t>(key.first)] * b[static_cast<std::size_t>(key.second)]));
  return std::clamp(2.0 * mi / (h1 + h2), 0.0, 1.0);
}

}  // namespace specnet
