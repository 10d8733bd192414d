#include "specnet/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <iterator>

namespace specnet {

namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                    boost::property<boost::vertex_index_t, int>,
                                    boost::property<boost::edge_index_t, int>>;
using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;

Graph build(int n, std::span<const NodePair> edges) {
  Graph g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) boost::add_edge(u, v, g);
  auto index = boost::get(boost::edge_index, g);
  int count = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(index, *it, count++);
  return g;
}

/// Edge-minimal non-planar subgraph of `edges`, i.e. a K5 or K3,3 subdivision.
std::vector<NodePair> minimal_nonplanar(int n, std::vector<NodePair> edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    std::vector<NodePair> rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost::boyer_myrvold_planarity_test(build(n, rest))) edges = std::move(rest);
  }
  return edges;
}

}  // namespace

PlanarityResult is_planar(int n, std::span<const NodePair> edges) {
  Graph g = build(n, edges);
  std::vector<std::vector<EdgeDesc>> embedding(static_cast<std::size_t>(n));
  std::vector<EdgeDesc> kuratowski;
  PlanarityResult out;
  out.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (out.planar) {
    out.rotation.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
      for (const auto& e : embedding[static_cast<std::size_t>(u)]) {
        const int s = static_cast<int>(boost::source(e, g));
        const int t = static_cast<int>(boost::target(e, g));
        out.rotation[static_cast<std::size_t>(u)].push_back(s == u ? t : s);
      }
  } else {
    std::vector<NodePair> k;
    for (const auto& e : kuratowski)
      k.emplace_back(static_cast<int>(boost::source(e, g)), static_cast<int>(boost::target(e, g)));
    out.kuratowski = minimal_nonplanar(n, std::move(k));
  }
  return out;
}

bool planar(int n, std::span<const NodePair> edges) {
  Graph g = build(n, edges);
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace specnet
