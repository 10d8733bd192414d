#include "specnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "specnet/error.hpp"
#include "specnet/io.hpp"

namespace specnet {

std::string to_string(WeightTransform t) {
  switch (t) {
    case WeightTransform::signed_value: return "signed";
    case WeightTransform::absolute: return "absolute";
    case WeightTransform::shifted: return "shifted";
  }
  return "?";
}

WeightTransform weight_transform_from_string(const std::string& s) {
  if (s == "signed") return WeightTransform::signed_value;
  if (s == "absolute") return WeightTransform::absolute;
  if (s == "shifted") return WeightTransform::shifted;
  throw ValidationError("unknown weight transform '" + s + "'");
}

double apply_transform(WeightTransform t, double s) {
  switch (t) {
    case WeightTransform::signed_value: return s;
    case WeightTransform::absolute: return std::abs(s);
    case WeightTransform::shifted: return 0.5 * (1.0 + s);
  }
  return s;
}

WeightedNetwork::WeightedNetwork(std::vector<std::string> labels, std::vector<Edge> edges,
                                 WeightTransform transform)
    : labels_(std::move(labels)), edges_(std::move(edges)), transform_(transform) {
  const int n = num_nodes();
  adj_.assign(static_cast<std::size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    Edge& e = edges_[k];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("self-loop on node " + labels_[static_cast<std::size_t>(e.u)]);
    if (!std::isfinite(e.weight)) throw ValidationError("non-finite edge weight");
    if (!seen.emplace(e.u, e.v).second)
      throw ValidationError("duplicate edge " + labels_[static_cast<std::size_t>(e.u)] + "-" +
                            labels_[static_cast<std::size_t>(e.v)]);
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight, k});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight, k});
  }
}

WeightedNetwork WeightedNetwork::from_edges(int n, std::vector<Edge> edges,
                                            WeightTransform transform) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return WeightedNetwork(std::move(labels), std::move(edges), transform);
}

WeightedNetwork WeightedNetwork::from_adjacency(const Eigen::MatrixXd& a,
                                                std::vector<std::string> labels) {
  const int n = static_cast<int>(a.rows());
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != 0.0) edges.push_back({i, j, a(i, j)});
  return WeightedNetwork(std::move(labels), std::move(edges));
}

double WeightedNetwork::strength(int u) const {
  double s = 0.0;
  for (const auto& nb : neighbors(u)) s += nb.weight;
  return s;
}

std::vector<double> WeightedNetwork::strengths() const {
  std::vector<double> s(static_cast<std::size_t>(num_nodes()));
  for (int u = 0; u < num_nodes(); ++u) s[static_cast<std::size_t>(u)] = strength(u);
  return s;
}

double WeightedNetwork::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges_) s += e.weight;
  return s;
}

bool WeightedNetwork::has_negative_weight() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight < 0.0; });
}

double WeightedNetwork::weight(int u, int v) const {
  for (const auto& nb : neighbors(u))
    if (nb.node == v) return nb.weight;
  return 0.0;
}

bool WeightedNetwork::has_edge(int u, int v) const {
  const auto& nbs = neighbors(u);
  return std::any_of(nbs.begin(), nbs.end(), [v](const Neighbor& nb) { return nb.node == v; });
}

Eigen::MatrixXd WeightedNetwork::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(num_nodes(), num_nodes());
  for (const auto& e : edges_) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

std::vector<int> WeightedNetwork::components() const {
  std::vector<int> comp(static_cast<std::size_t>(num_nodes()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < num_nodes(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& nb : neighbors(u))
        if (comp[static_cast<std::size_t>(nb.node)] < 0) {
          comp[static_cast<std::size_t>(nb.node)] = next;
          stack.push_back(nb.node);
        }
    }
    ++next;
  }
  return comp;
}

bool WeightedNetwork::is_connected() const {
  if (num_nodes() == 0) return true;
  const auto c = components();
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::string network_to_csv(const WeightedNetwork& net) {
  std::string out = "source,target,weight\n";
  for (const auto& e : net.edges())
    out += csv_field(net.labels()[static_cast<std::size_t>(e.u)]) + "," +
           csv_field(net.labels()[static_cast<std::size_t>(e.v)]) + "," +
           format_double(e.weight) + "\n";
  return out;
}

WeightedNetwork network_from_csv(std::string_view text, std::vector<std::string> labels) {
  const bool fixed = !labels.empty();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  auto node = [&](const std::string& name, std::size_t row) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (fixed) throw ValidationError("row " + std::to_string(row) + ": unknown node '" + name + "'");
    const int id = static_cast<int>(labels.size());
    labels.push_back(name);
    index[name] = id;
    return id;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty edge list");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "source" || header[1] != "target" || header[2] != "weight")
    throw ParseError("edge list header must be source,target,weight");
  std::vector<Edge> edges;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = split_csv_line(line);
    if (f.size() < 3) throw ParseError("row " + std::to_string(row) + ": expected 3 fields");
    const int u = node(f[0], row);
    const int v = node(f[1], row);
    edges.push_back({u, v, parse_double(f[2])});
  }
  return WeightedNetwork(std::move(labels), std::move(edges));
}

nlohmann::json network_to_json(const WeightedNetwork& net) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["labels"] = net.labels();
  j["weight_transform"] = to_string(net.transform());
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : net.edges()) edges.push_back({e.u, e.v, e.weight});
  return j;
}

WeightedNetwork network_from_json(const nlohmann::json& j) {
  if (j.value("schema_version", -1) != 1) throw ParseError("unsupported network schema_version");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
  return WeightedNetwork(j.at("labels").get<std::vector<std::string>>(), std::move(edges),
                         weight_transform_from_string(j.at("weight_transform").get<std::string>()));
}

}  // namespace specnet
