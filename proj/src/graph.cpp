#include "spectight/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace spectight {

Graph::Graph(int n_vertices, const std::vector<std::pair<int, int>>& edges,
             const std::vector<double>& weights, std::optional<FamilyTag> family,
             std::optional<int> declared_genus)
    : n_(n_vertices), family_(family), declared_genus_(declared_genus) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (!weights.empty() && weights.size() != edges.size())
    throw std::invalid_argument("weights length " + std::to_string(weights.size()) +
                                " does not match edge count " + std::to_string(edges.size()));
  adjacency_.resize(n_);
  std::set<std::pair<int, int>> seen;
  for (size_t k = 0; k < edges.size(); ++k) {
    int u = edges[k].first, v = edges[k].second;
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for " + std::to_string(n_) + " vertices");
    if (u == v)
      throw std::invalid_argument("self-loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const std::pair<int, int> key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    double w = weights.empty() ? 1.0 : weights[k];
    if (!(w > 0.0))
      throw std::invalid_argument("nonpositive weight " + std::to_string(w) + " on edge (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    edges_.push_back({u, v, w});
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
}

double Graph::weighted_degree(int v) const {
  double d = 0.0;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) d += e.weight;
  return d;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adjacency_.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

Graph build_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<double>& weights) {
  return Graph(n_vertices, edges, weights);
}

Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path requires n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e, {}, FamilyTag::path, 0);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e, {}, FamilyTag::cycle, 0);
}

int complete_graph_genus(int n) {
  if (n <= 2) return 0;
  return static_cast<int>(std::ceil((n - 3) * (n - 4) / 12.0));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e, {}, FamilyTag::complete, complete_graph_genus(n));
}

Graph triangular_torus_graph(int n) {
  if (n < 4) throw std::invalid_argument("triangular torus requires n >= 4");
  auto idx = [n](int x, int y) { return ((x % n + n) % n) * n + ((y % n + n) % n); };
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (auto [dx, dy] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
        const int a = idx(x, y), b = idx(x + dx, y + dy);
        const std::pair<int, int> key = std::minmax(a, b);
        if (seen.insert(key).second) e.emplace_back(key.first, key.second);
      }
  return Graph(n * n, e, {}, FamilyTag::triangular_torus, 1);
}

namespace {

// Genus is declared only where a family formula applies: a single factor is a
// complete graph; hypercubes Q_k (k <= 3) and the K3 x K2 prism are planar.
std::optional<int> hamming_genus(const std::vector<int>& q) {
  if (q.size() == 1) return complete_graph_genus(q[0]);
  bool all_two = std::all_of(q.begin(), q.end(), [](int x) { return x == 2; });
  if (all_two && q.size() <= 3) return 0;
  std::vector<int> s = q;
  std::sort(s.begin(), s.end());
  if (s == std::vector<int>{2, 3}) return 0;
  return std::nullopt;
}

}  // namespace

Graph hamming_graph(const std::vector<int>& alphabet_sizes) {
  if (alphabet_sizes.empty()) throw std::invalid_argument("hamming requires at least one factor");
  for (int q : alphabet_sizes)
    if (q < 2) throw std::invalid_argument("hamming alphabet size must be >= 2");
  std::vector<Graph> factors;
  factors.reserve(alphabet_sizes.size());
  for (int q : alphabet_sizes) factors.push_back(complete_graph(q));
  Graph p = cartesian_product(factors);
  std::vector<std::pair<int, int>> e;
  std::vector<double> w;
  for (const Edge& edge : p.edges()) {
    e.emplace_back(edge.u, edge.v);
    w.push_back(edge.weight);
  }
  return Graph(p.n_vertices(), e, w, FamilyTag::hamming, hamming_genus(alphabet_sizes));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.n_vertices(), nh = h.n_vertices();
  std::vector<std::pair<int, int>> e;
  std::vector<double> w;
  for (int a = 0; a < ng; ++a)
    for (const Edge& eh : h.edges()) {
      e.emplace_back(a * nh + eh.u, a * nh + eh.v);
      w.push_back(eh.weight);
    }
  for (const Edge& eg : g.edges())
    for (int b = 0; b < nh; ++b) {
      e.emplace_back(eg.u * nh + b, eg.v * nh + b);
      w.push_back(eg.weight);
    }
  return Graph(ng * nh, e, w, FamilyTag::product, std::nullopt);
}

Graph cartesian_product(const std::vector<Graph>& factors) {
  if (factors.empty()) throw std::invalid_argument("product of zero graphs");
  Graph p = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) p = cartesian_product(p, factors[i]);
  return p;
}

namespace {

std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.n_vertices(), 0), seen(g.n_vertices(), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.n_vertices()) throw std::invalid_argument("subset vertex out of range");
    in[v] = 1;
  }
  std::vector<std::vector<int>> comps;
  for (int s : subset) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int nb : g.neighbors(x))
        if (in[nb] && !seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

ComponentSplit connected_components(const Graph& g, const std::vector<int>& subset) {
  ComponentSplit r;
  r.components = components_of(g, subset);
  r.connected = r.components.size() <= 1;
  return r;
}

ComponentSplit connected_components(const Graph& g) {
  std::vector<int> all(g.n_vertices());
  for (int i = 0; i < g.n_vertices(); ++i) all[i] = i;
  return connected_components(g, all);
}

int count_components(const Graph& g, const std::vector<int>& subset) {
  return static_cast<int>(components_of(g, subset).size());
}

bool is_connected(const Graph& g) { return connected_components(g).connected; }

LevelPartition induced_level_subgraphs(const Graph& g, const VertexFunction& u, double level) {
  if (static_cast<int>(u.size()) != g.n_vertices())
    throw std::invalid_argument("function length does not match vertex count");
  LevelPartition p;
  p.level = level;
  for (int i = 0; i < g.n_vertices(); ++i) {
    if (u[i] >= level) p.plus_vertices.push_back(i);
    if (u[i] <= level) p.minus_vertices.push_back(i);
  }
  p.plus_components = count_components(g, p.plus_vertices);
  p.minus_components = count_components(g, p.minus_vertices);
  return p;
}

}  // namespace spectight
