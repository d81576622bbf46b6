#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spectight {

enum class FamilyTag { path, cycle, complete, triangular_torus, hamming, product, custom };

struct Edge {
  int u;
  int v;
  double weight;
};

/// Undirected simple loop-free weighted graph, immutable after construction.
class Graph {
 public:
  Graph(int n_vertices, const std::vector<std::pair<int, int>>& edges,
        const std::vector<double>& weights = {},
        std::optional<FamilyTag> family = std::nullopt,
        std::optional<int> declared_genus = std::nullopt);

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  double weighted_degree(int v) const;
  bool has_edge(int u, int v) const;

  std::optional<FamilyTag> family() const { return family_; }
  std::optional<int> declared_genus() const { return declared_genus_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<FamilyTag> family_;
  std::optional<int> declared_genus_;
};

/// Validated construction from raw edge pairs; default weight 1 per edge.
Graph build_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<double>& weights = {});

Graph path_graph(int n);              // n >= 2
Graph cycle_graph(int n);             // n >= 3
Graph complete_graph(int n);          // n >= 1
Graph triangular_torus_graph(int n);  // n >= 4, the n x n 6-regular grid torus
Graph hamming_graph(const std::vector<int>& alphabet_sizes);  // each >= 2

/// Orientable genus of K_n from the Ringel-Youngs formula.
int complete_graph_genus(int n);

/// Cartesian product. Vertex (g, h) gets index g * |V_H| + h; edge weights
/// are inherited from the factor that supplies the edge.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph cartesian_product(const std::vector<Graph>& factors);

using VertexFunction = std::vector<double>;

/// Connected components of the subgraph induced by `subset` (the whole
/// graph when absent). The empty set has zero components and counts as
/// connected.
struct ComponentSplit {
  bool connected;
  std::vector<std::vector<int>> components;
};
ComponentSplit connected_components(const Graph& g);
ComponentSplit connected_components(const Graph& g, const std::vector<int>& subset);
int count_components(const Graph& g, const std::vector<int>& subset);
bool is_connected(const Graph& g);

/// The two level-induced subgraphs at level s:
/// plus = {i : u(i) >= s}, minus = {i : u(i) <= s}.
struct LevelPartition {
  double level;
  std::vector<int> plus_vertices;
  std::vector<int> minus_vertices;
  int plus_components;
  int minus_components;
};
LevelPartition induced_level_subgraphs(const Graph& g, const VertexFunction& u, double level);

}  // namespace spectight
