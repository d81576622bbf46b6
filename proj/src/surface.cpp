#include "spectight/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace spectight {

CombinatorialSurface trace_embedding(const Graph& g, const RotationSystem& rotation) {
  const int n = g.n_vertices();
  if (static_cast<int>(rotation.size()) != n)
    throw std::invalid_argument("rotation system has " + std::to_string(rotation.size()) +
                                " entries for " + std::to_string(n) + " vertices");
  if (!is_connected(g)) throw std::invalid_argument("embedding requires a connected graph");

  // position of each neighbor within every vertex's cyclic order
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> expected = g.neighbors(v);
    if (expected.empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " has no incident edges");
    std::vector<int> got = rotation[v];
    std::sort(expected.begin(), expected.end());
    std::vector<int> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    if (sorted_got != expected)
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
    for (size_t k = 0; k < got.size(); ++k) pos[v][got[k]] = static_cast<int>(k);
  }

  // trace: after (u -> v) continue with (v -> w), w the successor of u around v
  std::map<std::pair<int, int>, bool> seen;
  for (int v = 0; v < n; ++v)
    for (int w : rotation[v]) seen[{v, w}] = false;

  std::vector<std::vector<int>> faces;
  for (auto& [start, visited] : seen) {
    if (visited) continue;
    std::vector<int> walk;
    std::pair<int, int> cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      walk.push_back(cur.first);
      auto [u, v] = cur;
      int k = pos[v][u];
      int w = rotation[v][(k + 1) % rotation[v].size()];
      cur = {v, w};
    }
    faces.push_back(std::move(walk));
  }

  const int chi = n - static_cast<int>(g.edges().size()) + static_cast<int>(faces.size());
  if (chi % 2 != 0) throw std::runtime_error("face tracing produced odd Euler characteristic");
  return CombinatorialSurface{g, rotation, std::move(faces), chi, (2 - chi) / 2};
}

RotationSystem natural_rotation(const Graph& g) {
  RotationSystem r(g.n_vertices());
  for (int v = 0; v < g.n_vertices(); ++v) {
    r[v] = g.neighbors(v);
    std::sort(r[v].begin(), r[v].end());
  }
  return r;
}

RotationSystem triangular_torus_rotation(int n) {
  if (n < 4) throw std::invalid_argument("triangular torus requires n >= 4");
  auto idx = [n](int x, int y) { return ((x % n + n) % n) * n + ((y % n + n) % n); };
  RotationSystem r(n * n);
  // the six lattice directions in angular order
  const std::pair<int, int> dirs[6] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (auto [dx, dy] : dirs) r[idx(x, y)].push_back(idx(x + dx, y + dy));
  return r;
}

RotationSystem k7_torus_rotation() {
  RotationSystem r(7);
  const int offsets[6] = {1, 3, 2, 6, 4, 5};
  for (int i = 0; i < 7; ++i)
    for (int o : offsets) r[i].push_back((i + o) % 7);
  return r;
}

namespace {

struct Slot {
  int other;
  int edge_id;
};

}  // namespace

CombinatorialSurface contract_surface_edge(const CombinatorialSurface& s, int alpha, int beta) {
  const Graph& g = s.graph;
  const int n = g.n_vertices();
  if (alpha == beta) throw std::invalid_argument("cannot contract a vertex with itself");
  const int a = std::min(alpha, beta), b = std::max(alpha, beta);

  std::map<std::pair<int, int>, int> edge_id;
  for (size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    edge_id[std::minmax(e.u, e.v)] = static_cast<int>(k);
  }
  auto it = edge_id.find({a, b});
  if (it == edge_id.end()) throw std::invalid_argument("no edge between the vertices to contract");
  const int contracted = it->second;

  std::vector<std::vector<Slot>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int w : s.rotation[v]) rot[v].push_back({w, edge_id.at(std::minmax(v, w))});

  // splice b's cyclic order into a's at the contracted slot
  auto find_slot = [&](int v, int id) {
    for (size_t k = 0; k < rot[v].size(); ++k)
      if (rot[v][k].edge_id == id) return static_cast<int>(k);
    throw std::logic_error("slot not found");
  };
  const int ia = find_slot(a, contracted), ib = find_slot(b, contracted);
  std::vector<Slot> merged;
  for (int k = 0; k < ia; ++k) merged.push_back(rot[a][k]);
  const int db = static_cast<int>(rot[b].size());
  for (int k = 1; k < db; ++k) merged.push_back(rot[b][(ib + k) % db]);
  for (int k = ia + 1; k < static_cast<int>(rot[a].size()); ++k) merged.push_back(rot[a][k]);

  // endpoints of b now belong to a
  for (Slot& sl : merged)
    if (sl.other == b) sl.other = a;
  std::vector<char> removed(g.edges().size(), 0);
  removed[contracted] = 1;

  // drop loops, then keep one edge per neighbor (weights accumulate)
  std::vector<double> weight(g.edges().size());
  for (size_t k = 0; k < g.edges().size(); ++k) weight[k] = g.edges()[k].weight;
  std::vector<Slot> kept;
  std::map<int, int> first_edge_to;  // neighbor -> kept edge id
  for (const Slot& sl : merged) {
    if (sl.other == a) {  // loop created by the contraction
      removed[sl.edge_id] = 1;
      continue;
    }
    auto fit = first_edge_to.find(sl.other);
    if (fit != first_edge_to.end()) {
      weight[fit->second] += weight[sl.edge_id];
      removed[sl.edge_id] = 1;
      continue;
    }
    first_edge_to.emplace(sl.other, sl.edge_id);
    kept.push_back(sl);
  }

  // rebuild the graph and rotation with b removed and indices shifted down
  auto remap = [b](int v) { return v > b ? v - 1 : v; };
  std::vector<std::pair<int, int>> new_edges;
  std::vector<double> new_weights;
  for (size_t k = 0; k < g.edges().size(); ++k) {
    if (removed[k]) continue;
    const Edge& e = g.edges()[k];
    int u = e.u == b ? a : e.u, v = e.v == b ? a : e.v;
    new_edges.emplace_back(remap(u), remap(v));
    new_weights.push_back(weight[k]);
  }
  Graph contracted_graph(n - 1, new_edges, new_weights);

  RotationSystem new_rot(n - 1);
  for (int v = 0; v < n; ++v) {
    if (v == b) continue;
    const std::vector<Slot>& src = (v == a) ? kept : rot[v];
    for (const Slot& sl : src) {
      if (removed[sl.edge_id]) continue;
      int w = sl.other == b ? a : sl.other;
      new_rot[remap(v)].push_back(remap(w));
    }
  }
  return trace_embedding(contracted_graph, new_rot);
}

}  // namespace spectight
