#include "spectight/mapping.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spectight {

namespace {

long long isqrt_floor(long long x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative value");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

int heawood_number(long long genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  // chi = 2 - 2g, so 49 - 24*chi = 1 + 48g
  return static_cast<int>((7 + isqrt_floor(1 + 48 * genus)) / 2);
}

namespace {

double row_distance(const Matrix& coords, int u, int v) {
  double s = 0.0;
  for (int j = 0; j < coords.cols(); ++j) {
    const double d = coords(u, j) - coords(v, j);
    s += d * d;
  }
  return std::sqrt(s);
}

double max_row_norm(const Matrix& coords) {
  double best = 0.0;
  for (int i = 0; i < coords.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < coords.cols(); ++j) s += coords(i, j) * coords(i, j);
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

std::vector<std::pair<int, int>> find_pathological(const Graph& g, const Matrix& coords,
                                                   double threshold) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges())
    if (row_distance(coords, e.u, e.v) <= threshold) out.emplace_back(e.u, e.v);
  return out;
}

int affine_rank(const Matrix& coords, double rank_tol) {
  const int n = coords.rows(), m = coords.cols();
  Matrix centered(n, m);
  for (int j = 0; j < m; ++j) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += coords(i, j);
    mean /= n;
    for (int i = 0; i < n; ++i) centered(i, j) = coords(i, j) - mean;
  }
  return numerical_rank(centered, rank_tol);
}

}  // namespace

Mapping build_mapping(const Graph& g, const Eigenspace& e, const MappingConfig& cfg) {
  const int n = g.n_vertices();
  const int m = e.dimension;
  for (const VertexFunction& b : e.basis)
    if (static_cast<int>(b.size()) != n)
      throw std::invalid_argument("eigenspace basis length does not match vertex count");
  Matrix coords(n, m);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < m; ++j) coords(v, j) = e.basis[j][v];
  const double threshold = cfg.point_tol * max_row_norm(coords);
  Mapping map{g,
              coords,
              m,
              find_pathological(g, coords, threshold),
              {},
              affine_rank(coords, cfg.rank_tol),
              threshold,
              cfg.rank_tol};
  return map;
}

Mapping contract_pathological(const Mapping& input) {
  Mapping cur = input;
  // One edge per step, smallest index keeps the merged vertex and larger
  // indices shift down: a surface can replay the log with the same labels.
  while (!cur.pathological_edges.empty()) {
    const auto [pa, pb] = cur.pathological_edges.front();
    const int a = std::min(pa, pb), b = std::max(pa, pb);
    cur.contraction_log.emplace_back(a, b);

    const int n = cur.graph.n_vertices();
    auto remap = [a, b](int v) {
      if (v == b) v = a;
      return v > b ? v - 1 : v;
    };
    std::map<std::pair<int, int>, double> merged;  // parallel edges collapse, weights sum
    for (const Edge& e : cur.graph.edges()) {
      const int u = remap(e.u), v = remap(e.v);
      if (u == v) continue;  // the contracted edge, or a loop it created
      merged[std::minmax(u, v)] += e.weight;
    }
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> weights;
    for (const auto& [key, w] : merged) {
      pairs.push_back(key);
      weights.push_back(w);
    }
    Graph contracted(n - 1, pairs, weights);

    Matrix coords(n - 1, cur.m);
    for (int v = 0; v < n; ++v) {
      if (v == b) continue;
      for (int j = 0; j < cur.m; ++j) coords(remap(v), j) = cur.coords(v, j);
    }

    cur.graph = std::move(contracted);
    cur.coords = std::move(coords);
    cur.pathological_edges = find_pathological(cur.graph, cur.coords, cur.point_threshold);
  }

  if (cur.graph.n_vertices() < cur.m)
    throw std::runtime_error("contraction left fewer vertices than the eigenspace dimension");
  if (numerical_rank(cur.coords, cur.rank_tol) < cur.m)
    throw std::runtime_error("contracted basis lost rank; eigenvalue grouping is suspect");
  cur.substantial_dim = affine_rank(cur.coords, cur.rank_tol);
  return cur;
}

TwoPieceResult check_two_piece(const Mapping& m, const SamplingConfig& cfg) {
  if (!m.pathological_edges.empty())
    throw std::invalid_argument("two-piece check requires a repaired mapping");
  TwoPieceResult result{true, std::nullopt, std::nullopt, 0};
  const int n = m.graph.n_vertices();
  for (const std::vector<double>& d : tightness_directions(m.m, cfg)) {
    VertexFunction u(n, 0.0);
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      for (int j = 0; j < m.m; ++j) s += d[j] * m.coords(v, j);
      u[v] = s;
    }
    ++result.directions_checked;
    const TightnessResult r = is_tight_function(m.graph, snap_values(u, cfg.value_snap));
    if (!r.tight) {
      result.pass = false;
      result.witness = r.witness;
      result.direction = d;
      return result;
    }
  }
  return result;
}

BoundCertificate verify_bound(int m, int genus, GenusSource source) {
  const int chr = heawood_number(genus);
  return {m, genus, source, chr, m <= chr - 1};
}

BoundCertificate verify_bound(const Graph& g, const Eigenspace& e) {
  if (!g.declared_genus())
    throw std::runtime_error("graph has no declared genus; supply a rotation system instead");
  return verify_bound(e.dimension, *g.declared_genus(), GenusSource::family_formula);
}

BoundCertificate verify_bound(const CombinatorialSurface& s, const Eigenspace& e) {
  return verify_bound(e.dimension, s.genus, GenusSource::embedding_upper_bound);
}

namespace {

std::string shortest_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

bool face_is_planar(const std::vector<std::array<double, 3>>& pts, double rank_tol) {
  if (pts.size() <= 3) return true;
  Matrix rel(static_cast<int>(pts.size()) - 1, 3);
  for (size_t i = 1; i < pts.size(); ++i)
    for (int j = 0; j < 3; ++j) rel(static_cast<int>(i) - 1, j) = pts[i][j] - pts[0][j];
  return numerical_rank(rel, rank_tol) <= 2;
}

}  // namespace

void write_off(std::ostream& out, const Mapping& m, const CombinatorialSurface& surface,
               const std::array<int, 3>& projection) {
  if (!m.pathological_edges.empty())
    throw std::invalid_argument("mesh export requires a repaired mapping");
  if (surface.graph.n_vertices() != m.graph.n_vertices())
    throw std::invalid_argument("surface vertex count does not match the mapping");
  for (int idx : projection) {
    if (idx < 0 || idx > m.m)
      throw std::invalid_argument("projection index " + std::to_string(idx) +
                                  " out of range for dimension " + std::to_string(m.m));
  }
  const int n = m.graph.n_vertices();
  auto coordinate = [&](int v, int idx) { return idx == m.m ? 0.0 : m.coords(v, idx); };

  // faces first: triangulation decides the face count in the header
  std::vector<std::vector<int>> face_lines;
  for (const std::vector<int>& face : surface.faces) {
    if (face.size() == 3) {
      face_lines.push_back(face);
      continue;
    }
    std::vector<std::array<double, 3>> pts;
    for (int v : face)
      pts.push_back({coordinate(v, projection[0]), coordinate(v, projection[1]),
                     coordinate(v, projection[2])});
    if (face_is_planar(pts, m.rank_tol)) {
      face_lines.push_back(face);
      continue;
    }
    const size_t root =
        std::min_element(face.begin(), face.end()) - face.begin();  // lowest-index vertex
    const size_t k = face.size();
    for (size_t j = 1; j + 1 < k; ++j)
      face_lines.push_back({face[root], face[(root + j) % k], face[(root + j + 1) % k]});
  }

  out << "OFF\n" << n << ' ' << face_lines.size() << " 0\n";
  for (int v = 0; v < n; ++v)
    out << shortest_double(coordinate(v, projection[0])) << ' '
        << shortest_double(coordinate(v, projection[1])) << ' '
        << shortest_double(coordinate(v, projection[2])) << '\n';
  for (const std::vector<int>& f : face_lines) {
    out << f.size();
    for (int v : f) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace spectight
