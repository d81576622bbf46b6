#include "spectight/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spectight {

SignGraphReport sign_graphs(const Graph& g, const VertexFunction& u, SignMode mode) {
  if (static_cast<int>(u.size()) != g.n_vertices())
    throw std::invalid_argument("function length does not match vertex count");
  std::vector<int> plus, minus;
  for (int i = 0; i < g.n_vertices(); ++i) {
    if (mode == SignMode::weak ? u[i] >= 0.0 : u[i] > 0.0) plus.push_back(i);
    if (mode == SignMode::weak ? u[i] <= 0.0 : u[i] < 0.0) minus.push_back(i);
  }
  SignGraphReport report{mode, 0, {}};
  for (const auto& comp : connected_components(g, plus).components)
    report.components.push_back({+1, comp});
  for (const auto& comp : connected_components(g, minus).components)
    report.components.push_back({-1, comp});
  report.count = static_cast<int>(report.components.size());
  return report;
}

CourantReport check_courant(const Graph& g, const Spectrum& s) {
  CourantReport report{{}, true};
  const int n = g.n_vertices();
  for (int k = 0; k < n; ++k) {
    const int count = sign_graphs(g, s.eigenvectors.column(k), SignMode::weak).count;
    const int bound = k + 1;
    const bool ok = count <= bound;
    report.rows.push_back({bound, count, bound, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

namespace {

std::vector<double> distinct_values(const VertexFunction& u) {
  std::vector<double> v(u);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

// Collapse clusters of nearly equal values onto the cluster's smallest
// member. Fiber-constant eigenfunctions come out of the solver with ties
// split at rounding level; without this the exact scan cuts along them.
VertexFunction snap_values(const VertexFunction& u, double rel_tol) {
  if (rel_tol <= 0.0 || u.empty()) return u;
  double scale = 1.0;
  for (double x : u) scale = std::max(scale, std::abs(x));
  const double gap = rel_tol * scale;
  const std::vector<double> values = distinct_values(u);
  std::vector<double> snapped_to(values.size());
  double representative = values.empty() ? 0.0 : values[0];
  for (size_t k = 0; k < values.size(); ++k) {
    if (k > 0 && values[k] - values[k - 1] > gap) representative = values[k];
    snapped_to[k] = representative;
  }
  VertexFunction out(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    const size_t k = std::lower_bound(values.begin(), values.end(), u[i]) - values.begin();
    out[i] = snapped_to[k];
  }
  return out;
}

Lemma1Result check_lemma1(const Graph& g, const VertexFunction& u) {
  std::vector<double> levels = distinct_values(u);
  if (std::find(levels.begin(), levels.end(), 0.0) == levels.end()) {
    levels.push_back(0.0);
    std::sort(levels.begin(), levels.end());
  }
  for (double s : levels) {
    const LevelPartition p = induced_level_subgraphs(g, u, s);
    if (s <= 0.0 && p.plus_components > 1) return {false, s, Side::plus, p.plus_components};
    if (s >= 0.0 && p.minus_components > 1) return {false, s, Side::minus, p.minus_components};
  }
  return {true};
}

TightnessResult is_tight_function(const Graph& g, const VertexFunction& u) {
  TightnessResult r{true, std::nullopt, 0, std::nullopt};
  for (double s : distinct_values(u)) {
    const LevelPartition p = induced_level_subgraphs(g, u, s);
    ++r.levels_checked;
    if (p.plus_components > 1) {
      r.tight = false;
      r.witness = TightnessWitness{s, Side::plus, p.plus_components};
      return r;
    }
    if (p.minus_components > 1) {
      r.tight = false;
      r.witness = TightnessWitness{s, Side::minus, p.minus_components};
      return r;
    }
  }
  return r;
}

TightnessResult is_tight_space(const Graph& g, const Eigenspace& e, const SamplingConfig& cfg) {
  if (e.dimension < 1) throw std::invalid_argument("eigenspace dimension must be >= 1");
  const int n = g.n_vertices();
  TightnessResult total{true, std::nullopt, 0, std::nullopt};
  for (const std::vector<double>& d : tightness_directions(e.dimension, cfg)) {
    VertexFunction u(n, 0.0);
    for (int i = 0; i < e.dimension; ++i)
      for (int v = 0; v < n; ++v) u[v] += d[i] * e.basis[i][v];
    const TightnessResult r = is_tight_function(g, snap_values(u, cfg.value_snap));
    total.levels_checked += r.levels_checked;
    if (!r.tight) {
      total.tight = false;
      total.witness = r.witness;
      total.direction = d;
      return total;
    }
  }
  return total;
}

CriticalReport critical_points(const CombinatorialSurface& surface, const VertexFunction& u) {
  const Graph& g = surface.graph;
  if (static_cast<int>(u.size()) != g.n_vertices())
    throw std::invalid_argument("function length does not match vertex count");
  CriticalReport rep{0, 0, 0, std::vector<int>(g.n_vertices(), 0), 0, surface.euler_characteristic, false};
  for (int v = 0; v < g.n_vertices(); ++v) {
    const std::vector<int>& link = surface.rotation[v];
    // symbolic perturbation: ties resolved by vertex index
    auto higher = [&](int w) { return u[w] > u[v] || (u[w] == u[v] && w > v); };
    const int deg = static_cast<int>(link.size());
    int changes = 0;
    for (int k = 0; k < deg; ++k)
      if (higher(link[k]) != higher(link[(k + 1) % deg])) ++changes;
    rep.morse_sum += 1 - changes / 2;
    if (changes == 0) {
      if (higher(link[0]))
        ++rep.minima;
      else
        ++rep.maxima;
    } else if (changes >= 4) {
      rep.saddle_multiplicities[v] = changes / 2 - 1;
      rep.saddles += changes / 2 - 1;
    }
  }
  rep.morse_ok = rep.morse_sum == rep.chi;
  return rep;
}

}  // namespace spectight
