#include "spectight/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spectight {

SymmetricOperator build_operator(const Graph& g, std::optional<std::vector<double>> potential) {
  const int n = g.n_vertices();
  if (potential && static_cast<int>(potential->size()) != n)
    throw std::invalid_argument("potential length does not match vertex count");
  Matrix m(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = -e.weight;
    m(e.v, e.u) = -e.weight;
  }
  // diagonal = negated off-diagonal row sum, so rows sum to zero exactly
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) s += m(i, j);
    m(i, i) = -s;
  }
  if (potential)
    for (int i = 0; i < n; ++i) m(i, i) += (*potential)[i];
  return {std::move(m), potential ? OperatorKind::schroedinger : OperatorKind::laplacian,
          std::move(potential)};
}

double spectral_radius(const Spectrum& s) {
  double r = 0.0;
  for (double v : s.eigenvalues) r = std::max(r, std::abs(v));
  return r;
}

Spectrum eigendecompose(const SymmetricOperator& op, int max_sweeps) {
  SymmetricEigen eig = jacobi_eigendecompose(op.matrix, max_sweeps);
  return {std::move(eig.values), std::move(eig.vectors), eig.residual_norm, op.kind};
}

std::vector<EigenvalueGroup> group_eigenvalues(const Spectrum& s, double rel_tol) {
  const double scale = std::max(1.0, spectral_radius(s));
  std::vector<EigenvalueGroup> groups;
  const int n = static_cast<int>(s.eigenvalues.size());
  int start = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == n || std::abs(s.eigenvalues[k] - s.eigenvalues[k - 1]) > rel_tol * scale) {
      double mean = 0.0;
      for (int i = start; i < k; ++i) mean += s.eigenvalues[i];
      mean /= (k - start);
      groups.push_back({mean, k - start, start, k - 1});
      start = k;
    }
  }
  return groups;
}

namespace {

void subtract_projection(VertexFunction& v, const VertexFunction& unit) {
  double dot = 0.0;
  for (size_t i = 0; i < v.size(); ++i) dot += v[i] * unit[i];
  for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * unit[i];
}

double norm2(const VertexFunction& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void fix_sign(VertexFunction& v) {
  size_t best = 0;
  double mag = 0.0;
  for (size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > mag) {
      mag = std::abs(v[i]);
      best = i;
    }
  if (v[best] < 0.0)
    for (double& x : v) x = -x;
}

// Rotate a degenerate block into the eigenbasis of the vertex-index quadratic
// form restricted to it; makes the basis independent of solver internals.
void canonicalize_block(std::vector<VertexFunction>& basis) {
  const int m = static_cast<int>(basis.size());
  if (m < 2) return;
  const int n = static_cast<int>(basis[0].size());
  Matrix p(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += basis[i][k] * static_cast<double>(k) * basis[j][k];
      p(i, j) = p(j, i) = s;
    }
  SymmetricEigen rot = jacobi_eigendecompose(p);
  std::vector<VertexFunction> out(m, VertexFunction(n, 0.0));
  for (int c = 0; c < m; ++c)
    for (int i = 0; i < m; ++i) {
      const double w = rot.vectors(i, c);
      for (int k = 0; k < n; ++k) out[c][k] += w * basis[i][k];
    }
  basis = std::move(out);
}

}  // namespace

Eigenspace lambda2_eigenspace(const Spectrum& s, double rel_tol) {
  const std::vector<EigenvalueGroup> groups = group_eigenvalues(s, rel_tol);
  if (groups.empty()) throw std::runtime_error("empty spectrum");
  if (groups[0].multiplicity > 1)
    throw std::runtime_error("first eigenvalue has multiplicity " +
                             std::to_string(groups[0].multiplicity) +
                             "; the graph is disconnected");
  if (groups.size() < 2) throw std::runtime_error("no second eigenvalue group");

  const EigenvalueGroup& g2 = groups[1];
  const int n = s.eigenvectors.rows();
  std::vector<VertexFunction> basis;
  for (int k = g2.first; k <= g2.last; ++k) basis.push_back(s.eigenvectors.column(k));

  if (s.kind == OperatorKind::laplacian) {
    const VertexFunction ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (VertexFunction& v : basis) subtract_projection(v, ones);
  }
  // modified Gram-Schmidt within the block
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < i; ++j) subtract_projection(basis[i], basis[j]);
    const double nrm = norm2(basis[i]);
    if (nrm < 1e-12)
      throw std::runtime_error("eigenspace basis collapsed during re-orthogonalization");
    for (double& x : basis[i]) x /= nrm;
  }
  canonicalize_block(basis);
  for (VertexFunction& v : basis) fix_sign(v);

  return {g2.value, g2.multiplicity, std::move(basis), rel_tol};
}

}  // namespace spectight
