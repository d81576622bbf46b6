#pragma once

#include "spectight/graph.hpp"
#include "spectight/linalg.hpp"

namespace spectight {

inline constexpr double kDefaultGroupTol = 1e-8;

enum class OperatorKind { laplacian, schroedinger };

/// Weighted graph Laplacian, or Schroedinger operator when a diagonal
/// potential is supplied.
struct SymmetricOperator {
  Matrix matrix;
  OperatorKind kind;
  std::optional<std::vector<double>> potential;
};

SymmetricOperator build_operator(const Graph& g,
                                 std::optional<std::vector<double>> potential = std::nullopt);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // orthonormal columns, column k pairs with eigenvalues[k]
  double residual_norm;
  OperatorKind kind;
};

double spectral_radius(const Spectrum& s);

Spectrum eigendecompose(const SymmetricOperator& op, int max_sweeps = 100);

/// Maximal runs of consecutive eigenvalues whose gaps stay within
/// rel_tol * max(1, spectral radius).
struct EigenvalueGroup {
  double value;  // group mean
  int multiplicity;
  int first;  // 0-based index range [first, last]
  int last;
};
std::vector<EigenvalueGroup> group_eigenvalues(const Spectrum& s, double rel_tol = kDefaultGroupTol);

struct Eigenspace {
  double eigenvalue;
  int dimension;
  std::vector<VertexFunction> basis;  // orthonormal
  double group_tolerance;
};

/// The second eigenvalue group. For Laplacians the block is re-orthogonalized
/// against the all-ones vector; degenerate blocks are then rotated into the
/// eigenbasis of the vertex-index form restricted to the block, so the
/// returned basis does not depend on solver internals. Throws if the first
/// group has multiplicity > 1 (disconnected graph) or no second group exists.
Eigenspace lambda2_eigenspace(const Spectrum& s, double rel_tol = kDefaultGroupTol);

}  // namespace spectight
