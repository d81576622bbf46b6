#pragma once

#include <optional>

#include "spectight/graph.hpp"
#include "spectight/sampling.hpp"
#include "spectight/spectrum.hpp"
#include "spectight/surface.hpp"

namespace spectight {

enum class SignMode { weak, strong };
enum class Side { plus, minus };

/// Maximal connected subgraphs of one sign. In weak mode zero vertices join
/// components of both signs; in strong mode they join none.
struct SignComponent {
  int sign;  // +1 or -1
  std::vector<int> vertices;
};
struct SignGraphReport {
  SignMode mode;
  int count;
  std::vector<SignComponent> components;
};
SignGraphReport sign_graphs(const Graph& g, const VertexFunction& u, SignMode mode);

/// Discrete Courant check: eigenvector k (1-based index n = k+1) may have at
/// most n weak sign-graphs. Every stored vector of a degenerate group is
/// checked against its own position.
struct CourantRow {
  int index;  // 1-based
  int weak_count;
  int bound;
  bool pass;
};
struct CourantReport {
  std::vector<CourantRow> rows;
  bool pass;
};
CourantReport check_courant(const Graph& g, const Spectrum& s);

/// Fiedler's connectivity property of lambda2-eigenfunctions: G+(u,s) is
/// connected for s <= 0 and G-(u,s) for s >= 0. Scans the distinct values of
/// u together with 0 in ascending order and reports the first violation.
struct Lemma1Result {
  bool pass;
  double level = 0.0;  // witness fields meaningful when !pass
  Side side = Side::plus;
  int components = 0;
};
Lemma1Result check_lemma1(const Graph& g, const VertexFunction& u);

struct TightnessWitness {
  double level;
  Side side;
  int components;
};

struct TightnessResult {
  bool tight;
  std::optional<TightnessWitness> witness;
  long levels_checked = 0;
  std::optional<std::vector<double>> direction;
};

/// Exact tightness decision. Both induced subgraphs are piecewise constant in
/// s between consecutive distinct values of u, so testing each distinct value
/// decides every level. Levels are scanned in ascending order; the first
/// failing (level, side) is the witness.
TightnessResult is_tight_function(const Graph& g, const VertexFunction& u);

/// Collapse clusters of nearly equal values (gap below rel_tol times the sup
/// norm) onto one representative. The sampled tightness wrappers apply this
/// before the exact scan: entries that are equal in exact arithmetic come out
/// of the eigensolver split at rounding level.
VertexFunction snap_values(const VertexFunction& u, double rel_tol);

/// Sampled tightness of a whole eigenspace: tests every direction produced by
/// tightness_directions (basis, pairwise combinations, cfg.n_random sphere
/// samples), with values snapped at cfg.value_snap. Exact for one-dimensional
/// spaces, a certificate by sampling otherwise.
TightnessResult is_tight_space(const Graph& g, const Eigenspace& e, const SamplingConfig& cfg = {});

/// Polyhedral critical point classification. Around each vertex the cyclic
/// link is walked and sign changes of u(neighbor) - u(vertex) are counted;
/// ties break by vertex index. c = 0 gives an extremum, c = 2k with k >= 2 a
/// saddle of multiplicity k-1. The Morse sum over vertices of 1 - c/2 always
/// equals the Euler characteristic.
struct CriticalReport {
  int maxima;
  int minima;
  int saddles;  // counted with multiplicity
  std::vector<int> saddle_multiplicities;  // per vertex, 0 when not a saddle
  int morse_sum;
  int chi;
  bool morse_ok;
};
CriticalReport critical_points(const CombinatorialSurface& surface, const VertexFunction& u);

}  // namespace spectight
