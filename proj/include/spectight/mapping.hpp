#pragma once

#include <array>
#include <iosfwd>

#include "spectight/nodal.hpp"
#include "spectight/spectrum.hpp"
#include "spectight/surface.hpp"

namespace spectight {

/// Heawood number of the orientable genus-g surface, floor((7+sqrt(1+48g))/2),
/// evaluated in exact integer arithmetic.
int heawood_number(long long genus);

struct MappingConfig {
  double point_tol = 1e-7;  // relative to the largest coordinate row norm
  double rank_tol = 1e-8;   // singular value cutoff relative to the largest
};

/// Vertex coordinates in R^m taken from an eigenspace basis, with the edges
/// collapsed to a point (pathological edges) detected.
struct Mapping {
  Graph graph;
  Matrix coords;  // n x m, row v = image of vertex v
  int m;
  std::vector<std::pair<int, int>> pathological_edges;
  std::vector<std::pair<int, int>> contraction_log;
  int substantial_dim;      // affine rank of the point set
  double point_threshold;   // absolute, frozen when the mapping is built
  double rank_tol;
};

Mapping build_mapping(const Graph& g, const Eigenspace& e, const MappingConfig& cfg = {});

/// Merge the endpoints of pathological edges one at a time (smallest index
/// keeps the merged vertex), deduplicate parallel edges, drop loops, and
/// repeat until no pathology remains. The contraction log can be replayed on
/// a surface via contract_surface_edge, which uses the same relabeling.
/// Throws if the contracted coordinate columns lose rank or fewer than m
/// vertices remain.
Mapping contract_pathological(const Mapping& m);

/// Two-piece property of the (repaired) mapping: for each sampled direction d
/// the scalar function <d, phi(v)> must pass the exact level-scan tightness
/// test. Uses the same direction scheme and seed as is_tight_space.
struct TwoPieceResult {
  bool pass;
  std::optional<TightnessWitness> witness;
  std::optional<std::vector<double>> direction;
  long directions_checked = 0;
};
TwoPieceResult check_two_piece(const Mapping& m, const SamplingConfig& cfg = {});

enum class GenusSource { family_formula, embedding_upper_bound };

struct BoundCertificate {
  int m;
  int genus;
  GenusSource source;
  int chr;
  bool satisfied;  // m <= chr - 1
};

BoundCertificate verify_bound(int m, int genus, GenusSource source);
BoundCertificate verify_bound(const Graph& g, const Eigenspace& e);                 // family formula
BoundCertificate verify_bound(const CombinatorialSurface& s, const Eigenspace& e);  // traced embedding

/// OFF export of the mapped surface. Projection indices below m select
/// coordinate columns; an index equal to m denotes a zero padding column
/// (degenerate planar mappings); larger indices are rejected. Faces that are
/// planar within rank_tol are written whole, the rest are fan-triangulated
/// from their lowest-index vertex.
void write_off(std::ostream& out, const Mapping& m, const CombinatorialSurface& surface,
               const std::array<int, 3>& projection);

}  // namespace spectight
