#pragma once

#include "spectight/graph.hpp"

namespace spectight {

/// Per-vertex cyclic order of neighbor vertices.
using RotationSystem = std::vector<std::vector<int>>;

/// An orientable embedding of a graph, given by a rotation system, with the
/// faces traced out and the resulting Euler characteristic and genus.
struct CombinatorialSurface {
  Graph graph;
  RotationSystem rotation;
  std::vector<std::vector<int>> faces;  // closed vertex walks, one per face
  int euler_characteristic;
  int genus;
};

/// Trace the faces of the embedding determined by `rotation`: after the
/// directed edge (u -> v) the walk continues to the rotation successor of u
/// around v. Rejects rotations that are not permutations of the incident
/// edges, and isolated vertices.
CombinatorialSurface trace_embedding(const Graph& g, const RotationSystem& rotation);

/// Neighbors in increasing index order. For cycles and paths this is the
/// planar embedding.
RotationSystem natural_rotation(const Graph& g);

/// Grid rotation of the n x n triangular torus: genus 1, all faces triangles.
RotationSystem triangular_torus_rotation(int n);

/// The classical toroidal embedding of K7: around vertex i the neighbors run
/// i+1, i+3, i+2, i+6, i+4, i+5 (mod 7); 14 triangular faces.
RotationSystem k7_torus_rotation();

/// Contract the edge (alpha, beta): splice beta's rotation into alpha's,
/// drop loops, merge parallel edges (weights summed, first-in-rotation kept),
/// reindex vertices contiguously and re-trace. The genus of the result never
/// exceeds the genus of the input.
CombinatorialSurface contract_surface_edge(const CombinatorialSurface& s, int alpha, int beta);

}  // namespace spectight
