#pragma once

#include "spectight/graph.hpp"

namespace spectight {

/// Single-extremum cosine wave on the 20-cycle: tight, two weak sign-graphs.
VertexFunction c20_tight_wave();

/// Stored 20-vector with two positive humps and a double-dipped valley:
/// exactly two weak sign-graphs, yet the level sets at +1/2 and -1/2 each cut
/// one side into two components, so the function is not tight and fails the
/// lambda2 connectivity property at level -1/2.
VertexFunction c20_nontight_wave();

}  // namespace spectight
