#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spectight/mapping.hpp"
#include "spectight/nodal.hpp"
#include "spectight/spectrum.hpp"
#include "spectight/surface.hpp"

namespace spectight {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line) : std::runtime_error(what), line(line) {}
  int line;
};

/// Edge-list text format: first line `n <N>`, then `i j [w]` per edge,
/// comments start with '#'.
Graph parse_edge_list(std::istream& in);

/// Rotation-system text format: one line per vertex, `v: n1 n2 ... nd` with
/// the neighbors in cyclic order.
RotationSystem parse_rotation(std::istream& in, const Graph& g);

/// One real value per line.
VertexFunction parse_function(std::istream& in);

json spectrum_report(const Spectrum& s, const std::vector<EigenvalueGroup>& groups);
json to_json(const EigenvalueGroup& g);
json to_json(const TightnessResult& r);
json to_json(const Lemma1Result& r);
json to_json(const CourantReport& r);
json to_json(const SignGraphReport& r);
json to_json(const CriticalReport& r);
json to_json(const BoundCertificate& c);
json to_json(const TwoPieceResult& r);

std::string side_name(Side s);

}  // namespace spectight
