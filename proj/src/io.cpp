#include "spectight/io.hpp"

#include <istream>
#include <sstream>

namespace spectight {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;
  bool any_weight = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    if (n < 0) {
      std::string tag;
      if (!(ss >> tag >> n) || tag != "n" || n < 0)
        throw ParseError("expected header line `n <N>`", lineno);
      continue;
    }
    int i, j;
    if (!(ss >> i >> j)) throw ParseError("expected edge line `i j [w]`", lineno);
    double w;
    if (ss >> w) {
      any_weight = true;
      weights.resize(edges.size(), 1.0);
      weights.push_back(w);
    } else if (any_weight) {
      weights.push_back(1.0);
    }
    edges.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing header line `n <N>`", lineno);
  try {
    return build_graph(n, edges, weights);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno);
  }
}

RotationSystem parse_rotation(std::istream& in, const Graph& g) {
  RotationSystem rot(g.n_vertices());
  std::vector<char> seen(g.n_vertices(), 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected `v: n1 n2 ...`", lineno);
    std::istringstream head(line.substr(0, colon));
    int v;
    if (!(head >> v) || v < 0 || v >= g.n_vertices())
      throw ParseError("vertex id out of range", lineno);
    if (seen[v]) throw ParseError("duplicate rotation line for vertex " + std::to_string(v), lineno);
    seen[v] = 1;
    std::istringstream tail(line.substr(colon + 1));
    int w;
    while (tail >> w) rot[v].push_back(w);
  }
  for (int v = 0; v < g.n_vertices(); ++v)
    if (!seen[v]) throw ParseError("missing rotation line for vertex " + std::to_string(v), lineno);
  return rot;
}

VertexFunction parse_function(std::istream& in) {
  VertexFunction u;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    double x;
    if (!(ss >> x)) throw ParseError("expected one real per line", lineno);
    u.push_back(x);
  }
  return u;
}

std::string side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

json to_json(const EigenvalueGroup& g) {
  return json{{"value", g.value}, {"multiplicity", g.multiplicity}, {"indices", {g.first, g.last}}};
}

json spectrum_report(const Spectrum& s, const std::vector<EigenvalueGroup>& groups) {
  json j;
  j["eigenvalues"] = s.eigenvalues;
  j["groups"] = json::array();
  for (const EigenvalueGroup& g : groups) j["groups"].push_back(to_json(g));
  j["residual_norm"] = s.residual_norm;
  return j;
}

json to_json(const TightnessResult& r) {
  json j;
  j["tight"] = r.tight;
  if (r.witness)
    j["witness"] = {{"level", r.witness->level},
                    {"side", side_name(r.witness->side)},
                    {"components", r.witness->components}};
  else
    j["witness"] = nullptr;
  j["levels_checked"] = r.levels_checked;
  if (r.direction)
    j["direction"] = *r.direction;
  else
    j["direction"] = nullptr;
  return j;
}

json to_json(const Lemma1Result& r) {
  json j;
  j["pass"] = r.pass;
  if (!r.pass)
    j["witness"] = {{"level", r.level}, {"side", side_name(r.side)}, {"components", r.components}};
  else
    j["witness"] = nullptr;
  return j;
}

json to_json(const CourantReport& r) {
  json rows = json::array();
  for (const CourantRow& row : r.rows)
    rows.push_back({{"index", row.index},
                    {"weak_sign_graphs", row.weak_count},
                    {"bound", row.bound},
                    {"pass", row.pass}});
  return json{{"pass", r.pass}, {"rows", rows}};
}

json to_json(const SignGraphReport& r) {
  json comps = json::array();
  for (const SignComponent& c : r.components)
    comps.push_back({{"sign", c.sign}, {"vertices", c.vertices}});
  return json{{"mode", r.mode == SignMode::weak ? "weak" : "strong"},
              {"count", r.count},
              {"components", comps}};
}

json to_json(const CriticalReport& r) {
  return json{{"maxima", r.maxima},
              {"minima", r.minima},
              {"saddles", r.saddles},
              {"saddle_multiplicities", r.saddle_multiplicities},
              {"morse_sum", r.morse_sum},
              {"chi", r.chi},
              {"morse_ok", r.morse_ok}};
}

json to_json(const BoundCertificate& c) {
  return json{{"m", c.m},
              {"genus", c.genus},
              {"genus_source",
               c.source == GenusSource::family_formula ? "family_formula" : "embedding_upper_bound"},
              {"chr", c.chr},
              {"satisfied", c.satisfied}};
}

json to_json(const TwoPieceResult& r) {
  json j;
  j["pass"] = r.pass;
  if (r.witness)
    j["witness"] = {{"level", r.witness->level},
                    {"side", side_name(r.witness->side)},
                    {"components", r.witness->components}};
  else
    j["witness"] = nullptr;
  if (r.direction)
    j["direction"] = *r.direction;
  else
    j["direction"] = nullptr;
  j["directions_checked"] = r.directions_checked;
  return j;
}

}  // namespace spectight
