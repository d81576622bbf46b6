// spectight command line: spectra, tightness and bound checks, verification
// campaigns, and mesh export for weighted graph Laplacians.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spectight/campaigns.hpp"
#include "spectight/fixtures.hpp"
#include "spectight/io.hpp"
#include "spectight/mapping.hpp"

namespace st = spectight;
using st::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("empty entry in integer list '" + s + "'");
    out.push_back(std::stoi(tok));
  }
  return out;
}

st::Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw UsageError("family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "path") {
    need(1);
    return st::path_graph(params[0]);
  }
  if (name == "cycle") {
    need(1);
    return st::cycle_graph(params[0]);
  }
  if (name == "complete") {
    need(1);
    return st::complete_graph(params[0]);
  }
  if (name == "triangular_torus") {
    need(1);
    return st::triangular_torus_graph(params[0]);
  }
  if (name == "hamming") {
    if (params.empty()) throw UsageError("hamming expects at least one alphabet size");
    return st::hamming_graph(params);
  }
  throw UsageError("unknown family '" + name + "'");
}

// `name:params`, products as `prod:cycle:10,cycle:20`; a comma token with a
// colon starts a new factor, bare numbers extend the previous factor.
st::Graph parse_family_spec(const std::string& spec) {
  if (spec.rfind("prod:", 0) == 0) {
    std::vector<std::pair<std::string, std::vector<int>>> factors;
    std::stringstream ss(spec.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const size_t colon = tok.find(':');
      if (colon != std::string::npos) {
        factors.push_back({tok.substr(0, colon), {std::stoi(tok.substr(colon + 1))}});
      } else {
        if (factors.empty()) throw UsageError("product spec must start with a family name");
        factors.back().second.push_back(std::stoi(tok));
      }
    }
    if (factors.size() < 2) throw UsageError("product spec needs at least two factors");
    std::vector<st::Graph> graphs;
    for (const auto& [name, params] : factors) graphs.push_back(make_family(name, params));
    return st::cartesian_product(graphs);
  }
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("family spec must look like name:params");
  return make_family(spec.substr(0, colon), parse_int_list(spec.substr(colon + 1)));
}

st::Graph load_graph(const std::string& family_spec, const std::string& edges_path) {
  if (!family_spec.empty() && !edges_path.empty())
    throw UsageError("--family and --edges are mutually exclusive");
  if (!family_spec.empty()) return parse_family_spec(family_spec);
  if (edges_path.empty()) throw UsageError("one of --family or --edges is required");
  std::ifstream in(edges_path);
  if (!in) throw UsageError("cannot open '" + edges_path + "'");
  try {
    return st::parse_edge_list(in);
  } catch (const st::ParseError& e) {
    throw UsageError(edges_path + ":" + std::to_string(e.line) + ": " + e.what());
  }
}

st::RotationSystem load_rotation(const std::string& rotation_spec, const st::Graph& g) {
  if (rotation_spec == "builtin-k7-torus") {
    if (g.n_vertices() != 7 || g.edges().size() != 21)
      throw UsageError("builtin-k7-torus requires the complete graph on 7 vertices");
    return st::k7_torus_rotation();
  }
  if (rotation_spec == "grid") {
    if (g.family() != st::FamilyTag::triangular_torus)
      throw UsageError("the grid rotation applies to triangular_torus families");
    int n = 0;
    while (n * n < g.n_vertices()) ++n;
    return st::triangular_torus_rotation(n);
  }
  std::ifstream in(rotation_spec);
  if (!in) throw UsageError("cannot open rotation file '" + rotation_spec + "'");
  try {
    return st::parse_rotation(in, g);
  } catch (const st::ParseError& e) {
    throw UsageError(rotation_spec + ":" + std::to_string(e.line) + ": " + e.what());
  }
}

// default rotation for families that carry one
std::optional<st::RotationSystem> default_rotation(const st::Graph& g) {
  if (g.family() == st::FamilyTag::triangular_torus) {
    int n = 0;
    while (n * n < g.n_vertices()) ++n;
    return st::triangular_torus_rotation(n);
  }
  if (g.family() == st::FamilyTag::path || g.family() == st::FamilyTag::cycle)
    return st::natural_rotation(g);
  return std::nullopt;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << j.dump(2) << '\n';
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPECTRAL_TIGHT_SEED")) return std::strtoull(env, nullptr, 10);
  return 42;
}

struct CommonOpts {
  std::string family, edges, output;
  std::uint64_t seed = default_seed();
  int dirs = 1000;
  double rel_tol = st::kDefaultGroupTol;
  double point_tol = 1e-7;
};

void add_graph_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--family", o.family, "family spec, e.g. complete:7 or prod:cycle:10,cycle:20");
  cmd->add_option("--edges", o.edges, "edge-list file");
}

int cmd_spectrum(const CommonOpts& o) {
  const st::Graph g = load_graph(o.family, o.edges);
  const st::Spectrum s = st::eigendecompose(st::build_operator(g));
  const auto groups = st::group_eigenvalues(s, o.rel_tol);
  json j = st::spectrum_report(s, groups);
  int exit_code = kExitOk;
  try {
    j["m"] = st::lambda2_eigenspace(s, o.rel_tol).dimension;
  } catch (const std::exception& e) {
    j["m"] = nullptr;
    j["error"] = e.what();
    exit_code = kExitCheckFailed;
  }
  emit(j, o.output);
  std::cerr << "n=" << g.n_vertices() << " groups=" << groups.size()
            << " residual=" << s.residual_norm << '\n';
  return exit_code;
}

int cmd_analyze(const CommonOpts& o, const std::string& genus_source, const std::string& rotation) {
  const st::Graph g = load_graph(o.family, o.edges);
  const st::Spectrum s = st::eigendecompose(st::build_operator(g));
  const st::Eigenspace e = st::lambda2_eigenspace(s, o.rel_tol);
  const st::SamplingConfig sampling{o.seed, o.dirs};

  json j;
  j["graph"] = {{"n", g.n_vertices()}, {"edges", g.edges().size()}};
  j["spectrum"] = st::spectrum_report(s, st::group_eigenvalues(s, o.rel_tol));
  j["spectrum"]["m"] = e.dimension;

  const st::CourantReport courant = st::check_courant(g, s);
  j["courant"] = st::to_json(courant);

  bool fiedler_pass = true, lemma1_pass = true;
  json fiedler = json::array(), lemma1 = json::array();
  for (int k = 0; k < e.dimension; ++k) {
    const int count = st::sign_graphs(g, e.basis[k], st::SignMode::weak).count;
    fiedler.push_back(count);
    fiedler_pass = fiedler_pass && count == 2;
    const st::Lemma1Result r = st::check_lemma1(g, e.basis[k]);
    lemma1.push_back(st::to_json(r));
    lemma1_pass = lemma1_pass && r.pass;
  }
  j["fiedler"] = {{"pass", fiedler_pass}, {"weak_sign_graphs", fiedler}};
  j["lemma1"] = {{"pass", lemma1_pass}, {"per_vector", lemma1}};

  // eigenspace tightness is reported as a property, not a pass/fail check:
  // the theorems hold conditionally on it
  j["tightness"] = st::to_json(st::is_tight_space(g, e, sampling));

  bool bound_pass = true;
  if (genus_source == "family" || (genus_source.empty() && g.declared_genus())) {
    const st::BoundCertificate cert = st::verify_bound(g, e);
    j["bound"] = st::to_json(cert);
    bound_pass = cert.satisfied;
  } else if (genus_source == "embedding" || (genus_source.empty() && !rotation.empty())) {
    if (rotation.empty()) throw UsageError("--genus embedding requires --rotation");
    const st::CombinatorialSurface surf = st::trace_embedding(g, load_rotation(rotation, g));
    const st::BoundCertificate cert = st::verify_bound(surf, e);
    j["bound"] = st::to_json(cert);
    bound_pass = cert.satisfied;
  } else {
    j["bound"] = nullptr;
  }

  emit(j, o.output);
  const bool all_pass = courant.pass && fiedler_pass && lemma1_pass && bound_pass;
  std::cerr << "m=" << e.dimension << " courant=" << (courant.pass ? "ok" : "FAIL")
            << " fiedler=" << (fiedler_pass ? "ok" : "FAIL")
            << " lemma1=" << (lemma1_pass ? "ok" : "FAIL")
            << " tight=" << (j["tightness"]["tight"].get<bool>() ? "yes" : "no (finding)")
            << " bound=" << (j["bound"].is_null() ? "n/a" : (bound_pass ? "ok" : "FAIL")) << '\n';
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_tight(const CommonOpts& o, const std::string& function_path) {
  const st::Graph g = load_graph(o.family, o.edges);
  st::VertexFunction u;
  if (function_path == "builtin-c20-tight") {
    u = st::c20_tight_wave();
  } else if (function_path == "builtin-c20-nontight") {
    u = st::c20_nontight_wave();
  } else {
    std::ifstream in(function_path);
    if (!in) throw UsageError("cannot open function file '" + function_path + "'");
    try {
      u = st::parse_function(in);
    } catch (const st::ParseError& e) {
      throw UsageError(function_path + ":" + std::to_string(e.line) + ": " + e.what());
    }
  }
  if (static_cast<int>(u.size()) != g.n_vertices())
    throw UsageError("function has " + std::to_string(u.size()) + " values for " +
                     std::to_string(g.n_vertices()) + " vertices");
  const st::TightnessResult r = st::is_tight_function(g, u);
  emit(st::to_json(r), o.output);
  std::cerr << (r.tight ? "tight" : "not tight") << '\n';
  return r.tight ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, int trials) {
  st::RunConfig cfg;
  cfg.seed = o.seed;
  cfg.n_random_directions = o.dirs;
  cfg.rel_tol = o.rel_tol;
  cfg.point_tol = o.point_tol;
  st::SuiteReport rep;
  try {
    rep = st::run_suite(suite, trials, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = st::to_json(rep);
  j["seed"] = cfg.seed;
  emit(j, o.output);
  std::cerr << rep.suite << ": " << rep.checks << " checks, " << rep.violations << " violations, "
            << rep.findings.size() << " findings\n";
  return rep.pass ? kExitOk : kExitCheckFailed;
}

int cmd_embed(const CommonOpts& o, const std::string& rotation, const std::string& project) {
  const st::Graph g = load_graph(o.family, o.edges);
  st::RotationSystem rot;
  if (!rotation.empty()) {
    rot = load_rotation(rotation, g);
  } else if (auto def = default_rotation(g)) {
    rot = *def;
  } else {
    throw UsageError("no rotation available for this graph; pass --rotation");
  }
  const st::CombinatorialSurface surface = st::trace_embedding(g, rot);

  const st::Spectrum s = st::eigendecompose(st::build_operator(g));
  const st::Eigenspace e = st::lambda2_eigenspace(s, o.rel_tol);
  st::MappingConfig mcfg;
  mcfg.point_tol = o.point_tol;
  st::Mapping map = st::build_mapping(g, e, mcfg);
  st::CombinatorialSurface mapped_surface = surface;
  if (!map.pathological_edges.empty()) {
    map = st::contract_pathological(map);
    for (const auto& [a, b] : map.contraction_log)
      mapped_surface = st::contract_surface_edge(mapped_surface, a, b);
  }

  const std::vector<int> proj = parse_int_list(project);
  if (proj.size() != 3) throw UsageError("--project expects three comma-separated indices");
  std::array<int, 3> indices{proj[0], proj[1], proj[2]};

  if (o.output.empty()) throw UsageError("embed requires -o OUTPUT.off");
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + o.output + "'");
  try {
    st::write_off(out, map, mapped_surface, indices);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const st::BoundCertificate cert =
      g.declared_genus() ? st::verify_bound(g, e) : st::verify_bound(mapped_surface, e);
  json j = st::to_json(cert);
  j["off"] = o.output;
  j["vertices"] = map.graph.n_vertices();
  j["faces"] = mapped_surface.faces.size();
  j["contractions"] = map.contraction_log.size();
  std::cout << j.dump(2) << '\n';
  std::cerr << "wrote " << o.output << '\n';
  return cert.satisfied ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda2 eigenspace multiplicity, sign-graph, tightness and Heawood-bound toolkit"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string genus_source, rotation, function_path, suite, project = "0,1,2";
  int trials = 100;

  auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--dirs", opt.dirs, "random directions for sampled tightness");
    cmd->add_option("--rel-tol", opt.rel_tol, "eigenvalue grouping tolerance");
    cmd->add_option("--point-tol", opt.point_tol, "pathological edge tolerance");
  };

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "eigenvalues, degeneracy groups, multiplicity");
  add_graph_opts(c_spectrum, opt);
  c_spectrum->add_option("--rel-tol", opt.rel_tol, "eigenvalue grouping tolerance");
  c_spectrum->add_option("-o,--output", opt.output, "write JSON here instead of stdout");

  CLI::App* c_analyze = app.add_subcommand("analyze", "run all checks on one graph");
  add_graph_opts(c_analyze, opt);
  c_analyze->add_option("--genus", genus_source, "bound genus source: family or embedding");
  c_analyze->add_option("--rotation", rotation, "rotation file, builtin-k7-torus, or grid");
  add_tolerances(c_analyze);
  c_analyze->add_option("-o,--output", opt.output, "write JSON here instead of stdout");

  CLI::App* c_tight = app.add_subcommand("tight", "exact tightness of a function on a graph");
  add_graph_opts(c_tight, opt);
  c_tight->add_option("--function", function_path, "file with one value per line")->required();
  c_tight->add_option("-o,--output", opt.output, "write JSON here instead of stdout");

  CLI::App* c_verify = app.add_subcommand("verify", "run a verification campaign");
  c_verify->add_option("--suite", suite, "campaign name")->required();
  c_verify->add_option("--trials", trials, "trial count");
  add_tolerances(c_verify);
  c_verify->add_option("-o,--output", opt.output, "write JSON here instead of stdout");

  CLI::App* c_embed = app.add_subcommand("embed", "export the mapped surface as an OFF mesh");
  add_graph_opts(c_embed, opt);
  c_embed->add_option("--rotation", rotation, "rotation file, builtin-k7-torus, or grid");
  c_embed->add_option("--project", project, "three coordinate indices, e.g. 0,1,2");
  add_tolerances(c_embed);
  c_embed->add_option("-o,--output", opt.output, "output OFF path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_spectrum->parsed()) return cmd_spectrum(opt);
    if (c_analyze->parsed()) return cmd_analyze(opt, genus_source, rotation);
    if (c_tight->parsed()) return cmd_tight(opt, function_path);
    if (c_verify->parsed()) return cmd_verify(opt, suite, trials);
    if (c_embed->parsed()) return cmd_embed(opt, rotation, project);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
