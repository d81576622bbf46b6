// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the CLI binary (used by the determinism criterion),
// argv[2] a scratch directory.

#include <chrono>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spectight/campaigns.hpp"
#include "spectight/fixtures.hpp"
#include "spectight/mapping.hpp"

namespace st = spectight;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;
fs::path g_scratch;

struct Criterion {
  int number;
  std::string label;
  std::function<bool(std::string&)> run;
};

st::Eigenspace lambda2_of(const st::Graph& g) {
  return st::lambda2_eigenspace(st::eigendecompose(st::build_operator(g)), 1e-8);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// 1. closed-form spectra for paths, cycles and complete graphs
bool criterion_spectra(std::string& detail) {
  constexpr double kTol = 1e-8;
  for (int n : {5, 10, 20, 100}) {
    std::vector<double> path_exact(n), cycle_exact(n);
    for (int k = 1; k <= n; ++k) path_exact[k - 1] = 2.0 - 2.0 * std::cos(std::numbers::pi * (k - 1) / n);
    for (int k = 0; k < n; ++k) cycle_exact[k] = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
    std::sort(cycle_exact.begin(), cycle_exact.end());

    const auto path_got = st::eigendecompose(st::build_operator(st::path_graph(n))).eigenvalues;
    const auto cycle_got = st::eigendecompose(st::build_operator(st::cycle_graph(n))).eigenvalues;
    const double pe = max_abs_diff(path_got, path_exact);
    const double ce = max_abs_diff(cycle_got, cycle_exact);
    if (pe > kTol || ce > kTol) {
      detail = "n=" + std::to_string(n) + " path_err=" + std::to_string(pe) +
               " cycle_err=" + std::to_string(ce);
      return false;
    }
  }
  for (int n = 2; n <= 20; ++n) {
    std::vector<double> exact(n, static_cast<double>(n));
    exact[0] = 0.0;
    const auto got = st::eigendecompose(st::build_operator(st::complete_graph(n))).eigenvalues;
    if (max_abs_diff(got, exact) > kTol) {
      detail = "K_" + std::to_string(n);
      return false;
    }
  }
  detail = "max abs error <= 1e-8 for n in {5,10,20,100} and K_n up to 20";
  return true;
}

// 2. multiplicity fixtures at grouping tolerance 1e-8
bool criterion_multiplicities(std::string& detail) {
  const int m_c20 = lambda2_of(st::cycle_graph(20)).dimension;
  const int m_k7 = lambda2_of(st::complete_graph(7)).dimension;
  const int m_torus = lambda2_of(st::triangular_torus_graph(5)).dimension;
  detail = "m(C20)=" + std::to_string(m_c20) + " m(K7)=" + std::to_string(m_k7) +
           " m(torus5)=" + std::to_string(m_torus) + " chr(1)-1=" +
           std::to_string(st::heawood_number(1) - 1);
  return m_c20 == 2 && m_k7 == 6 && m_torus == 6 && st::heawood_number(1) - 1 == 6;
}

// 3. Courant + Fiedler + Lemma 1 campaign, 200 random graphs, seed 42
bool criterion_campaign(std::string& detail) {
  st::RunConfig cfg;  // seed 42
  const st::SuiteReport courant = st::run_suite("courant", 200, cfg);
  const st::SuiteReport fiedler = st::run_suite("fiedler", 200, cfg);
  const st::SuiteReport lemma1 = st::run_suite("lemma1", 200, cfg);
  detail = "courant " + std::to_string(courant.checks) + " checks, fiedler " +
           std::to_string(fiedler.checks) + ", lemma1 " + std::to_string(lemma1.checks) +
           "; violations " +
           std::to_string(courant.violations + fiedler.violations + lemma1.violations);
  return courant.violations == 0 && fiedler.violations == 0 && lemma1.violations == 0;
}

// 4. stored fixture reproduction
bool criterion_fixtures(std::string& detail) {
  const st::Graph c20 = st::cycle_graph(20);
  const st::VertexFunction upper = st::c20_tight_wave();
  const st::VertexFunction lower = st::c20_nontight_wave();

  const bool upper_tight = st::is_tight_function(c20, upper).tight;
  const int weak = st::sign_graphs(c20, lower, st::SignMode::weak).count;
  const st::TightnessResult lower_result = st::is_tight_function(c20, lower);

  // the +1/2 level cuts the minus side in two; -1/2 cuts the plus side
  const st::LevelPartition at_plus_half = st::induced_level_subgraphs(c20, lower, 0.5);
  const st::LevelPartition at_minus_half = st::induced_level_subgraphs(c20, lower, -0.5);

  const st::Lemma1Result lemma1 = st::check_lemma1(c20, lower);
  const bool lemma1_at_minus_half =
      !lemma1.pass && lemma1.level == -0.5 && lemma1.side == st::Side::plus;

  detail = std::string("upper tight=") + (upper_tight ? "yes" : "no") +
           ", lower weak=" + std::to_string(weak) +
           ", minus side at +1/2 splits into " + std::to_string(at_plus_half.minus_components) +
           ", lemma1 witness s=" + std::to_string(lemma1.level);
  return upper_tight && weak == 2 && !lower_result.tight &&
         at_plus_half.minus_components == 2 && at_minus_half.plus_components == 2 &&
         lemma1_at_minus_half;
}

// 5. sampled tightness for random weightings of paths and cycles
bool criterion_lemma2(std::string& detail) {
  st::RunConfig cfg;
  const st::SuiteReport rep = st::run_suite("lemma2", 100, cfg);
  detail = std::to_string(rep.checks) + " weighted instances, " +
           std::to_string(rep.violations) + " counterexamples";
  return rep.violations == 0 && rep.checks == 600;
}

// 6. the C10 x C20 product: lambda2 value, tensor structure, spectrum sums
bool criterion_product(std::string& detail) {
  const st::Graph g = st::cycle_graph(10), h = st::cycle_graph(20);
  const st::Graph p = st::cartesian_product(g, h);
  const st::Spectrum sp = st::eigendecompose(st::build_operator(p));
  const st::Spectrum sg = st::eigendecompose(st::build_operator(g));
  const st::Spectrum sh = st::eigendecompose(st::build_operator(h));

  const st::Eigenspace e = st::lambda2_eigenspace(sp, 1e-8);
  const double l2_c20 = st::lambda2_eigenspace(sh, 1e-8).eigenvalue;
  if (std::abs(e.eigenvalue - l2_c20) > 1e-8) {
    detail = "lambda2 mismatch";
    return false;
  }

  // eigenfunctions constant along the C10 coordinate: u(g*20+h) depends on h only
  double defect = 0.0;
  for (const st::VertexFunction& u : e.basis)
    for (int hh = 0; hh < 20; ++hh)
      for (int gg = 0; gg < 10; ++gg) defect = std::max(defect, std::abs(u[gg * 20 + hh] - u[hh]));
  if (defect > 1e-8) {
    detail = "tensor defect " + std::to_string(defect);
    return false;
  }

  const st::TightnessResult tight = st::is_tight_space(p, e, {42, 1000});
  if (!tight.tight) {
    detail = "product eigenspace not sampled-tight";
    return false;
  }

  std::vector<double> sums;
  for (double a : sg.eigenvalues)
    for (double b : sh.eigenvalues) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  const double sum_err = max_abs_diff(sums, sp.eigenvalues);
  detail = "m=" + std::to_string(e.dimension) + ", tensor defect " + std::to_string(defect) +
           ", kronecker-sum error " + std::to_string(sum_err);
  return sum_err <= 1e-8 && e.dimension == 2;
}

// 7. critical point census of the torus lambda2 basis
bool criterion_morse(std::string& detail) {
  const st::Graph g = st::triangular_torus_graph(5);
  const st::CombinatorialSurface s = st::trace_embedding(g, st::triangular_torus_rotation(5));
  const st::Eigenspace e = lambda2_of(g);
  for (int k = 0; k < e.dimension; ++k) {
    const st::CriticalReport r = st::critical_points(s, e.basis[k]);
    if (!(r.maxima == 1 && r.minima == 1 && r.saddles == 2 && r.morse_sum == 0 && r.chi == 0)) {
      detail = "vector " + std::to_string(k) + ": " + std::to_string(r.maxima) + "/" +
               std::to_string(r.minima) + "/" + std::to_string(r.saddles) +
               " morse_sum=" + std::to_string(r.morse_sum);
      return false;
    }
  }
  detail = "all 6 basis vectors: 1 maximum, 1 minimum, 2 saddles, morse_sum = 0 = chi";
  return true;
}

// 8. the bound suite plus the Heawood table and equality cases
bool criterion_bound(std::string& detail) {
  st::RunConfig cfg;
  const st::SuiteReport rep = st::run_suite("bound", 1, cfg);
  const int h[4] = {st::heawood_number(0), st::heawood_number(1), st::heawood_number(2),
                    st::heawood_number(3)};
  detail = std::to_string(rep.checks) + " bound checks, " + std::to_string(rep.violations) +
           " violations, " + std::to_string(rep.findings.size()) +
           " non-tight findings; heawood(0..3) = " + std::to_string(h[0]) + "," +
           std::to_string(h[1]) + "," + std::to_string(h[2]) + "," + std::to_string(h[3]);
  return rep.violations == 0 && h[0] == 4 && h[1] == 7 && h[2] == 8 && h[3] == 9;
}

// 9. twin-vertex contraction
bool criterion_contraction(std::string& detail) {
  const st::Graph g = st::build_graph(
      6, {{0, 1}, {0, 2}, {1, 2}, {0, 5}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
      {4.0, 2.0, 2.0, 2.0, 2.0, 1.0, 0.7, 1.3});
  const st::Eigenspace e = lambda2_of(g);
  const st::Mapping before = st::build_mapping(g, e);
  if (before.pathological_edges.size() != 1) {
    detail = "expected one pathological edge, found " +
             std::to_string(before.pathological_edges.size());
    return false;
  }
  const st::Mapping after = st::contract_pathological(before);
  const bool counts_ok = after.contraction_log.size() == 1 &&
                         after.graph.n_vertices() == g.n_vertices() - 1 &&
                         after.pathological_edges.empty();

  // per-direction image sets agree (m = 1, so the single coordinate decides)
  std::set<double> original, contracted;
  for (int v = 0; v < before.graph.n_vertices(); ++v) original.insert(before.coords(v, 0));
  for (int v = 0; v < after.graph.n_vertices(); ++v) contracted.insert(after.coords(v, 0));

  detail = "one contraction, rank " + std::to_string(after.substantial_dim) + ", image sets " +
           (original == contracted ? "equal" : "DIFFER");
  return counts_ok && after.substantial_dim == e.dimension && original == contracted;
}

// 10. OFF export through the CLI, byte-identical across two runs
bool criterion_export(std::string& detail) {
  if (g_cli_path.empty()) {
    detail = "CLI path not supplied";
    return false;
  }
  const fs::path off1 = g_scratch / "torus_run1.off";
  const fs::path off2 = g_scratch / "torus_run2.off";
  const std::string base = "\"" + g_cli_path +
                           "\" embed --family triangular_torus:5 --project 0,1,2 --seed 42 -o ";
  if (std::system((base + off1.string() + " >/dev/null 2>&1").c_str()) != 0 ||
      std::system((base + off2.string() + " >/dev/null 2>&1").c_str()) != 0) {
    detail = "embed invocation failed";
    return false;
  }
  std::ifstream f1(off1, std::ios::binary), f2(off2, std::ios::binary);
  std::stringstream b1, b2;
  b1 << f1.rdbuf();
  b2 << f2.rdbuf();
  const std::string run1 = b1.str(), run2 = b2.str();
  if (run1.empty() || run1 != run2) {
    detail = "outputs differ or are empty";
    return false;
  }

  std::istringstream in(run1);
  std::string header;
  int nv, nf, ne;
  if (!(in >> header >> nv >> nf >> ne) || header != "OFF") {
    detail = "not an OFF file";
    return false;
  }
  for (int v = 0; v < nv; ++v) {
    double x, y, z;
    if (!(in >> x >> y >> z)) {
      detail = "truncated vertex section";
      return false;
    }
  }
  int triangles = 0;
  for (int f = 0; f < nf; ++f) {
    int k;
    if (!(in >> k) || k != 3) {
      detail = "non-triangular face";
      return false;
    }
    int a, b, c;
    in >> a >> b >> c;
    ++triangles;
  }
  detail = std::to_string(nv) + " vertices, " + std::to_string(triangles) +
           " triangles, byte-identical across runs";
  return nv == 25 && triangles == 50;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  g_scratch = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path();
  fs::create_directories(g_scratch);

  const std::vector<Criterion> criteria = {
      {1, "closed-form spectra", criterion_spectra},
      {2, "multiplicity fixtures", criterion_multiplicities},
      {3, "Courant/Fiedler campaign", criterion_campaign},
      {4, "stored wave fixtures", criterion_fixtures},
      {5, "weighted path/cycle tightness", criterion_lemma2},
      {6, "C10 x C20 product structure", criterion_product},
      {7, "torus critical points", criterion_morse},
      {8, "multiplicity bound suite", criterion_bound},
      {9, "twin-vertex contraction", criterion_contraction},
      {10, "OFF export determinism", criterion_export},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs) - %s\n", ok ? "PASS" : "FAIL", c.number,
                c.label.c_str(), secs, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
