#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectight/io.hpp"
#include "spectight/sampling.hpp"

namespace spectight {

struct RunConfig {
  std::uint64_t seed = 42;
  int n_random_directions = 1000;
  double rel_tol = kDefaultGroupTol;
  double point_tol = 1e-7;
  double rank_tol = 1e-8;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  long checks = 0;
  long violations = 0;
  bool pass = true;
  json findings = json::array();         // observations that are not failures
  json counterexamples = json::array();  // violation details for replay
};

/// Registered verification campaigns: courant, fiedler, lemma1, lemma2,
/// lemma3, product_spectra, morse, bound.
const std::vector<std::string>& suite_names();

/// Runs one campaign; deterministic for a fixed (name, trials, config).
SuiteReport run_suite(const std::string& name, int trials, const RunConfig& cfg = {});

json to_json(const SuiteReport& r);

/// Erdos-Renyi graph with p = 2 ln(n)/n, resampled until connected, with
/// edge weights uniform in [0.5, 2].
Graph random_connected_graph(Rng& rng, int n_min, int n_max);
std::vector<double> random_weights(Rng& rng, size_t count);

}  // namespace spectight
