#include <doctest.h>

#include "spectight/campaigns.hpp"

using namespace spectight;

TEST_CASE("random graph generator conditions on connectivity") {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_connected_graph(rng, 5, 40);
    CHECK(g.n_vertices() >= 5);
    CHECK(g.n_vertices() <= 40);
    CHECK(is_connected(g));
    for (const Edge& e : g.edges()) {
      CHECK(e.weight >= 0.5);
      CHECK(e.weight <= 2.0);
    }
  }
}

TEST_CASE("small campaign slices stay green") {
  RunConfig cfg;
  cfg.n_random_directions = 100;

  const SuiteReport courant = run_suite("courant", 25, cfg);
  CHECK(courant.pass);
  CHECK(courant.violations == 0);
  CHECK(courant.checks > 25);

  const SuiteReport fiedler = run_suite("fiedler", 25, cfg);
  CHECK(fiedler.pass);

  const SuiteReport lemma1 = run_suite("lemma1", 25, cfg);
  CHECK(lemma1.pass);

  const SuiteReport spectra = run_suite("product_spectra", 10, cfg);
  CHECK(spectra.pass);
  CHECK(spectra.checks == 20);

  const SuiteReport lemma3 = run_suite("lemma3", 6, cfg);
  CHECK(lemma3.pass);

  const SuiteReport morse = run_suite("morse", 2, cfg);
  CHECK(morse.pass);

  const SuiteReport bound = run_suite("bound", 1, cfg);
  CHECK(bound.pass);
  CHECK(bound.violations == 0);
}

TEST_CASE("different seeds explore different graphs") {
  RunConfig a, b;
  a.seed = 1;
  b.seed = 2;
  a.n_random_directions = b.n_random_directions = 10;
  const std::string ja = to_json(run_suite("courant", 5, a)).dump();
  const std::string jb = to_json(run_suite("courant", 5, b)).dump();
  CHECK(ja != jb);
}
