#include <doctest.h>

#include <sstream>

#include "spectight/campaigns.hpp"
#include "spectight/io.hpp"

using namespace spectight;

TEST_CASE("edge list parsing") {
  std::istringstream in(
      "# a weighted triangle plus a tail\n"
      "n 4\n"
      "0 1 2.5\n"
      "1 2\n"
      "0 2 0.5\n"
      "2 3\n");
  const Graph g = parse_edge_list(in);
  CHECK(g.n_vertices() == 4);
  CHECK(g.edges().size() == 4);
  CHECK(g.edges()[0].weight == 2.5);
  CHECK(g.edges()[1].weight == 1.0);  // missing weight defaults to 1
}

TEST_CASE("edge list errors carry line numbers") {
  std::istringstream missing_header("0 1\n");
  CHECK_THROWS_AS(parse_edge_list(missing_header), ParseError);

  std::istringstream loop("n 3\n0 1\n2 2\n");
  try {
    parse_edge_list(loop);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }

  std::istringstream garbage("n 3\nzero one\n");
  try {
    parse_edge_list(garbage);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("rotation and function parsing") {
  const Graph c3 = cycle_graph(3);
  std::istringstream rot(
      "0: 1 2\n"
      "1: 2 0\n"
      "2: 0 1\n");
  const RotationSystem r = parse_rotation(rot, c3);
  CHECK(r[1] == std::vector<int>{2, 0});

  std::istringstream incomplete("0: 1 2\n1: 2 0\n");
  CHECK_THROWS_AS(parse_rotation(incomplete, c3), ParseError);

  std::istringstream fn("0.5\n# comment\n-1.25\n3\n");
  const VertexFunction u = parse_function(fn);
  CHECK(u == VertexFunction{0.5, -1.25, 3.0});
}

TEST_CASE("spectrum report shape") {
  const Spectrum s = eigendecompose(build_operator(complete_graph(4)));
  const json j = spectrum_report(s, group_eigenvalues(s));
  CHECK(j.contains("eigenvalues"));
  CHECK(j.contains("groups"));
  CHECK(j.contains("residual_norm"));
  CHECK(j["eigenvalues"].size() == 4);
  CHECK(j["groups"].size() == 2);
  CHECK(j["groups"][1]["multiplicity"] == 3);
  CHECK(j["groups"][1]["indices"] == json::array({1, 3}));
}

TEST_CASE("suite reports serialize deterministically") {
  RunConfig cfg;
  cfg.seed = 5;
  cfg.n_random_directions = 50;
  const std::string a = to_json(run_suite("fiedler", 10, cfg)).dump();
  const std::string b = to_json(run_suite("fiedler", 10, cfg)).dump();
  CHECK(a == b);
  CHECK_THROWS_WITH_AS(run_suite("nosuch", 1, cfg), doctest::Contains("valid suites"),
                       std::invalid_argument);
}
