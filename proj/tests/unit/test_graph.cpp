#include <doctest.h>

#include "spectight/campaigns.hpp"
#include "spectight/graph.hpp"

using namespace spectight;

TEST_CASE("build_graph validates its input") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.n_vertices() == 3);
  CHECK(p3.edges().size() == 2);
  CHECK(p3.edges()[0].weight == 1.0);

  CHECK_THROWS_WITH_AS(build_graph(2, {{0, 0}}), doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_graph(4, {{0, 1}}, {-1.0}), doctest::Contains("nonpositive"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_graph(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_graph(3, {{0, 5}}), doctest::Contains("out of range"),
                       std::invalid_argument);
  CHECK_THROWS(build_graph(2, {{0, 1}}, {1.0, 2.0}));
}

TEST_CASE("family graphs carry counts and genus") {
  const Graph k7 = complete_graph(7);
  CHECK(k7.n_vertices() == 7);
  CHECK(k7.edges().size() == 21);
  CHECK(k7.declared_genus() == 1);

  CHECK(complete_graph_genus(4) == 0);
  CHECK(complete_graph_genus(5) == 1);
  CHECK(complete_graph_genus(8) == 2);
  CHECK(complete_graph_genus(2) == 0);

  const Graph c20 = cycle_graph(20);
  CHECK(c20.n_vertices() == 20);
  CHECK(c20.edges().size() == 20);
  CHECK(c20.declared_genus() == 0);

  const Graph torus = triangular_torus_graph(5);
  CHECK(torus.n_vertices() == 25);
  CHECK(torus.edges().size() == 75);
  for (int v = 0; v < 25; ++v) CHECK(torus.neighbors(v).size() == 6);
  CHECK(torus.declared_genus() == 1);

  CHECK_THROWS(path_graph(1));
  CHECK_THROWS(cycle_graph(2));
  CHECK_THROWS(complete_graph(0));
  CHECK_THROWS(triangular_torus_graph(3));
  CHECK_THROWS(hamming_graph({1}));
}

TEST_CASE("hamming graphs are products of complete graphs") {
  const Graph cube = hamming_graph({2, 2, 2});
  CHECK(cube.n_vertices() == 8);
  CHECK(cube.edges().size() == 12);
  CHECK(cube.declared_genus() == 0);
  CHECK(hamming_graph({4}).declared_genus() == 0);
  CHECK(hamming_graph({7}).declared_genus() == 1);
  CHECK_FALSE(hamming_graph({3, 3}).declared_genus().has_value());
}

TEST_CASE("cartesian product counts and index order") {
  const Graph square = cartesian_product(path_graph(2), path_graph(2));
  CHECK(square.n_vertices() == 4);
  CHECK(square.edges().size() == 4);

  const Graph p = cartesian_product(cycle_graph(10), cycle_graph(20));
  CHECK(p.n_vertices() == 200);
  CHECK(p.edges().size() == 400);

  // |E_P| = |V_G||E_H| + |V_H||E_G|
  const Graph g = path_graph(5), h = complete_graph(4);
  const Graph gh = cartesian_product(g, h);
  CHECK(gh.edges().size() == g.n_vertices() * h.edges().size() + h.n_vertices() * g.edges().size());

  // weights come from the factor supplying the edge
  const Graph wg = build_graph(2, {{0, 1}}, {3.0});
  const Graph wh = build_graph(2, {{0, 1}}, {5.0});
  const Graph wp = cartesian_product(wg, wh);
  for (const Edge& e : wp.edges()) CHECK((e.weight == 3.0 || e.weight == 5.0));
}

TEST_CASE("cartesian product is associative under lexicographic flattening") {
  const Graph a = path_graph(3), b = cycle_graph(4), c = complete_graph(2);
  const Graph left = cartesian_product(cartesian_product(a, b), c);
  const Graph right = cartesian_product(a, cartesian_product(b, c));
  REQUIRE(left.n_vertices() == right.n_vertices());
  REQUIRE(left.edges().size() == right.edges().size());
  auto key = [](const Graph& g) {
    std::vector<std::tuple<int, int, double>> k;
    for (const Edge& e : g.edges()) k.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.weight);
    std::sort(k.begin(), k.end());
    return k;
  };
  CHECK(key(left) == key(right));
}

TEST_CASE("connectivity queries") {
  const ComponentSplit r = connected_components(path_graph(5), {0, 1, 3});
  CHECK_FALSE(r.connected);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0] == std::vector<int>{0, 1});
  CHECK(r.components[1] == std::vector<int>{3});

  CHECK(is_connected(cycle_graph(6)));
  CHECK(connected_components(complete_graph(4), {1, 3}).connected);
  CHECK(connected_components(complete_graph(4), {}).connected);  // empty counts as connected
  CHECK(count_components(complete_graph(4), {}) == 0);
}

TEST_CASE("level partition splits and covers") {
  const Graph p2 = path_graph(2);
  const LevelPartition lp = induced_level_subgraphs(p2, {1.0, -1.0}, 0.0);
  CHECK(lp.plus_vertices == std::vector<int>{0});
  CHECK(lp.minus_vertices == std::vector<int>{1});
  CHECK(lp.plus_components == 1);
  CHECK(lp.minus_components == 1);

  const LevelPartition below = induced_level_subgraphs(p2, {1.0, -1.0}, -5.0);
  CHECK(below.minus_vertices.empty());
  CHECK(below.minus_components == 0);
  CHECK(below.plus_components == 1);
  CHECK(below.plus_vertices.size() == 2);
}

TEST_CASE("level partition covers V and meets exactly on the level set") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected_graph(rng, 4, 12);
    VertexFunction u(g.n_vertices());
    for (double& x : u) x = rng.uniform(-1, 1);
    u[rng.uniform_int(0, g.n_vertices() - 1)] = 0.25;  // force a nonempty level set sometimes
    const LevelPartition p = induced_level_subgraphs(g, u, 0.25);
    std::vector<char> in_plus(g.n_vertices(), 0), in_minus(g.n_vertices(), 0);
    for (int v : p.plus_vertices) in_plus[v] = 1;
    for (int v : p.minus_vertices) in_minus[v] = 1;
    for (int v = 0; v < g.n_vertices(); ++v) {
      CHECK((in_plus[v] || in_minus[v]));
      CHECK((in_plus[v] && in_minus[v]) == (u[v] == 0.25));
    }
  }
}
