#include <doctest.h>

#include <cmath>

#include "asep/centrality.hpp"
#include "asep/components.hpp"
#include "support.hpp"

using namespace asep;
using asep::testing::path_graph;

TEST_CASE("edge list parsing") {
  SUBCASE("path graph") {
    Graph g = parse_edge_list("3 2\n0 1\n1 2");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
  }
  SUBCASE("comments, CRLF and blank lines") {
    Graph g = parse_edge_list("# header comment\r\n3 2\r\n\r\n# edge\r\n0 1\r\n2\t1\r\n");
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(1) == 2);
  }
  SUBCASE("one-based ids") {
    Graph g = parse_edge_list("3 2\n1 2\n2 3\n", true);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
  }
  SUBCASE("self-loop rejected") { CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 0"), doctest::Contains("self-loop"), GraphError); }
  SUBCASE("duplicate rejected") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n0 1"), doctest::Contains("duplicate"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), GraphError);
  }
  SUBCASE("id out of range") { CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 2"), doctest::Contains("line 2"), GraphError); }
  SUBCASE("edge count mismatch") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1"), doctest::Contains("m=2"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2"), GraphError);
  }
  SUBCASE("garbage reports line number") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 x"), doctest::Contains("line 3"), GraphError);
  }
  SUBCASE("round trip") {
    Graph g = asep::testing::cycle_graph(5);
    Graph h = parse_edge_list(to_edge_list(g));
    CHECK(h.edges() == g.edges());
  }
}

TEST_CASE("adjacency invariants") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = asep::testing::random_graph(rng, 1, 40, 0.05, 0.6);
    std::size_t total = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
      total += g.degree(v);
      for (Vertex u : g.neighbors(v)) {
        CHECK(u != v);
        CHECK(g.has_edge(u, v));
      }
    }
    CHECK(total == 2 * g.num_edges());
  }
}

TEST_CASE("threshold") {
  CHECK(threshold(0.5, 6) == 3);
  CHECK(threshold(0.2, 100) == 20);
  CHECK(threshold(1.0 / 10, 10) == 1);
  for (std::size_t n = 2; n <= 200; ++n) CHECK(threshold(1.0 / static_cast<double>(n), n) == 1);
  CHECK(threshold(0.4, 3) == 2);
  CHECK_THROWS_AS(threshold(1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(threshold(0.05, 10), std::invalid_argument);
  CHECK_THROWS_AS(threshold(-0.1, 10), std::invalid_argument);
}

TEST_CASE("components after removal") {
  SUBCASE("P5 minus centre") {
    auto view = components_after_removal(path_graph(5), std::vector<Vertex>{2});
    CHECK(view.count() == 2);
    CHECK(view.size_of(0) == 2);
    CHECK(view.size_of(1) == 2);
    CHECK(view.is_removed(2));
    CHECK(view.component_of(0) == view.component_of(1));
    CHECK(view.component_of(0) != view.component_of(3));
  }
  SUBCASE("remove everything") {
    auto view = components_after_removal(path_graph(4), std::vector<Vertex>{0, 1, 2, 3});
    CHECK(view.count() == 0);
    CHECK(view.largest() == 0);
  }
  SUBCASE("star minus centre") {
    auto view = components_after_removal(asep::testing::star_graph(4), std::vector<Vertex>{0});
    CHECK(view.count() == 4);
    for (auto s : view.sizes()) CHECK(s == 1);
  }
  SUBCASE("partition property against naive DFS") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = asep::testing::random_graph(rng, 1, 30, 0.02, 0.3);
      auto s = asep::testing::random_subset(rng, g.num_vertices(), rng.below(g.num_vertices() + 1));
      auto view = components_after_removal(g, s);
      std::vector<std::size_t> sizes(view.sizes().begin(), view.sizes().end());
      std::size_t total = 0;
      for (auto x : sizes) total += x;
      CHECK(total == g.num_vertices() - s.size());
      std::sort(sizes.begin(), sizes.end());
      CHECK(sizes == asep::testing::naive_component_sizes(g, s));
      // by_size is non-increasing and a permutation of component ids.
      auto order = view.by_size();
      REQUIRE(order.size() == view.count());
      for (std::size_t i = 1; i < order.size(); ++i) CHECK(view.size_of(order[i - 1]) >= view.size_of(order[i]));
      // Adjacent survivors share a component id.
      for (const auto& [u, v] : g.edges()) {
        if (!view.is_removed(u) && !view.is_removed(v)) CHECK(view.component_of(u) == view.component_of(v));
      }
    }
  }
}

TEST_CASE("betweenness") {
  SUBCASE("P3") {
    auto phi = betweenness(path_graph(3));
    CHECK(phi[0] == doctest::Approx(0.0));
    CHECK(phi[1] == doctest::Approx(1.0));
    CHECK(phi[2] == doctest::Approx(0.0));
  }
  SUBCASE("star K1,3") {
    auto phi = betweenness(asep::testing::star_graph(3));
    CHECK(phi[0] == doctest::Approx(3.0));
    for (int leaf = 1; leaf <= 3; ++leaf) CHECK(phi[leaf] == doctest::Approx(0.0));
  }
  SUBCASE("C4 against explicit path enumeration") {
    Graph c4 = asep::testing::cycle_graph(4);
    auto ordered = asep::testing::enumerated_betweenness(c4);
    auto phi = betweenness(c4);
    for (int v = 0; v < 4; ++v) {
      CHECK(ordered[v] == doctest::Approx(1.0));  // frozen: 2 ordered pairs x 1/2
      CHECK(phi[v] == doctest::Approx(0.5));
    }
  }
  SUBCASE("leaves of a tree score zero") {
    Graph tree(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    auto phi = betweenness(tree);
    for (Vertex leaf : {0, 2, 4, 5}) CHECK(phi[leaf] == 0.0);
    CHECK(phi[1] > 0.0);
  }
  SUBCASE("disconnected graph") {
    Graph g(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
    auto phi = betweenness(g);
    CHECK(phi[1] == doctest::Approx(1.0));
    CHECK(phi[5] == 0.0);
  }
  SUBCASE("factor two against ordered-pair counting on random graphs") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = asep::testing::random_graph(rng, 2, 25, 0.05, 0.5);
      auto phi = betweenness(g);
      auto ordered = asep::testing::ordered_pair_betweenness(g);
      for (std::size_t v = 0; v < g.num_vertices(); ++v) CHECK(std::abs(2.0 * phi[v] - ordered[v]) < 1e-9);
    }
  }
}
