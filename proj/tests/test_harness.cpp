#include <doctest.h>

#include <cmath>

#include "asep/benchmark.hpp"
#include "asep/config.hpp"
#include "asep/oracle.hpp"
#include "support.hpp"

using namespace asep;

TEST_CASE("instance generator") {
  SUBCASE("deterministic per seed") {
    for (ErModel model : {ErModel::Incremental, ErModel::Gilbert}) {
      InstanceSpec spec{60, 0.1, 5, model};
      CHECK(generate_er(spec).edges() == generate_er(spec).edges());
      InstanceSpec other = spec;
      other.seed = 6;
      CHECK(generate_er(spec).edges() != generate_er(other).edges());
    }
  }
  SUBCASE("single vertex") {
    Graph g = generate_er({1, 0.5, 1, ErModel::Gilbert});
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
  }
  SUBCASE("p close to one gives a complete graph") {
    Graph g = generate_er({30, 1.0 - 1e-12, 2, ErModel::Incremental});
    CHECK(g.num_edges() == 30 * 29 / 2);
  }
  SUBCASE("edge density") {
    Graph g = generate_er({400, 0.05, 3, ErModel::Gilbert});
    const double pairs = 400.0 * 399.0 / 2.0;
    const double sd = std::sqrt(pairs * 0.05 * 0.95);
    CHECK(std::abs(static_cast<double>(g.num_edges()) - 0.05 * pairs) < 5 * sd);
  }
  SUBCASE("validation and naming") {
    CHECK_THROWS_AS(generate_er({10, 0.0, 1, ErModel::Gilbert}), std::invalid_argument);
    CHECK_THROWS_AS(generate_er({10, 1.0, 1, ErModel::Gilbert}), std::invalid_argument);
    CHECK_THROWS_AS(generate_er({0, 0.5, 1, ErModel::Gilbert}), std::invalid_argument);
    CHECK(InstanceSpec{100, 0.05, 7, ErModel::Incremental}.name() == "er_n100_p0.05_s7_incremental");
    CHECK(parse_model("gilbert") == ErModel::Gilbert);
    CHECK_THROWS(parse_model("ba"));
  }
}

TEST_CASE("exact oracles") {
  auto p3 = asep::testing::path_graph(3);
  auto k4 = asep::testing::complete_graph(4);
  auto exact = brute_force_min_separator(p3, std::size_t{1});
  CHECK(exact.size == 1);
  CHECK(exact.witness == std::vector<Vertex>{1});
  CHECK(brute_force_min_separator(p3, 0.4).size == 1);
  CHECK(brute_force_min_separator(p3, std::size_t{3}).size == 0);
  CHECK(brute_force_min_separator(k4, std::size_t{1}).size == 3);
  CHECK(brute_force_min_separator(k4, std::size_t{2}).size == 2);
  CHECK(brute_force_vertex_cover(p3) == 1);
  CHECK(brute_force_vertex_cover(k4) == 3);
  CHECK(brute_force_vertex_cover(asep::testing::cycle_graph(5)) == 3);
  CHECK(brute_force_vertex_cover(Graph(4, std::vector<Edge>{})) == 0);
  CHECK_THROWS_AS(brute_force_min_separator(asep::testing::path_graph(21), std::size_t{3}), std::invalid_argument);

  Rng rng(40);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = asep::testing::random_graph(rng, 2, 12, 0.1, 0.6);
    CHECK(brute_force_min_separator(g, std::size_t{1}).size == brute_force_vertex_cover(g));
    const std::size_t tau = 1 + rng.below(g.num_vertices());
    auto best = brute_force_min_separator(g, tau);
    CHECK(check_separator(g, best.witness, tau));
    CHECK(best.witness.size() == best.size);
  }

  CHECK(check_separator(p3, std::vector<Vertex>{1}, 1));
  CHECK_FALSE(check_separator(p3, std::vector<Vertex>{0}, 1));
  CHECK(check_separator(p3, std::vector<Vertex>{0}, 2));
}

TEST_CASE("benchmark CSV") {
  std::vector<RunRecord> records{
      {"er_a", 0.2, "fis", 1, 14, 0.5, 2.0, 10, {{20, 0.1}, {14, 0.5}}},
      {"er_a", 0.2, "fis", 2, 16, 0.25, 1.5, 7, {{16, 0.25}}},
      {"er,\"b\"", 0.4, "no-tabu", 1, 3, 0.0, 0.1, 0, {{3, 0.0}}},
  };
  const std::string csv = to_csv(records);
  CHECK(csv.rfind("instance,alpha,variant,seed,best_size,time_to_best,total_time,generations,f_hat,f_bar,timeline\r\n",
                  0) == 0);
  CHECK(csv.find("\"er,\"\"b\"\"\"") != std::string::npos);
  CHECK(csv.find(",14,15.00,") != std::string::npos);  // f_hat 14, f_bar 15 for er_a

  auto back = parse_csv(csv);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].instance == records[i].instance);
    CHECK(back[i].alpha == doctest::Approx(records[i].alpha));
    CHECK(back[i].variant == records[i].variant);
    CHECK(back[i].seed == records[i].seed);
    CHECK(back[i].best_size == records[i].best_size);
    CHECK(back[i].generations == records[i].generations);
    REQUIRE(back[i].timeline.size() == records[i].timeline.size());
    for (std::size_t j = 0; j < records[i].timeline.size(); ++j) {
      CHECK(back[i].timeline[j].first == records[i].timeline[j].first);
      CHECK(back[i].timeline[j].second == doctest::Approx(records[i].timeline[j].second).epsilon(1e-6));
    }
  }

  SUBCASE("zero runs is a header-only file") {
    auto empty = to_csv({});
    CHECK(std::count(empty.begin(), empty.end(), '\n') == 1);
    CHECK(parse_csv(empty).empty());
  }
}

TEST_CASE("time to target") {
  std::vector<RunRecord> records;
  for (std::size_t r = 0; r < 100; ++r) {
    RunRecord rec;
    rec.instance = "x";
    rec.alpha = 0.2;
    rec.variant = "fis";
    rec.seed = r;
    const double t = static_cast<double>(100 - r) * 0.01;
    rec.timeline = {{30, 0.0}, {20, t}};
    rec.best_size = 20;
    records.push_back(rec);
  }
  auto data = time_to_target(records, 20);
  REQUIRE(data.points.size() == 100);
  CHECK(data.skipped == 0);
  CHECK(data.points.front().probability == doctest::Approx(0.005));
  CHECK(data.points.back().probability == doctest::Approx(0.995));
  for (std::size_t i = 1; i < 100; ++i) CHECK(data.points[i].seconds >= data.points[i - 1].seconds);
  CHECK(data.points.front().seconds == doctest::Approx(0.01));

  // A target nobody reached, and filtering.
  CHECK(time_to_target(records, 19).skipped == 100);
  CHECK(time_to_target(records, 25).points.front().seconds == doctest::Approx(0.01));
  TttFilter filter;
  filter.variant = "no-tabu";
  CHECK(time_to_target(records, 20, filter).points.empty());

  auto text = to_ttt(time_to_target(records, 30));
  CHECK(std::count(text.begin(), text.end(), '\n') == 100);
}

TEST_CASE("solver configuration") {
  SolverConfig defaults;
  CHECK(parse_key_values(to_key_values(defaults)) == defaults);

  auto c = parse_key_values("# tuned\n[fis]\ntheta = 20\nalpha=0.4\nobjective=total\ntabu=false\n");
  CHECK(c.population_size == 20);
  CHECK(c.reference_size == 10);
  CHECK(c.elite_size == 2);
  CHECK(c.alpha == 0.4);
  CHECK(c.objective == Objective::TotalExcess);
  CHECK_FALSE(c.tabu);
  CHECK(parse_key_values(to_key_values(c)) == c);

  CHECK_THROWS_AS(parse_key_values("bogus=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_key_values("theta=abc"), std::invalid_argument);
  SolverConfig bad;
  bad.elite_size = 60;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SolverConfig{};
  bad.mu = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
