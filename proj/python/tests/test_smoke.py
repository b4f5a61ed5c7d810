import json
import math

import pytest

import asep


def path(n):
    return asep.Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_graph_basics():
    g = path(4)
    assert g.num_vertices == 4
    assert g.num_edges == 3
    assert g.neighbors(1) == [0, 2]
    with pytest.raises(ValueError):
        asep.Graph(2, [(0, 0)])


def test_threshold_and_objectives():
    assert asep.threshold(0.5, 6) == 3
    g = path(5)
    assert sorted(asep.component_sizes(g, [2])) == [2, 2]
    assert asep.objective(g, [2], 1) == 1
    assert asep.objective(g, [2], 1, asep.Objective.TOTAL) == 2
    assert asep.removal_eval(g, [1, 3], 1, 2) == 1


def test_worked_example_frequencies():
    sets = [[0, 1, 2], [0, 2, 3], [1, 2, 3], [1, 3], [2, 3]]
    assert asep.node_frequencies(4, sets) == [2, 3, 4, 4]


def test_accept_prob():
    assert asep.accept_prob(-1.0, 5, 2000) == 1.0
    assert abs(asep.accept_prob(2.0, 2000, 2000) - math.exp(-2.0)) < 1e-12


def test_betweenness_path():
    assert asep.betweenness(path(3)) == pytest.approx([0.0, 1.0, 0.0])


def test_solve_matches_oracle():
    g = asep.generate_er(12, 0.3, seed=4)
    config = asep.SolverConfig()
    config.alpha = 0.4
    config.time_limit = 2.0
    report = asep.solve(g, config)
    size, witness = asep.brute_force_min_separator(g, 0.4)
    assert report.best_size == size
    assert asep.check_separator(g, report.best, asep.threshold(0.4, 12))
    assert len(witness) == size


def test_variants_and_determinism():
    g = asep.generate_er(60, 0.06, seed=2)
    config = asep.SolverConfig()
    config.set_population_size(10)
    config.time_limit = 0.0
    config.stagnation_limit = 10
    a = asep.solve(g, config)
    b = asep.solve(g, config)
    assert a.to_json(False) == b.to_json(False)
    assert json.loads(a.to_json())["best_size"] == a.best_size
    for variant in ("tssa-only", "no-tabu"):
        assert asep.solve(g, config, variant).best_size >= 1


def test_config_round_trip():
    c = asep.SolverConfig()
    c.alpha = 0.4
    back = asep.SolverConfig.from_key_values(c.to_key_values())
    assert back.alpha == 0.4
    assert back.population_size == 50
