import json

import pytest

import graphpot as gp


def test_builtin_graphs():
    theta = gp.named_graph("theta")
    assert theta.genus == 2
    assert theta.bridges == []
    dumbbell = gp.named_graph("dumbbell")
    assert dumbbell.bridges == [0]
    assert dumbbell.num_loops == 2
    with pytest.raises(KeyError):
        gp.named_graph("nope")


def test_graph_construction_errors():
    g = gp.Graph(2, [(0, 0), (0, 1), (1, 1)])
    assert g.bridges == [1]
    with pytest.raises(gp.StructuralError):
        gp.Graph(2, [(0, 1), (0, 1)])


def test_json_round_trip():
    g, coloring = gp.graph_from_json('{"vertices": 2, "edges": [[0,1],[0,1],[0,1]], "coloring": [0,1]}')
    assert coloring == [0, 1]
    assert gp.graph_from_json(g.to_json())[0] == g


def test_enumeration_and_canonical_ids():
    assert len(gp.enumerate_graphs(3)) == 5
    ids = {gp.canonical_id(g) for g in gp.enumerate_graphs(4)}
    assert len(ids) == 17


def test_periods():
    theta = gp.named_graph("theta")
    assert gp.periods(theta, 10) == [1, 0, 8, 0, 216, 0, 8000, 0, 343000, 0, 16003008]
    assert gp.period(theta, 8, parity=0) == 645120
    ladder = gp.named_graph("ladder3")
    assert gp.period(ladder, 8) == 3265920
    assert gp.period(ladder, 6, engine="naive") == gp.period(ladder, 6)
    with pytest.raises(gp.PreconditionError):
        gp.period(theta, 4, engine="fast")


def test_potential_and_conifold():
    theta = gp.named_graph("theta")
    pot = gp.potential(theta)
    assert pot["num_vars"] == 3
    assert len(pot["terms"]) == 8
    for g in gp.enumerate_graphs(3):
        assert gp.conifold_value(g) == 16


def test_mutation_keeps_periods():
    g = gp.named_graph("ladder3")
    h, coloring = gp.mutate(g, 2)
    assert gp.periods(h, 8, coloring=coloring) == gp.periods(g, 8)


def test_polytope_reports():
    theta = gp.named_graph("theta")
    pp = gp.polytope(theta)
    assert sorted(map(tuple, pp["polar_vertices"])) == sorted(
        (a, b, c) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1))
    assert gp.is_terminal(theta)["terminal"] is True
    dumbbell = gp.named_graph("dumbbell")
    report = gp.is_terminal(dumbbell, coloring=[0, 1])
    assert report["terminal"] is False
    assert report["witness"] == [-1, 0, 0]
    assert gp.lattice_points(gp.named_graph("ladder3"))["rays"] == 16
    assert gp.triangulate(theta)["verdict"] == "SMALL"
    assert gp.manon(gp.named_graph("theta_with_tail"))["facets_equal"] is True
    assert gp.export_text(theta).startswith("dim 3\n")


def test_verify_quick():
    report = gp.verify("quick")
    assert report["failed"] == 0
    assert json.dumps(report)
