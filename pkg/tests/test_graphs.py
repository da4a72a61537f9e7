import itertools
import json

import pytest

from kromatic import bundled_graph, bundled_model
from kromatic.graphs import (
    Graph, acyclic_orientations, chromatic_polynomial, clan_graph,
    graph_from_json, graph_to_json, has_induced_c4_or_claw, independence_polynomial,
    independent_sets, induced_subgraph, mask_of, mask_vertices,
    natural_unit_interval_model, model_from_json, popcount, source_components,
    unit_interval_graph, UnitIntervalModel,
)

K2 = bundled_graph("k2")
K3 = bundled_graph("k3")
P3 = bundled_graph("p3")
P4 = bundled_graph("p4")
C4 = bundled_graph("c4")
PAW = bundled_graph("paw")
ALL = [bundled_graph(n) for n in ("k1", "k2", "k3", "p3", "p4", "c4", "paw")]


def test_masks():
    assert mask_of([1, 3]) == 0b101
    assert mask_vertices(0b1011) == [1, 2, 4]
    assert popcount(0b1011) == 3


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 3)])


def test_json_round_trip():
    for g in ALL:
        assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g
    with pytest.raises(ValueError):
        graph_from_json({"edges": []})


def test_induced_subgraph():
    sub, mapping = induced_subgraph(P3, mask_of([1, 3]))
    assert sub.n == 2 and sub.edges == ()
    assert mapping == {1: 1, 3: 2}
    sub2, _ = induced_subgraph(PAW, mask_of([1, 2, 3]))
    assert sub2.edges == ((1, 2), (1, 3), (2, 3))


def test_clan_graph():
    cg, piece_vertex = clan_graph(P3, (2, 0, 1))
    # two copies of vertex 1 (a K2) plus one copy of vertex 3, no cross edges
    assert piece_vertex == (1, 1, 3)
    assert cg.edges == ((1, 2),)
    cg2, pv2 = clan_graph(K2, (1, 2))
    assert pv2 == (1, 2, 2)
    assert cg2.edges == ((1, 2), (1, 3), (2, 3))
    with pytest.raises(ValueError):
        clan_graph(K2, (1,))


def test_independence_polynomial():
    assert independence_polynomial(K2) == (1, 2)
    assert independence_polynomial(P3) == (1, 3, 1)
    assert independence_polynomial(K3) == (1, 3)
    assert independence_polynomial(C4) == (1, 4, 2)
    # against the direct subset filter
    for g in ALL:
        by_filter = [0] * (g.n + 1)
        for k in range(g.n + 1):
            for sub in itertools.combinations(g.vertices(), k):
                if all(not g.adjacent(u, v) for u, v in itertools.combinations(sub, 2)):
                    by_filter[k] += 1
        while by_filter and by_filter[-1] == 0:
            by_filter.pop()
        assert independence_polynomial(g) == tuple(by_filter)
        assert len(independent_sets(g)) == sum(by_filter)


def test_acyclic_orientation_count_vs_chromatic():
    # |AO(G)| = |chi_G(-1)|
    for g in ALL:
        chi = chromatic_polynomial(g)
        at_minus_one = sum(c * (-1) ** i for i, c in enumerate(chi))
        assert len(acyclic_orientations(g)) == abs(at_minus_one)
    assert len(acyclic_orientations(K3)) == 6


def test_source_components():
    # K2 oriented 2 -> 1: least vertex 1 reaches nothing, then 2
    comps = source_components(K2, ((2, 1),))
    assert comps == [{1}, {2}]
    comps = source_components(K2, ((1, 2),))
    assert comps == [{1, 2}]
    # P3 with 1 -> 2 and 3 -> 2: start at 1, flood {1, 2}; then {3}
    comps = source_components(P3, ((1, 2), (3, 2)))
    assert comps == [{1, 2}, {3}]


def test_unit_interval_models():
    assert unit_interval_graph(UnitIntervalModel(3, (2, 3, 3))) == P3
    assert unit_interval_graph(bundled_model("ui-k2")) == K2
    assert unit_interval_graph(bundled_model("ui-p4")) == P4
    assert unit_interval_graph(bundled_model("ui-paw")) == PAW
    with pytest.raises(ValueError):
        UnitIntervalModel(3, (3, 2, 3))
    with pytest.raises(ValueError):
        UnitIntervalModel(2, (0, 2))
    with pytest.raises(ValueError):
        model_from_json({"n": 2, "bounds": [2]})


def test_natural_unit_interval_recognition():
    assert natural_unit_interval_model(K2).h == (2, 2)
    assert natural_unit_interval_model(P3).h == (2, 3, 3)
    assert natural_unit_interval_model(PAW).h == (3, 3, 4, 4)
    assert natural_unit_interval_model(C4) is None
    for name in ("ui-k2", "ui-k3", "ui-p3", "ui-p4", "ui-paw"):
        m = bundled_model(name)
        assert natural_unit_interval_model(unit_interval_graph(m)).h == m.h


def test_unit_interval_pattern_freeness():
    # graphs with a natural unit-interval model contain no induced C4 or claw
    for g in ALL:
        if natural_unit_interval_model(g) is not None:
            assert not has_induced_c4_or_claw(g)
    assert has_induced_c4_or_claw(C4)
    claw = Graph(4, [(1, 2), (1, 3), (1, 4)])
    assert has_induced_c4_or_claw(claw)
    assert natural_unit_interval_model(claw) is None
