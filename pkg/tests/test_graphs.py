"""Graph container, component counting, labeling predicates, search."""

import random

import pytest

from beicert.errors import InputError
from beicert.graphs import (
    bipartition,
    component_count,
    component_count_table,
    components_after_removal,
    find_labeling,
    graph_from_json,
    graph_from_text,
    graph_to_json,
    graph_to_text,
    hamiltonian_path,
    identity_labeling,
    is_closed_labeling,
    is_connected,
    is_weakly_closed_labeling,
    make_graph,
    parse_graph,
    relabel,
    validate_labeling,
)


def random_connected_graph(rng, d):
    # random spanning tree plus random extra edges
    edges = []
    for v in range(2, d + 1):
        edges.append((rng.randrange(1, v), v))
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            if rng.random() < 0.3:
                edges.append((i, j))
    return make_graph(d, edges)


def test_make_graph_normalizes_and_validates():
    g = make_graph(3, [(2, 1), (2, 3)])
    assert g.sorted_edges == ((1, 2), (2, 3))
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)
    assert g.neighbors(2) == (1, 3)
    with pytest.raises(InputError):
        make_graph(3, [(1, 1)])
    with pytest.raises(InputError):
        make_graph(3, [(0, 2)])
    with pytest.raises(InputError):
        make_graph(3, [(1, 4)])
    with pytest.raises(InputError):
        make_graph(0, [])


def test_relabel_roundtrip():
    g = make_graph(4, [(1, 2), (2, 3), (3, 4)])
    lab = (2, 4, 1, 3)
    h = relabel(g, lab)
    assert h.sorted_edges == ((1, 3), (1, 4), (2, 4))
    inverse = [0] * 4
    for old, new in enumerate(lab, start=1):
        inverse[new - 1] = old
    assert relabel(h, tuple(inverse)) == g
    with pytest.raises(InputError):
        validate_labeling(4, (1, 2, 2, 4))
    with pytest.raises(InputError):
        validate_labeling(4, (1, 2, 3))


def test_components_after_removal():
    g = make_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    assert components_after_removal(g, []) == ((1, 2, 3, 4, 5),)
    assert components_after_removal(g, [3]) == ((1, 2), (4, 5))
    assert components_after_removal(g, [2, 4]) == ((1,), (3,), (5,))
    assert component_count(g, [3]) == 2
    assert is_connected(g)
    assert not is_connected(make_graph(3, [(1, 2)]))


def test_component_count_table_matches_direct():
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randrange(2, 8)
        g = random_connected_graph(rng, d)
        table = component_count_table(g)
        assert len(table) == 1 << d
        for mask in range(1 << d):
            removed = [v for v in range(1, d + 1) if mask >> (v - 1) & 1]
            assert table[mask] == len(components_after_removal(g, removed))


def test_components_partition_and_no_cross_edges():
    rng = random.Random(7)
    for _ in range(40):
        d = rng.randrange(3, 9)
        g = random_connected_graph(rng, d)
        removed = sorted(rng.sample(range(1, d + 1), rng.randrange(0, d - 1)))
        blocks = components_after_removal(g, removed)
        seen = [v for b in blocks for v in b]
        assert sorted(seen) == [v for v in range(1, d + 1) if v not in removed]
        index = {v: i for i, b in enumerate(blocks) for v in b}
        for u, v in g.sorted_edges:
            if u in index and v in index:
                assert index[u] == index[v]


def test_closed_and_weakly_closed():
    path = make_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert is_closed_labeling(path)
    assert is_weakly_closed_labeling(path)
    # the same path labeled 1-3-2-4 is no longer closed but stays weakly closed
    zig = make_graph(4, [(1, 3), (2, 3), (2, 4)])
    assert not is_closed_labeling(zig)
    assert is_weakly_closed_labeling(zig)
    # stars are weakly closed under any labeling: the center meets every edge
    claw = make_graph(4, [(1, 4), (2, 4), (3, 4)])
    assert is_weakly_closed_labeling(claw)
    assert is_weakly_closed_labeling(claw, (1, 3, 4, 2))
    # three legs of length two: vertex 3 sits between the edge {1,6} without
    # touching either endpoint
    spider = make_graph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
    assert not is_weakly_closed_labeling(spider)


def test_closed_implies_weakly_closed():
    rng = random.Random(23)
    hits = 0
    for _ in range(300):
        d = rng.randrange(2, 7)
        g = random_connected_graph(rng, d)
        lab = list(range(1, d + 1))
        rng.shuffle(lab)
        if is_closed_labeling(g, tuple(lab)):
            hits += 1
            assert is_weakly_closed_labeling(g, tuple(lab))
    assert hits > 0


def test_find_labeling_statuses():
    path = make_graph(5, [(1, 3), (3, 2), (2, 5), (5, 4)])
    res = find_labeling(path, mode="closed")
    assert res.status == "found"
    assert is_closed_labeling(path, res.labeling)
    spider = make_graph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
    res = find_labeling(spider, mode="weakly_closed")
    assert res.status == "absent"
    res = find_labeling(spider, mode="weakly_closed", node_budget=3)
    assert res.status == "budget_exceeded"
    with pytest.raises(InputError):
        find_labeling(path, mode="open")
    with pytest.raises(InputError):
        find_labeling(make_graph(11, [(i, i + 1) for i in range(1, 11)]), max_d=10)


def test_find_labeling_agrees_with_exhaustive():
    from itertools import permutations

    rng = random.Random(5)
    for _ in range(30):
        d = rng.randrange(2, 6)
        g = random_connected_graph(rng, d)
        for mode, pred in (("closed", is_closed_labeling), ("weakly_closed", is_weakly_closed_labeling)):
            exhaustive = any(pred(g, lab) for lab in permutations(range(1, d + 1)))
            assert (find_labeling(g, mode=mode).status == "found") == exhaustive


def test_hamiltonian_path():
    g = make_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert hamiltonian_path(g) == (1, 2, 3, 4)
    star = make_graph(4, [(1, 2), (1, 3), (1, 4)])
    assert hamiltonian_path(star) is None
    k1 = make_graph(1, [])
    assert hamiltonian_path(k1) == (1,)
    # path existence is checked against edges
    rng = random.Random(3)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randrange(2, 8))
        path = hamiltonian_path(g)
        if path is not None:
            assert sorted(path) == list(range(1, g.d + 1))
            assert all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def test_bipartition():
    even = make_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert bipartition(even) == ((1, 3), (2, 4))
    odd = make_graph(3, [(1, 2), (2, 3), (3, 1)])
    assert bipartition(odd) is None


def test_serialization_roundtrips():
    g = make_graph(4, [(1, 2), (2, 4)])
    assert graph_from_json(graph_to_json(g)) == g
    assert graph_from_text(graph_to_text(g)) == g
    assert parse_graph(graph_to_json(g)) == g
    assert parse_graph(graph_to_text(g)) == g
    # byte-stable output
    assert graph_to_json(g) == graph_to_json(make_graph(4, [(2, 4), (1, 2)]))
    with pytest.raises(InputError):
        graph_from_json('{"d": 2}')
    with pytest.raises(InputError):
        graph_from_text("2\n1\n")


def test_identity_labeling():
    assert identity_labeling(4) == (1, 2, 3, 4)
