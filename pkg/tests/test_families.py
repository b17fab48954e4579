"""Built-in graph families and the two leaf compositions."""

import pytest

from beicert.errors import InputError
from beicert.families import (
    caterpillar,
    caterpillar_spine,
    circ_compose,
    complete_graph,
    complete_multipartite,
    flipped_half_graph,
    half_graph,
    join,
    join_of_completes,
    multipartite_parts,
    path_graph,
    star_compose,
)
from beicert.graphs import is_connected, is_weakly_closed_labeling, make_graph


def test_complete_and_path():
    assert complete_graph(3).sorted_edges == ((1, 2), (1, 3), (2, 3))
    assert path_graph(4).sorted_edges == ((1, 2), (2, 3), (3, 4))
    assert path_graph(1).sorted_edges == ()
    with pytest.raises(InputError):
        complete_graph(0)


def test_multipartite():
    assert multipartite_parts([3, 2, 1]) == ((1, 2, 3), (4, 5), (6,))
    g = complete_multipartite([3, 2, 1])
    assert g.d == 6
    # no edges inside parts, all edges across
    assert not g.has_edge(1, 2) and not g.has_edge(4, 5)
    assert g.has_edge(1, 4) and g.has_edge(3, 6) and g.has_edge(5, 6)
    assert len(g.edges) == 3 * 2 + 3 * 1 + 2 * 1
    assert complete_multipartite([1, 1, 1]) == complete_graph(3)
    with pytest.raises(InputError):
        complete_multipartite([])
    with pytest.raises(InputError):
        complete_multipartite([2, 0])


def test_caterpillar():
    assert caterpillar_spine([0, 1, 0, 0]) == (1, 2, 4, 5)
    g = caterpillar([0, 1, 0, 0])
    assert g.d == 5
    assert g.sorted_edges == ((1, 2), (2, 3), (2, 4), (4, 5))
    # all-zero legs give the path
    assert caterpillar([0, 0, 0]) == path_graph(3)
    with pytest.raises(InputError):
        caterpillar([0])
    with pytest.raises(InputError):
        caterpillar([1, 0, 0])
    with pytest.raises(InputError):
        caterpillar([0, -1, 0])


def test_join():
    g = join(complete_graph(2), path_graph(2))
    # vertices 3,4 are the second block; every cross pair is an edge
    assert g.d == 4
    assert g.has_edge(1, 3) and g.has_edge(2, 4) and g.has_edge(1, 2) and g.has_edge(3, 4)


def test_join_of_completes_figure():
    g = join_of_completes(1, [2, 3])
    assert g.sorted_edges == (
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (4, 5), (4, 6), (5, 6),
    )
    assert is_connected(g)
    with pytest.raises(InputError):
        join_of_completes(0, [2, 2])
    with pytest.raises(InputError):
        join_of_completes(1, [])


def test_half_graphs():
    g3 = half_graph(3)
    assert g3.sorted_edges == ((1, 2), (1, 4), (1, 6), (3, 4), (3, 6), (5, 6))
    f2 = flipped_half_graph(2)
    assert f2 == path_graph(4)
    assert half_graph(1) == path_graph(2)
    # both carry weakly closed natural labelings
    for m in range(1, 5):
        assert is_weakly_closed_labeling(half_graph(m))
        assert is_weakly_closed_labeling(flipped_half_graph(m))
    with pytest.raises(InputError):
        half_graph(0)


def test_star_compose():
    p3 = path_graph(3)
    assert star_compose(p3, 3, p3, 1) == path_graph(5)
    k2 = complete_graph(2)
    assert star_compose(k2, 2, k2, 1) == path_graph(3)
    f2 = flipped_half_graph(2)
    assert star_compose(f2, 4, f2, 1) == path_graph(7)
    with pytest.raises(InputError):
        star_compose(p3, 2, p3, 1)  # 2 is not a leaf


def test_circ_compose():
    p4 = path_graph(4)
    assert circ_compose(p4, 4, p4, 1) == path_graph(5)
    p3 = path_graph(3)
    assert circ_compose(p3, 3, p3, 1) == path_graph(3)
    with pytest.raises(InputError):
        circ_compose(p4, 3, p4, 1)


def test_compose_preserves_weak_closedness():
    # the shifted labeling from the composition lemmas stays weakly closed
    for a in range(1, 4):
        for b in range(1, 4):
            fa, fb = flipped_half_graph(a), flipped_half_graph(b)
            assert is_weakly_closed_labeling(star_compose(fa, 2 * a, fb, 1))
            if a >= 2 and b >= 2:
                assert is_weakly_closed_labeling(circ_compose(fa, 2 * a, fb, 1))


def test_compose_leaf_validation():
    triangle = make_graph(3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(InputError):
        star_compose(triangle, 1, path_graph(3), 1)
