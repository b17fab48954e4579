"""Generators for the graph families used by the certification routines.

Each generator fixes a specific vertex labeling, because the downstream
certificates are labeling-sensitive: the canonical witness runs through the
consecutive minors f_{1,2}, ..., f_{d-1,d}, and the structure theorems for
these families are stated for these particular labelings.

Families:
  * complete multipartite graphs, parts on consecutive label blocks;
  * caterpillars, spine and legs interleaved so legs of a spine vertex
    take the labels immediately after it;
  * joins, including the join of a complete graph with a disjoint union
    of complete graphs (the graphs whose binomial edge ideal has at most
    two associated primes);
  * half graphs and their parity-flipped relabeling;
  * star and circ compositions, which glue graphs at leaves and preserve
    weak closedness.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import InputError
from .graphs import Graph, make_graph, relabel


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"complete graph needs n >= 1, got {n}")
    return make_graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"path graph needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


# ---------------------------------------------------------------------------
# complete multipartite

def multipartite_parts(sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Label blocks of the parts: consecutive runs in the given order."""
    if not sizes:
        raise InputError("need at least one part")
    parts = []
    start = 1
    for n in sizes:
        if not isinstance(n, int) or n < 1:
            raise InputError(f"part sizes must be positive integers, got {n!r}")
        parts.append(tuple(range(start, start + n)))
        start += n
    return tuple(parts)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; part i occupies the i-th consecutive
    block of labels."""
    parts = multipartite_parts(sizes)
    d = sum(sizes)
    edges = []
    for a, pa in enumerate(parts):
        for pb in parts[a + 1:]:
            edges += [(u, v) for u in pa for v in pb]
    return make_graph(d, edges)


# ---------------------------------------------------------------------------
# caterpillars

def caterpillar_spine(leg_counts: Sequence[int]) -> tuple[int, ...]:
    """Spine labels v_1 = 1, v_{i+1} = v_i + a_i + 1 for leg counts a."""
    a = tuple(leg_counts)
    if len(a) < 2:
        raise InputError("caterpillar needs a spine of at least two vertices")
    if any(not isinstance(x, int) or x < 0 for x in a):
        raise InputError(f"leg counts must be nonnegative integers, got {a!r}")
    if a[0] != 0 or a[-1] != 0:
        raise InputError("spine endpoints must have no legs (a_1 = a_l = 0)")
    spine = [1]
    for x in a[:-1]:
        spine.append(spine[-1] + x + 1)
    return tuple(spine)


def caterpillar(leg_counts: Sequence[int]) -> Graph:
    """Caterpillar tree: spine vertex v_i carries legs v_i + 1, ..., v_i + a_i.

    The last spine vertex gets label d, so the spine endpoints are 1 and d.
    """
    a = tuple(leg_counts)
    spine = caterpillar_spine(a)
    d = len(a) + sum(a)
    edges = [(spine[i], spine[i + 1]) for i in range(len(spine) - 1)]
    for i, v in enumerate(spine):
        edges += [(v, v + t) for t in range(1, a[i] + 1)]
    return make_graph(d, edges)


# ---------------------------------------------------------------------------
# joins

def join(g1: Graph, g2: Graph) -> Graph:
    """Join of two graphs; the second operand's labels are shifted by g1.d."""
    d = g1.d + g2.d
    edges = list(g1.edges)
    edges += [(u + g1.d, v + g1.d) for (u, v) in g2.edges]
    edges += [(u, w + g1.d) for u in range(1, g1.d + 1) for w in range(1, g2.d + 1)]
    return make_graph(d, edges)


def join_of_completes(n0: int, parts: Sequence[int]) -> Graph:
    """Join of K_{n0} (labels 1..n0) with a disjoint union of complete
    graphs on the following label blocks.

    With at least two blocks these are exactly the connected graphs whose
    binomial edge ideal has two minimal primes: the empty cut set and
    {1, ..., n0}.
    """
    if not isinstance(n0, int) or n0 < 1:
        raise InputError(f"center size must be a positive integer, got {n0!r}")
    if not parts:
        raise InputError("need at least one complete block to join")
    blocks = multipartite_parts(parts)
    d = n0 + sum(parts)
    edges = list(complete_graph(n0).edges)
    for block in blocks:
        shifted = [v + n0 for v in block]
        edges += combinations(shifted, 2)
        edges += [(u, w) for u in range(1, n0 + 1) for w in shifted]
    return make_graph(d, edges)


# ---------------------------------------------------------------------------
# half graphs

def half_graph(m: int) -> Graph:
    """Bipartite graph on [2m]: odd a adjacent to even b whenever a < b."""
    if not isinstance(m, int) or m < 1:
        raise InputError(f"half graph needs m >= 1, got {m!r}")
    edges = []
    for i in range(1, 2 * m, 2):
        edges += [(i, j) for j in range(i + 1, 2 * m + 1, 2)]
    return make_graph(2 * m, edges)


def flipped_half_graph(m: int) -> Graph:
    """half_graph(m) with each odd/even label pair swapped.

    Under this labeling the vertices 1 and 2m are leaves and {1,2} and
    {2m-1,2m} are edges, which is what the star and circ compositions want
    from their building blocks.
    """
    g = half_graph(m)
    lab = [v + 1 if v % 2 == 1 else v - 1 for v in range(1, 2 * m + 1)]
    return relabel(g, lab)


# ---------------------------------------------------------------------------
# leaf compositions

def _leaf_neighbor(g: Graph, v: int) -> int:
    if not 1 <= v <= g.d:
        raise InputError(f"vertex {v} outside 1..{g.d}")
    nb = g.neighbors(v)
    if len(nb) != 1:
        raise InputError(f"vertex {v} must be a leaf, has degree {len(nb)}")
    return nb[0]


def star_compose(g1: Graph, leaf1: int, g2: Graph, leaf2: int) -> Graph:
    """Identify a leaf of g1 with a leaf of g2.

    g1 keeps its labels; the other vertices of g2 are relabeled
    order-preserving onto g1.d + 1, ..., g1.d + g2.d - 1, and leaf2 takes
    leaf1's label.  When leaf1 = g1.d and leaf2 = 1 this is the labeling
    under which the composition of weakly closed graphs stays weakly closed.
    """
    _leaf_neighbor(g1, leaf1)
    _leaf_neighbor(g2, leaf2)
    remap = {leaf2: leaf1}
    nxt = g1.d + 1
    for v in range(1, g2.d + 1):
        if v != leaf2:
            remap[v] = nxt
            nxt += 1
    edges = list(g1.edges)
    edges += [(remap[u], remap[v]) for (u, v) in g2.edges]
    return make_graph(g1.d + g2.d - 1, edges)


def circ_compose(g1: Graph, leaf1: int, g2: Graph, leaf2: int) -> Graph:
    """Remove a leaf from each graph and identify their neighbors.

    The surviving vertices of g1 are relabeled order-preserving onto
    1, ..., g1.d - 1; the surviving vertices of g2 other than leaf2's
    neighbor go order-preserving onto g1.d, ..., g1.d + g2.d - 3; the two
    neighbors are identified.  When leaf1 = g1.d and leaf2 = 1 this is the
    labeling from the weak-closedness composition lemma.
    """
    n1 = _leaf_neighbor(g1, leaf1)
    n2 = _leaf_neighbor(g2, leaf2)
    if g1.d < 2 or g2.d < 2:
        raise InputError("circ composition needs at least two vertices per side")
    remap1 = {}
    nxt = 1
    for v in range(1, g1.d + 1):
        if v != leaf1:
            remap1[v] = nxt
            nxt += 1
    remap2 = {n2: remap1[n1]}
    nxt = g1.d
    for v in range(1, g2.d + 1):
        if v not in (leaf2, n2):
            remap2[v] = nxt
            nxt += 1
    edges = [(remap1[u], remap1[v]) for (u, v) in g1.edges if leaf1 not in (u, v)]
    edges += [(remap2[u], remap2[v]) for (u, v) in g2.edges if leaf2 not in (u, v)]
    return make_graph(g1.d + g2.d - 3, edges)
