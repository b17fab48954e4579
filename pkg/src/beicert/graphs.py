"""Labeled simple graphs on vertex set {1, ..., d}.

The labeling is part of the data, not a presentation detail: closedness and
weak closedness are properties of a labeled graph, and the polynomial
witnesses built downstream read labels directly (the canonical witness walks
the consecutive minors f_{1,2}, ..., f_{d-1,d}).  Nothing here renormalizes
labels behind the caller's back; relabel() is the only function that moves
them.

A labeling is a permutation of (1, ..., d) given as a tuple lab with
lab[v-1] = new label of vertex v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InputError

Labeling = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges stored as (i, j) pairs with i < j."""

    d: int
    edges: frozenset[tuple[int, int]]

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [b if a == v else a for (a, b) in self.edges if v in (a, b)]
        return tuple(sorted(out))


def make_graph(d: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph, validating vertex range and rejecting loops."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"vertex count must be a positive integer, got {d!r}")
    norm = set()
    for e in edges:
        pair = tuple(e)
        if len(pair) != 2:
            raise InputError(f"edge {e!r} is not a pair")
        u, v = pair
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InputError(f"edge {e!r} has non-integer endpoints")
        if u == v:
            raise InputError(f"loop at vertex {u} is not allowed")
        if not (1 <= u <= d and 1 <= v <= d):
            raise InputError(f"edge {e!r} leaves the vertex range 1..{d}")
        norm.add((u, v) if u < v else (v, u))
    return Graph(d, frozenset(norm))


def identity_labeling(d: int) -> Labeling:
    return tuple(range(1, d + 1))


def validate_labeling(d: int, labeling: Sequence[int]) -> Labeling:
    lab = tuple(labeling)
    if sorted(lab) != list(range(1, d + 1)):
        raise InputError(f"labeling {labeling!r} is not a permutation of 1..{d}")
    return lab


def relabel(g: Graph, labeling: Sequence[int]) -> Graph:
    """Apply a labeling: vertex v becomes labeling[v-1]."""
    lab = validate_labeling(g.d, labeling)
    return make_graph(g.d, [(lab[u - 1], lab[v - 1]) for (u, v) in g.edges])


# ---------------------------------------------------------------------------
# connectivity and components

def adjacency_masks(g: Graph) -> list[int]:
    """Bitmask adjacency, index v-1 for vertex v (bit w-1 set iff {v,w} edge)."""
    adj = [0] * g.d
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return adj


def components_after_removal(g: Graph, removed: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Connected components of the induced subgraph on V \\ removed.

    Blocks are sorted internally and listed by ascending minimum vertex, so
    the result is canonical for a given input.
    """
    rem = set(removed)
    for s in rem:
        if not (isinstance(s, int) and 1 <= s <= g.d):
            raise InputError(f"removed vertex {s!r} outside 1..{g.d}")
    parent = list(range(g.d + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.edges:
        if u in rem or v in rem:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    blocks: dict[int, list[int]] = {}
    for v in range(1, g.d + 1):
        if v in rem:
            continue
        blocks.setdefault(find(v), []).append(v)
    return tuple(sorted((tuple(sorted(b)) for b in blocks.values()), key=lambda b: b[0]))


def component_count(g: Graph, removed: Iterable[int]) -> int:
    return len(components_after_removal(g, removed))


def is_connected(g: Graph) -> bool:
    return component_count(g, ()) == 1


def component_count_table(g: Graph) -> list[int]:
    """c(S) for every removed-set bitmask S (bit v-1 <=> vertex v removed).

    Flood fill on adjacency bitmasks; index the returned list by the mask of
    the removed set.  Meant for exhaustive cut-set enumeration, where every
    subset is visited anyway.
    """
    adj = adjacency_masks(g)
    full = (1 << g.d) - 1
    table = [0] * (1 << g.d)
    for mask in range(1 << g.d):
        kept = full & ~mask
        count = 0
        rem = kept
        while rem:
            count += 1
            comp = 0
            frontier = rem & -rem
            while frontier:
                comp |= frontier
                grow = 0
                f = frontier
                while f:
                    bit = f & -f
                    f ^= bit
                    grow |= adj[bit.bit_length() - 1]
                frontier = grow & rem & ~comp
            rem &= ~comp
        table[mask] = count
    return table


# ---------------------------------------------------------------------------
# closed and weakly closed labelings

def _relabeled_masks(g: Graph, labeling: Labeling) -> list[int]:
    adj = [0] * g.d
    for u, v in g.edges:
        i, k = labeling[u - 1], labeling[v - 1]
        adj[i - 1] |= 1 << (k - 1)
        adj[k - 1] |= 1 << (i - 1)
    return adj


def is_closed_labeling(g: Graph, labeling: Sequence[int] | None = None) -> bool:
    """Whether every edge {i,k} under the labeling has {i,j} and {j,k} edges
    for all i < j < k."""
    lab = identity_labeling(g.d) if labeling is None else validate_labeling(g.d, labeling)
    adj = _relabeled_masks(g, lab)
    for u, v in g.edges:
        i, k = lab[u - 1], lab[v - 1]
        if i > k:
            i, k = k, i
        between = ((1 << (k - 1)) - 1) & ~((1 << i) - 1)
        if between & ~adj[i - 1] or between & ~adj[k - 1]:
            return False
    return True


def is_weakly_closed_labeling(g: Graph, labeling: Sequence[int] | None = None) -> bool:
    """Whether every edge {i,k} under the labeling has {i,j} or {j,k} an edge
    for all i < j < k."""
    lab = identity_labeling(g.d) if labeling is None else validate_labeling(g.d, labeling)
    adj = _relabeled_masks(g, lab)
    for u, v in g.edges:
        i, k = lab[u - 1], lab[v - 1]
        if i > k:
            i, k = k, i
        between = ((1 << (k - 1)) - 1) & ~((1 << i) - 1)
        if between & ~(adj[i - 1] | adj[k - 1]):
            return False
    return True


@dataclass(frozen=True)
class LabelingSearch:
    """Outcome of a labeling search.

    status is "found" (labeling holds the witness permutation), "absent"
    (the whole space was exhausted, so no labeling of the requested kind
    exists), or "budget_exceeded" (ran out of nodes; absence NOT proven).
    """

    status: str
    labeling: Labeling | None
    nodes_explored: int


def find_labeling(
    g: Graph,
    mode: str = "weakly_closed",
    node_budget: int = 2_000_000,
    max_d: int = 10,
) -> LabelingSearch:
    """Search for a labeling under which g is closed or weakly closed.

    Labels are assigned in increasing order; a partial assignment is pruned
    as soon as some fully-labeled triple violates the condition (the triples
    ending at the newest label are exactly the ones that become decidable).
    Candidates for each label are tried in ascending vertex order, so the
    first labeling found is canonical.
    """
    if mode not in ("closed", "weakly_closed"):
        raise InputError(f"unknown labeling mode {mode!r}")
    if g.d > max_d:
        raise InputError(f"labeling search capped at {max_d} vertices, got d={g.d}")
    closed = mode == "closed"
    adj = adjacency_masks(g)
    seq: list[int] = []
    used = [False] * (g.d + 1)
    nodes = 0

    def edge(a: int, b: int) -> bool:
        return bool(adj[a - 1] >> (b - 1) & 1)

    def extend_ok(v: int) -> bool:
        k = len(seq) + 1
        for i in range(1, k):
            if not edge(seq[i - 1], v):
                continue
            for j in range(i + 1, k):
                left = edge(seq[i - 1], seq[j - 1])
                right = edge(seq[j - 1], v)
                good = (left and right) if closed else (left or right)
                if not good:
                    return False
        return True

    def rec() -> Labeling | None:
        nonlocal nodes
        if len(seq) == g.d:
            lab = [0] * g.d
            for pos, v in enumerate(seq, start=1):
                lab[v - 1] = pos
            return tuple(lab)
        for v in range(1, g.d + 1):
            if used[v]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("labeling search budget")
            if not extend_ok(v):
                continue
            used[v] = True
            seq.append(v)
            got = rec()
            if got is not None:
                return got
            seq.pop()
            used[v] = False
        return None

    try:
        lab = rec()
    except BudgetExceeded:
        return LabelingSearch("budget_exceeded", None, nodes)
    if lab is None:
        return LabelingSearch("absent", None, nodes)
    return LabelingSearch("found", lab, nodes)


# ---------------------------------------------------------------------------
# paths and bipartitions

def hamiltonian_path(g: Graph, max_d: int = 20) -> tuple[int, ...] | None:
    """First Hamiltonian path in the fixed search order, or None.

    Start vertices and neighbor extensions are tried in ascending order, so
    the result is deterministic.  Exact backtracking; refuse d > max_d.
    """
    if g.d > max_d:
        raise InputError(f"Hamiltonian search capped at {max_d} vertices, got d={g.d}")
    if g.d == 1:
        return (1,)
    if not is_connected(g):
        return None
    adj = adjacency_masks(g)
    neigh = [sorted(w + 1 for w in range(g.d) if adj[v] >> w & 1) for v in range(g.d)]
    path: list[int] = []
    full = (1 << g.d) - 1

    def rec(v: int, visited: int) -> bool:
        path.append(v)
        if visited == full:
            return True
        for w in neigh[v - 1]:
            bit = 1 << (w - 1)
            if not visited & bit and rec(w, visited | bit):
                return True
        path.pop()
        return False

    for start in range(1, g.d + 1):
        if rec(start, 1 << (start - 1)):
            return tuple(path)
    return None


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-color g if bipartite, else None.

    The minimum vertex of each component goes to the first class, so vertex 1
    is always in the first class.
    """
    color = [0] * (g.d + 1)
    for start in range(1, g.d + 1):
        if color[start]:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if color[w] == 0:
                    color[w] = 3 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side_a = tuple(v for v in range(1, g.d + 1) if color[v] == 1)
    side_b = tuple(v for v in range(1, g.d + 1) if color[v] == 2)
    return side_a, side_b


# ---------------------------------------------------------------------------
# serialization

def graph_to_json(g: Graph) -> str:
    obj = {"d": g.d, "edges": [[u, v] for (u, v) in g.sorted_edges]}
    return json.dumps(obj, indent=2) + "\n"


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad graph JSON: {exc}") from None
    if not isinstance(obj, dict) or "d" not in obj or "edges" not in obj:
        raise InputError('graph JSON needs keys "d" and "edges"')
    d = obj["d"]
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise InputError('"edges" must be a list of pairs')
    return make_graph(d, edges)


def graph_to_text(g: Graph) -> str:
    lines = [str(g.d)]
    lines += [f"{u} {v}" for (u, v) in g.sorted_edges]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty graph text")
    try:
        d = int(lines[0])
    except ValueError:
        raise InputError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"bad edge line {ln!r}") from None
    return make_graph(d, edges)


def parse_graph(text: str) -> Graph:
    """Read either serialization; JSON if the text starts with '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(text)
    return graph_from_text(text)
