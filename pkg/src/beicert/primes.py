"""Minimal primes of a binomial edge ideal, indexed by cut sets.

For a connected graph G on [d], the minimal primes of the binomial edge
ideal J_G are the ideals p_S generated by the variables x_s, y_s for s in S
together with all 2x2 minors within each connected component of G \\ S,
where S ranges over the cut sets: S is empty, or removing any s from S
strictly decreases the number of components, c(S \\ {s}) < c(S).  The
height is |S| + d - c(S).

Everything here is exhaustive over subsets, which is the point: these
values act as ground truth for the certification layer, so no structure
theorem shortcuts are taken.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceeded, InputError
from .graphs import Graph, component_count_table, components_after_removal, hamiltonian_path, is_connected


@dataclass(frozen=True)
class MinimalPrime:
    """One minimal prime p_S: its cut set, the components of G \\ S, and
    the height |S| + d - c(S)."""

    d: int
    cut_set: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    height: int


@dataclass(frozen=True)
class Classification:
    ass_count: int
    unmixed: bool
    accessible: bool
    traceable: bool


def is_cut_set(g: Graph, subset: Iterable[int]) -> bool:
    """Whether p_S is a minimal prime: S empty, or dropping any single
    element strictly decreases the component count of G \\ S."""
    s = sorted(set(subset))
    for v in s:
        if not (isinstance(v, int) and 1 <= v <= g.d):
            raise InputError(f"vertex {v!r} outside 1..{g.d}")
    if not s:
        return True
    if len(s) >= g.d:
        return False
    c_full = len(components_after_removal(g, s))
    for v in s:
        rest = [w for w in s if w != v]
        if len(components_after_removal(g, rest)) >= c_full:
            return False
    return True


def enumerate_minimal_primes(g: Graph, max_subsets: int = 1 << 22) -> tuple[MinimalPrime, ...]:
    """All minimal primes of J_G, ordered by (|S|, lexicographic S).

    Exhaustive over the 2^d subsets; refuses graphs where that exceeds
    max_subsets.  Connectedness is required because the cut-set description
    of the minimal primes assumes it.
    """
    if not is_connected(g):
        raise InputError("minimal prime enumeration needs a connected graph")
    if (1 << g.d) > max_subsets:
        raise BudgetExceeded(f"2^{g.d} subsets exceed the budget of {max_subsets}")
    table = component_count_table(g)
    full = (1 << g.d) - 1
    cut_masks = [0]
    for mask in range(1, full):
        c = table[mask]
        ok = True
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            if table[mask ^ bit] >= c:
                ok = False
                break
        if ok:
            cut_masks.append(mask)
    subsets = sorted(
        (tuple(v + 1 for v in range(g.d) if mask >> v & 1) for mask in cut_masks),
        key=lambda s: (len(s), s),
    )
    primes = []
    for s in subsets:
        comps = components_after_removal(g, s)
        primes.append(MinimalPrime(g.d, s, comps, len(s) + g.d - len(comps)))
    return tuple(primes)


def classify(g: Graph, max_subsets: int = 1 << 22) -> Classification:
    """Count minimal primes and decide unmixedness, accessibility, and
    traceability.

    Unmixed: all minimal primes share the same height (equivalently height
    d - 1, the height of the prime at S = empty).  Accessible: unmixed and
    every nonempty cut set S has an s with S \\ {s} again a cut set.
    Traceable: a Hamiltonian path exists.
    """
    primes = enumerate_minimal_primes(g, max_subsets)
    heights = {p.height for p in primes}
    unmixed = len(heights) == 1
    accessible = unmixed
    if accessible:
        cut_masks = set()
        for p in primes:
            mask = 0
            for v in p.cut_set:
                mask |= 1 << (v - 1)
            cut_masks.add(mask)
        for mask in cut_masks:
            if mask == 0:
                continue
            m, hit = mask, False
            while m:
                bit = m & -m
                m ^= bit
                if mask ^ bit in cut_masks:
                    hit = True
                    break
            if not hit:
                accessible = False
                break
    traceable = hamiltonian_path(g) is not None
    return Classification(len(primes), unmixed, accessible, traceable)


def report_json(g: Graph, max_subsets: int = 1 << 22) -> str:
    """Cut-set report in the documented JSON shape."""
    primes = enumerate_minimal_primes(g, max_subsets)
    cls = classify(g, max_subsets)
    obj = {
        "cutSets": [
            {
                "S": list(p.cut_set),
                "components": [list(b) for b in p.components],
                "height": p.height,
            }
            for p in primes
        ],
        "assCount": cls.ass_count,
        "unmixed": cls.unmixed,
        "accessible": cls.accessible,
        "traceable": cls.traceable,
    }
    return json.dumps(obj, indent=2) + "\n"
