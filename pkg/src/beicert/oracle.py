"""Exact Groebner-basis oracle over small prime fields.

Desk-scale cross-validation for the combinatorial certificates: everything
here is exhaustive, deterministic, and budgeted, with no floating point and
no randomization.  Buchberger's algorithm with the normal selection
strategy (smallest lcm first), the coprime-lcm and chain criteria, and a
hard budget on processed S-pairs that raises instead of silently
truncating.

Two monomial orders are used: degrevlex on the working ring, and a block
elimination order for intersections, where an auxiliary variable t is
appended as the last exponent position but compared first (t greatest);
the t-free part of such a basis is then a degrevlex basis of the
eliminated ideal.
"""

from __future__ import annotations

import heapq
from itertools import combinations, combinations_with_replacement

from .errors import BudgetExceeded, InputError
from .graphs import Graph
from .primes import MinimalPrime
from .polyfp import (
    Minor,
    PrimeFieldPolynomial,
    Var,
    atom_polynomial,
    degrevlex_key,
    is_prime,
)

DEFAULT_PAIR_BUDGET = 200_000


def elimination_key(mono: tuple[int, ...]):
    """Block order key: the last position (the auxiliary variable) dominates,
    ties broken by degrevlex on the remaining positions."""
    rest = mono[:-1]
    return (mono[-1], sum(rest), tuple(-e for e in reversed(rest)))


_KEYS = {"degrevlex": degrevlex_key, "elim": elimination_key}


class OracleIdeal:
    """An ideal given by generators, with a lazily computed reduced basis."""

    __slots__ = ("p", "nvars", "order", "generators", "_basis")

    def __init__(self, p, nvars, generators, order="degrevlex"):
        if not is_prime(p):
            raise InputError(f"characteristic must be prime, got {p!r}")
        if order not in _KEYS:
            raise InputError(f"unknown monomial order {order!r}")
        gens = []
        for g in generators:
            if g.p != p or g.nvars != nvars:
                raise InputError("generator lives in a different ring")
            if not g.is_zero:
                gens.append(g)
        self.p = p
        self.nvars = nvars
        self.order = order
        self.generators = tuple(gens)
        self._basis = None

    def key_fn(self):
        return _KEYS[self.order]


def leading_term(f: PrimeFieldPolynomial, key) -> tuple[tuple[int, ...], int]:
    mono = max(f.terms, key=key)
    return mono, f.terms[mono]


def _monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_quot(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _make_monic(f: PrimeFieldPolynomial, key) -> PrimeFieldPolynomial:
    _, c = leading_term(f, key)
    return f.scale(pow(c, f.p - 2, f.p))


def normal_form_against(f: PrimeFieldPolynomial, basis, key) -> PrimeFieldPolynomial:
    """Fully reduce f: every term of the result is divisible by no basis
    leading monomial.  Deterministic given the basis order."""
    lead = [leading_term(g, key) for g in basis]
    remainder: dict[tuple[int, ...], int] = {}
    work = dict(f.terms)
    p = f.p
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        hit = None
        for idx, (lm, _) in enumerate(lead):
            if _monomial_divides(lm, mono):
                hit = idx
                break
        if hit is None:
            remainder[mono] = coeff
            continue
        g = basis[hit]
        lm, lc = lead[hit]
        scale = (coeff * pow(lc, p - 2, p)) % p
        shift = _monomial_quot(mono, lm)
        for m2, c2 in g.terms.items():
            if m2 == lm:
                continue
            key2 = tuple(a + b for a, b in zip(m2, shift))
            s = (work.get(key2, 0) - scale * c2) % p
            if s:
                work[key2] = s
            else:
                work.pop(key2, None)
    return PrimeFieldPolynomial._raw(p, f.nvars, remainder)


def _s_poly(f, g, key, p):
    lmf, lcf = leading_term(f, key)
    lmg, lcg = leading_term(g, key)
    lcm = _monomial_lcm(lmf, lmg)
    a = f.term_multiple(_monomial_quot(lcm, lmf), pow(lcf, p - 2, p))
    b = g.term_multiple(_monomial_quot(lcm, lmg), pow(lcg, p - 2, p))
    return a.subtract(b)


def _buchberger(gens, key, p, nvars, pair_budget):
    basis = []
    lead = []
    for g in gens:
        if not g.is_zero:
            gm = _make_monic(g, key)
            basis.append(gm)
            lead.append(leading_term(gm, key)[0])
    heap = []
    done = set()
    for i, j in combinations(range(len(basis)), 2):
        lcm = _monomial_lcm(lead[i], lead[j])
        heapq.heappush(heap, (key(lcm), i, j))
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        processed += 1
        if processed > pair_budget:
            raise BudgetExceeded(f"S-pair budget of {pair_budget} exhausted")
        lcm = _monomial_lcm(lead[i], lead[j])
        # coprime criterion: disjoint leading supports reduce to zero
        if lcm == tuple(a + b for a, b in zip(lead[i], lead[j])):
            continue
        # chain criterion: a third element dividing the lcm whose two pairs
        # are already handled makes this pair redundant
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not _monomial_divides(lead[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                chained = True
                break
        if chained:
            continue
        s = normal_form_against(_s_poly(basis[i], basis[j], key, p), basis, key)
        if s.is_zero:
            continue
        s = _make_monic(s, key)
        t = len(basis)
        basis.append(s)
        lead.append(leading_term(s, key)[0])
        for i2 in range(t):
            lcm2 = _monomial_lcm(lead[i2], lead[t])
            heapq.heappush(heap, (key(lcm2), i2, t))
    # minimal: drop elements whose leading monomial another one divides
    keep = []
    for i in range(len(basis)):
        lm = lead[i]
        redundant = any(
            k != i and _monomial_divides(lead[k], lm)
            and (lead[k] != lm or k < i)
            for k in range(len(basis))
        )
        if not redundant:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # reduced: tail-reduce each against the others
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(_make_monic(normal_form_against(g, others, key), key) if others else g)
    reduced.sort(key=lambda f: key(leading_term(f, key)[0]))
    return tuple(reduced)


_GB_CACHE: dict = {}


def _cache_key(ideal: OracleIdeal):
    gens = frozenset(tuple(sorted(g.terms.items())) for g in ideal.generators)
    return (ideal.p, ideal.nvars, ideal.order, gens)


def groebner_basis(ideal: OracleIdeal, pair_budget: int = DEFAULT_PAIR_BUDGET):
    """Reduced Groebner basis, cached by generator set."""
    if ideal._basis is not None:
        return ideal._basis
    ck = _cache_key(ideal)
    hit = _GB_CACHE.get(ck)
    if hit is None:
        hit = _buchberger(ideal.generators, ideal.key_fn(), ideal.p, ideal.nvars, pair_budget)
        _GB_CACHE[ck] = hit
    ideal._basis = hit
    return hit


def normal_form(f: PrimeFieldPolynomial, ideal: OracleIdeal,
                pair_budget: int = DEFAULT_PAIR_BUDGET) -> PrimeFieldPolynomial:
    if f.p != ideal.p or f.nvars != ideal.nvars:
        raise InputError("polynomial lives in a different ring")
    basis = groebner_basis(ideal, pair_budget)
    if not basis:
        return f
    return normal_form_against(f, basis, ideal.key_fn())


def member(f: PrimeFieldPolynomial, ideal: OracleIdeal,
           pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    return normal_form(f, ideal, pair_budget).is_zero


def ideals_equal(a: OracleIdeal, b: OracleIdeal, pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    return all(member(g, b, pair_budget) for g in a.generators) and all(
        member(g, a, pair_budget) for g in b.generators
    )


# ---------------------------------------------------------------------------
# ideal arithmetic

def ideal_power(ideal: OracleIdeal, n: int) -> OracleIdeal:
    """P^n via all n-fold products of generators (n = 0 gives the unit ideal)."""
    if n < 0:
        raise InputError("negative ideal power")
    if n == 0:
        one = PrimeFieldPolynomial.constant(ideal.p, ideal.nvars, 1)
        return OracleIdeal(ideal.p, ideal.nvars, [one], ideal.order)
    gens = []
    seen = set()
    for combo in combinations_with_replacement(ideal.generators, n):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod.multiply(g)
        sig = tuple(sorted(prod.terms.items()))
        if sig not in seen and not prod.is_zero:
            seen.add(sig)
            gens.append(prod)
    return OracleIdeal(ideal.p, ideal.nvars, gens, ideal.order)


def _with_aux(f: PrimeFieldPolynomial, t_exp: int, negate: bool) -> PrimeFieldPolynomial:
    terms = {}
    for m, c in f.terms.items():
        terms[m + (t_exp,)] = (f.p - c) if negate else c
    return PrimeFieldPolynomial._raw(f.p, f.nvars + 1, terms)


def intersect(a: OracleIdeal, b: OracleIdeal, pair_budget: int = DEFAULT_PAIR_BUDGET) -> OracleIdeal:
    """a ∩ b by eliminating t from t*a + (1-t)*b."""
    if a.p != b.p or a.nvars != b.nvars:
        raise InputError("ideals live in different rings")
    if not a.generators or not b.generators:
        return OracleIdeal(a.p, a.nvars, [], "degrevlex")
    aux_gens = [_with_aux(f, 1, negate=False) for f in a.generators]
    for g in b.generators:
        # (1 - t) * g = g - t*g
        plain = _with_aux(g, 0, negate=False)
        timest = _with_aux(g, 1, negate=True)
        aux_gens.append(plain.add(timest))
    aux = OracleIdeal(a.p, a.nvars + 1, aux_gens, "elim")
    eliminated = []
    for f in groebner_basis(aux, pair_budget):
        if all(m[-1] == 0 for m in f.terms):
            eliminated.append(
                PrimeFieldPolynomial._raw(a.p, a.nvars, {m[:-1]: c for m, c in f.terms.items()})
            )
    return OracleIdeal(a.p, a.nvars, eliminated, "degrevlex")


def exact_divide(f: PrimeFieldPolynomial, g: PrimeFieldPolynomial,
                 key=degrevlex_key) -> PrimeFieldPolynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if g.is_zero:
        raise InputError("division by the zero polynomial")
    if f.is_zero:
        return f
    p = f.p
    lmg, lcg = leading_term(g, key)
    inv = pow(lcg, p - 2, p)
    quotient: dict[tuple[int, ...], int] = {}
    rest = f
    while not rest.is_zero:
        lm, lc = leading_term(rest, key)
        if not _monomial_divides(lmg, lm):
            raise InputError("polynomial is not an exact multiple")
        qm = _monomial_quot(lm, lmg)
        qc = (lc * inv) % p
        quotient[qm] = qc
        rest = rest.subtract(g.term_multiple(qm, qc))
    return PrimeFieldPolynomial._raw(p, f.nvars, quotient)


def colon_by_poly(ideal: OracleIdeal, g: PrimeFieldPolynomial,
                  pair_budget: int = DEFAULT_PAIR_BUDGET) -> OracleIdeal:
    """(ideal : g) = (ideal ∩ (g)) / g."""
    if g.is_zero:
        raise InputError("colon by the zero polynomial")
    principal = OracleIdeal(ideal.p, ideal.nvars, [g], ideal.order)
    inter = intersect(ideal, principal, pair_budget)
    gens = [exact_divide(f, g) for f in inter.generators]
    return OracleIdeal(ideal.p, ideal.nvars, gens, "degrevlex")


def colon(ideal: OracleIdeal, other: OracleIdeal,
          pair_budget: int = DEFAULT_PAIR_BUDGET) -> OracleIdeal:
    """(ideal : other) = ∩ over other's generators of (ideal : g)."""
    if not other.generators:
        raise InputError("colon by the zero ideal")
    acc = None
    for g in other.generators:
        piece = colon_by_poly(ideal, g, pair_budget)
        acc = piece if acc is None else intersect(acc, piece, pair_budget)
    return acc


def frobenius_bracket(ideal: OracleIdeal) -> OracleIdeal:
    """I^[p]: p-th powers of the generators.  In characteristic p the p-th
    power map is additive, so raising each term's monomial works termwise."""
    p = ideal.p
    gens = []
    for g in ideal.generators:
        gens.append(
            PrimeFieldPolynomial._raw(
                p, g.nvars, {tuple(e * p for e in m): c for m, c in g.terms.items()}
            )
        )
    return OracleIdeal(p, ideal.nvars, gens, ideal.order)


def power_membership_order(f: PrimeFieldPolynomial, ideal: OracleIdeal, max_n: int = 6,
                           pair_budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """Largest n <= max_n with f in ideal^n (ordinary powers); 0 if f is
    not even in ideal^1."""
    if max_n < 1:
        raise InputError("max_n must be at least 1")
    for n in range(1, max_n + 1):
        if not member(f, ideal_power(ideal, n), pair_budget):
            return n - 1
    return max_n


# ---------------------------------------------------------------------------
# ideals from graphs and primes

def binomial_edge_ideal(g: Graph, p: int) -> OracleIdeal:
    gens = [atom_polynomial(Minor(u, v), g.d, p) for (u, v) in g.sorted_edges]
    return OracleIdeal(p, 2 * g.d, gens, "degrevlex")


def generic_minors_ideal(d: int, p: int) -> OracleIdeal:
    """I_2 of the generic 2 x d matrix (all minors; the S = empty prime)."""
    gens = [atom_polynomial(Minor(i, j), d, p) for i, j in combinations(range(1, d + 1), 2)]
    return OracleIdeal(p, 2 * d, gens, "degrevlex")


def minimal_prime_ideal(prime: MinimalPrime, p: int) -> OracleIdeal:
    """p_S: the cut-set variables plus all minors within each completed
    component of G \\ S."""
    d = prime.d
    gens = []
    for s in prime.cut_set:
        gens.append(atom_polynomial(Var("x", s), d, p))
        gens.append(atom_polynomial(Var("y", s), d, p))
    for block in prime.components:
        for i, j in combinations(block, 2):
            gens.append(atom_polynomial(Minor(i, j), d, p))
    return OracleIdeal(p, 2 * d, gens, "degrevlex")
