"""Sparse polynomials over a prime field, plus factored witnesses.

The ambient ring for a graph on d vertices is F_p[x_1..x_d, y_1..y_d] with
variables ordered x_1, ..., x_d, y_1, ..., y_d.  Monomials are exponent
tuples, polynomials are dicts mapping monomial to a nonzero coefficient in
{1, ..., p-1}.

Witnesses are kept in factored form as long as possible: a product of
variables and 2x2 minors f_{i,j} = x_i y_j - x_j y_i.  Only the Frobenius
membership test expands them, and it does so with exponent capping: when
deciding whether f^(p-1) lies in the Frobenius power m^[p] of the maximal
ideal, every monomial with some exponent >= p is in m^[p] and can be pruned
the moment it appears, because exponents only grow under multiplication.
The capped product is therefore the uncapped product with exactly the
doomed monomials removed, and f^(p-1) lies outside m^[p] iff the capped
expansion is nonzero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import BudgetExceeded, InputError


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


# ---------------------------------------------------------------------------
# witness atoms

@dataclass(frozen=True)
class Var:
    """A single variable x_i or y_i; axis is "x" or "y"."""

    axis: str
    index: int

    def __post_init__(self):
        if self.axis not in ("x", "y"):
            raise InputError(f"variable axis must be 'x' or 'y', got {self.axis!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise InputError(f"variable index must be a positive integer, got {self.index!r}")


@dataclass(frozen=True)
class Minor:
    """The 2x2 minor f_{i,j} = x_i y_j - x_j y_i, with i < j."""

    i: int
    j: int

    def __post_init__(self):
        ok = isinstance(self.i, int) and isinstance(self.j, int) and 1 <= self.i < self.j
        if not ok:
            raise InputError(f"minor needs integer indices 1 <= i < j, got ({self.i!r}, {self.j!r})")


Atom = Union[Var, Minor]


def atom_to_string(atom: Atom) -> str:
    if isinstance(atom, Var):
        return f"{atom.axis}{atom.index}"
    return f"m({atom.i},{atom.j})"


_VAR_RE = re.compile(r"^([xy])([1-9][0-9]*)$")
_MINOR_RE = re.compile(r"^m\(([1-9][0-9]*),([1-9][0-9]*)\)$")


def atom_from_string(text: str) -> Atom:
    s = text.strip()
    m = _VAR_RE.match(s)
    if m:
        return Var(m.group(1), int(m.group(2)))
    m = _MINOR_RE.match(s)
    if m:
        return Minor(int(m.group(1)), int(m.group(2)))
    raise InputError(f"cannot parse atom {text!r} (expected e.g. 'y1', 'x3', 'm(1,2)')")


@dataclass(frozen=True)
class FactoredWitness:
    """A product of atoms in F_p[x_1..x_d, y_1..y_d], unexpanded."""

    d: int
    factors: tuple[Atom, ...]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InputError(f"witness needs d >= 1, got {self.d!r}")
        for a in self.factors:
            top = a.index if isinstance(a, Var) else a.j
            if top > self.d:
                raise InputError(f"atom {atom_to_string(a)} leaves the ring for d={self.d}")

    def atom_strings(self) -> tuple[str, ...]:
        return tuple(atom_to_string(a) for a in self.factors)

    def drop_at(self, position: int) -> "FactoredWitness":
        """Witness without the factor at the given 0-based position."""
        if not 0 <= position < len(self.factors):
            raise InputError(f"no factor at position {position}")
        return FactoredWitness(self.d, self.factors[:position] + self.factors[position + 1:])


# ---------------------------------------------------------------------------
# polynomials

class PrimeFieldPolynomial:
    """Immutable-by-convention sparse polynomial over F_p in nvars variables."""

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if not is_prime(p):
            raise InputError(f"characteristic must be prime, got {p!r}")
        if not isinstance(nvars, int) or nvars < 1:
            raise InputError(f"need at least one variable, got {nvars!r}")
        self.p = p
        self.nvars = nvars
        norm: dict[tuple[int, ...], int] = {}
        for mono, c in (terms or {}).items():
            key = tuple(mono)
            if len(key) != nvars or any(not isinstance(e, int) or e < 0 for e in key):
                raise InputError(f"bad monomial {mono!r} for {nvars} variables")
            cc = c % p
            if cc:
                norm[key] = cc
        self.terms = norm

    @classmethod
    def _raw(cls, p: int, nvars: int, terms: dict[tuple[int, ...], int]) -> "PrimeFieldPolynomial":
        out = object.__new__(cls)
        out.p = p
        out.nvars = nvars
        out.terms = terms
        return out

    @classmethod
    def zero(cls, p: int, nvars: int) -> "PrimeFieldPolynomial":
        return cls(p, nvars, {})

    @classmethod
    def constant(cls, p: int, nvars: int, c: int) -> "PrimeFieldPolynomial":
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, p: int, nvars: int, position: int) -> "PrimeFieldPolynomial":
        mono = [0] * nvars
        mono[position] = 1
        return cls(p, nvars, {tuple(mono): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: tuple[int, ...]) -> int:
        return self.terms.get(tuple(mono), 0)

    def _check_mate(self, other: "PrimeFieldPolynomial") -> None:
        if self.p != other.p or self.nvars != other.nvars:
            raise InputError("polynomials live in different rings")

    def add(self, other: "PrimeFieldPolynomial") -> "PrimeFieldPolynomial":
        self._check_mate(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % self.p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return PrimeFieldPolynomial._raw(self.p, self.nvars, out)

    def negate(self) -> "PrimeFieldPolynomial":
        return PrimeFieldPolynomial._raw(
            self.p, self.nvars, {m: self.p - c for m, c in self.terms.items()}
        )

    def subtract(self, other: "PrimeFieldPolynomial") -> "PrimeFieldPolynomial":
        return self.add(other.negate())

    def scale(self, c: int) -> "PrimeFieldPolynomial":
        cc = c % self.p
        if cc == 0:
            return PrimeFieldPolynomial.zero(self.p, self.nvars)
        return PrimeFieldPolynomial._raw(
            self.p, self.nvars, {m: (cc * v) % self.p for m, v in self.terms.items()}
        )

    def term_multiple(self, mono: tuple[int, ...], c: int) -> "PrimeFieldPolynomial":
        """self * c*x^mono, no capping."""
        cc = c % self.p
        if cc == 0:
            return PrimeFieldPolynomial.zero(self.p, self.nvars)
        out = {}
        for m, v in self.terms.items():
            key = tuple(a + b for a, b in zip(m, mono))
            out[key] = (v * cc) % self.p
        return PrimeFieldPolynomial._raw(self.p, self.nvars, out)

    def multiply(self, other: "PrimeFieldPolynomial", cap: int | None = None) -> "PrimeFieldPolynomial":
        """Product, optionally pruning monomials with any exponent > cap."""
        self._check_mate(other)
        p = self.p
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                if cap is not None and any(e > cap for e in key):
                    continue
                s = (out.get(key, 0) + c1 * c2) % p
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return PrimeFieldPolynomial._raw(p, self.nvars, out)

    def power(self, e: int, cap: int | None = None) -> "PrimeFieldPolynomial":
        if e < 0:
            raise InputError("negative power")
        acc = PrimeFieldPolynomial.constant(self.p, self.nvars, 1)
        for _ in range(e):
            acc = acc.multiply(self, cap)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeFieldPolynomial):
            return NotImplemented
        return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"PrimeFieldPolynomial(p={self.p}, {format_polynomial(self)})"


# ---------------------------------------------------------------------------
# degrevlex order and printing

def degrevlex_key(mono: tuple[int, ...]):
    """Sort key: bigger key = bigger monomial in degree reverse lexicographic
    order (ties by total degree broken at the last differing exponent, where
    the smaller exponent wins)."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def xy_names(d: int) -> list[str]:
    return [f"x{i}" for i in range(1, d + 1)] + [f"y{i}" for i in range(1, d + 1)]


def format_polynomial(poly: PrimeFieldPolynomial, names: list[str] | None = None) -> str:
    """Deterministic rendering, terms in descending degrevlex order."""
    if poly.is_zero:
        return "0"
    if names is None:
        if poly.nvars % 2 == 0:
            names = xy_names(poly.nvars // 2)
        else:
            names = [f"v{i}" for i in range(1, poly.nvars + 1)]
    if len(names) != poly.nvars:
        raise InputError("wrong number of variable names")
    chunks = []
    for mono in sorted(poly.terms, key=degrevlex_key, reverse=True):
        c = poly.terms[mono]
        facs = []
        for name, e in zip(names, mono):
            if e == 1:
                facs.append(name)
            elif e > 1:
                facs.append(f"{name}^{e}")
        if not facs:
            chunks.append(str(c))
        elif c == 1:
            chunks.append("*".join(facs))
        else:
            chunks.append(f"{c}*" + "*".join(facs))
    return " + ".join(chunks)


# ---------------------------------------------------------------------------
# expanding witnesses

def atom_polynomial(atom: Atom, d: int, p: int) -> PrimeFieldPolynomial:
    """The atom as a polynomial in F_p[x_1..x_d, y_1..y_d]."""
    n = 2 * d
    if isinstance(atom, Var):
        if atom.index > d:
            raise InputError(f"atom {atom_to_string(atom)} leaves the ring for d={d}")
        pos = atom.index - 1 if atom.axis == "x" else d + atom.index - 1
        return PrimeFieldPolynomial.variable(p, n, pos)
    if atom.j > d:
        raise InputError(f"atom {atom_to_string(atom)} leaves the ring for d={d}")
    lead = [0] * n
    lead[atom.i - 1] = 1
    lead[d + atom.j - 1] = 1
    trail = [0] * n
    trail[atom.j - 1] = 1
    trail[d + atom.i - 1] = 1
    return PrimeFieldPolynomial(p, n, {tuple(lead): 1, tuple(trail): -1})


def expand(witness: FactoredWitness, p: int, cap: int | None = None, repeat: int = 1) -> PrimeFieldPolynomial:
    """Multiply out witness^repeat over F_p, pruning monomials with any
    exponent above cap as they appear (see the module docstring for why
    that is sound for Frobenius membership)."""
    if repeat < 1:
        raise InputError("repeat must be at least 1")
    acc = PrimeFieldPolynomial.constant(p, 2 * witness.d, 1)
    for _ in range(repeat):
        for atom in witness.factors:
            acc = acc.multiply(atom_polynomial(atom, witness.d, p), cap)
            if acc.is_zero:
                return acc
    return acc


def witness_power_outside_frobenius(
    witness: FactoredWitness,
    p: int,
    guard: int = 64,
    override: bool = False,
) -> bool:
    """Whether witness^(p-1) avoids m^[p] = (x_1^p, ..., y_d^p).

    A polynomial lies outside m^[p] iff some monomial with all exponents
    <= p-1 survives, so the capped expansion decides this exactly.  The
    work grows quickly with d*(p-1); the guard refuses oversized inputs
    unless override is set.
    """
    if not is_prime(p):
        raise InputError(f"characteristic must be prime, got {p!r}")
    if witness.d * (p - 1) > guard and not override:
        raise BudgetExceeded(
            f"d*(p-1) = {witness.d * (p - 1)} exceeds the guard {guard}; pass override to force"
        )
    capped = expand(witness, p, cap=p - 1, repeat=p - 1)
    return not capped.is_zero
