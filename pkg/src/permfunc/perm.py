"""Exact permutation algebra on the point set {1, ..., n}.

Permutations are immutable; interfaces are 1-based to match the usual
cycle notation "(1 5 3)(2 6)".  The module also builds, for a pair
(theta, tau), the set of all permutations that agree pointwise with one
of the two; that set has exactly 2^r elements, one per subset of the
disjoint cycles of theta^-1 * tau, and indexes the fast evaluation of
generalized matrix functions.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from math import lcm

from .errors import DegreeMismatchError, DisjointnessError, ParseError

# Subsets of the cycle list are enumerated through a bitmask.
MAX_CYCLES = 62


@dataclass(frozen=True)
class Permutation:
    """A bijection on [n]; images[i-1] = sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [1..{n}]: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise ValueError("degree must be positive")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from disjoint cycles given as sequences of 1-based points."""
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for p in cycle:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} outside [1..{n}]")
                if p in seen:
                    raise ValueError(f"point {p} repeated across cycles")
                seen.add(p)
            for i, p in enumerate(cycle):
                images[p - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside [1..{self.degree}]")
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def is_involution(self) -> bool:
        return all(self.images[v - 1] == i + 1 for i, v in enumerate(self.images))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i + 1 for i, v in enumerate(self.images) if v == i + 1)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, v in enumerate(self.images) if v != i + 1)

    def sign(self) -> int:
        # parity of n minus the cycle count, without building the decomposition
        images = self.images
        n = len(images)
        seen = bytearray(n)
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            point = start
            while not seen[point]:
                seen[point] = 1
                point = images[point] - 1
        return -1 if (n - cycles) % 2 else 1

    def order(self) -> int:
        dec = disjoint_cycles(self)
        return lcm(1, *(len(c) for c in dec.cycles))

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint cycles (length >= 2) plus the fixed points.

    Each cycle starts at its minimal point; cycles are sorted by that
    minimum, so the decomposition is a canonical form.
    """

    degree: int
    cycles: tuple[tuple[int, ...], ...]
    fixed_points: frozenset[int]

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.degree, self.cycles)


@dataclass(frozen=True)
class CycleStructure:
    """Multiset of nontrivial cycle lengths plus the fixed-point count."""

    lengths: tuple[int, ...]  # sorted descending, each >= 2
    fixed_count: int

    @property
    def degree(self) -> int:
        return sum(self.lengths) + self.fixed_count

    def full_type(self) -> tuple[int, ...]:
        """All cycle lengths including fixed points as 1s, sorted descending."""
        return self.lengths + (1,) * self.fixed_count


@dataclass(frozen=True)
class XSetElement:
    """One permutation agreeing pointwise with theta or tau everywhere.

    ``chosen`` is the 1-based subset of canonical cycles of theta^-1*tau
    multiplied onto theta, and ``t_sigma`` the number of points where the
    element follows tau rather than theta (outside the overlap).
    """

    sigma: Permutation
    chosen: frozenset[int]
    t_sigma: int


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p*q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degrees differ: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[v - 1] for v in q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def disjoint_cycles(p: Permutation) -> CycleDecomposition:
    """Canonical disjoint-cycle decomposition of p."""
    n = p.degree
    seen = [False] * (n + 1)
    cycles = []
    fixed = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point)
            point = p.images[point - 1]
        if len(cycle) == 1:
            fixed.append(start)
        else:
            cycles.append(tuple(cycle))
    return CycleDecomposition(n, tuple(cycles), frozenset(fixed))


def cycle_structure(p: Permutation) -> CycleStructure:
    dec = disjoint_cycles(p)
    lengths = tuple(sorted((len(c) for c in dec.cycles), reverse=True))
    return CycleStructure(lengths, len(dec.fixed_points))


def x_set(theta: Permutation, tau: Permutation) -> list[XSetElement]:
    """All permutations sigma with sigma(i) in {theta(i), tau(i)} for every i.

    They are exactly theta times a product of any subset of the disjoint
    cycles of theta^-1*tau; subsets are enumerated by increasing bitmask
    over the canonically ordered cycle list, so element 0 is theta and the
    last element is tau.
    """
    if theta.degree != tau.degree:
        raise DegreeMismatchError(f"degrees differ: {theta.degree} vs {tau.degree}")
    dec = disjoint_cycles(compose(theta.inverse(), tau))
    r = len(dec.cycles)
    if r > MAX_CYCLES:
        raise ValueError(f"too many cycles for subset enumeration: {r} > {MAX_CYCLES}")
    n = theta.degree
    out = []
    for mask in range(1 << r):
        images = list(theta.images)
        chosen = []
        t = 0
        for i in range(r):
            if mask >> i & 1:
                chosen.append(i + 1)
                cycle = dec.cycles[i]
                t += len(cycle)
                for k, point in enumerate(cycle):
                    # sigma = theta * cycle: point -> theta(cycle(point))
                    images[point - 1] = theta.images[cycle[(k + 1) % len(cycle)] - 1]
        out.append(XSetElement(Permutation(tuple(images)), frozenset(chosen), t))
    return out


def shift_embed(f: Permutation, x: int, y: int) -> dict[int, int]:
    """Partial map sending x+i to y+f(i) for i in [1..degree]."""
    if x < 0 or y < 0:
        raise ValueError("offsets must be nonnegative")
    return {x + i: y + f(i) for i in range(1, f.degree + 1)}


def disjoint_union(maps) -> Permutation:
    """Combine partial maps with disjoint domains into one permutation.

    Domains and codomains must each tile [1..N] exactly.
    """
    combined: dict[int, int] = {}
    for m in maps:
        for src, dst in m.items():
            if src in combined:
                raise DisjointnessError(f"domain point {src} covered twice")
            combined[src] = dst
    if not combined:
        raise ValueError("no maps given")
    n = len(combined)
    if set(combined) != set(range(1, n + 1)):
        raise DisjointnessError("domains do not tile [1..n]")
    if set(combined.values()) != set(range(1, n + 1)):
        raise DisjointnessError("codomains do not tile [1..n]")
    return Permutation(tuple(combined[i] for i in range(1, n + 1)))


_CYCLE_RE = _re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation like "(1 5 3)(2 6)"; "id" is the identity."""
    s = text.strip()
    if degree < 1:
        raise ParseError("degree must be positive")
    if s in ("id", "()", ""):
        return Permutation.identity(degree)
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if s[pos : m.start()].strip():
            raise ParseError(f"bad permutation text: {text!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            cycle = [int(tok) for tok in body]
        except ValueError as exc:
            raise ParseError(f"bad cycle in {text!r}") from exc
        if len(cycle) < 1:
            raise ParseError(f"empty cycle in {text!r}")
        cycles.append(cycle)
        pos = m.end()
    if pos != len(s) or s[pos:].strip():
        raise ParseError(f"bad permutation text: {text!r}")
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_permutation(p: Permutation) -> str:
    dec = disjoint_cycles(p)
    if not dec.cycles:
        return "id"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in dec.cycles)
