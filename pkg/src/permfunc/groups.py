"""Symbolic subgroups of the symmetric group on [n].

Membership tests never force an enumeration when the variant admits a
direct predicate; generated subgroups memoize their closure the first
time it is needed.  Enumeration is capped (10! by default) so that the
naive generalized-matrix-function oracle stays desk-scale.
"""

from __future__ import annotations

import functools
import itertools
import re as _re
import threading
from dataclasses import dataclass
from math import factorial

from .errors import CapacityError, DegreeMismatchError, ParseError
from .perm import Permutation, compose, parse_permutation

DEFAULT_ENUMERATION_CAP = factorial(10)


@dataclass(frozen=True)
class GroupSpec:
    """Base class; concrete variants implement the predicate and generator."""

    @property
    def degree(self) -> int:
        raise NotImplementedError

    def contains(self, sigma: Permutation) -> bool:
        if sigma.degree != self.degree:
            raise DegreeMismatchError(
                f"group degree {self.degree}, permutation degree {sigma.degree}"
            )
        return self._contains(sigma)

    def _contains(self, sigma: Permutation) -> bool:
        raise NotImplementedError

    def order(self) -> int:
        raise NotImplementedError

    def _generate(self):
        raise NotImplementedError


@dataclass(frozen=True)
class SymmetricGroup(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be positive")

    @property
    def degree(self) -> int:
        return self.n

    def _contains(self, sigma: Permutation) -> bool:
        return True

    def order(self) -> int:
        return factorial(self.n)

    def _generate(self):
        for images in itertools.permutations(range(1, self.n + 1)):
            yield Permutation(images)

    def __str__(self):
        return f"S{self.n}"


@dataclass(frozen=True)
class AlternatingGroup(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be positive")

    @property
    def degree(self) -> int:
        return self.n

    def _contains(self, sigma: Permutation) -> bool:
        return sigma.sign() == 1

    def order(self) -> int:
        return max(1, factorial(self.n) // 2)

    def _generate(self):
        for images in itertools.permutations(range(1, self.n + 1)):
            p = Permutation(images)
            if p.sign() == 1:
                yield p

    def __str__(self):
        return f"A{self.n}"


@functools.lru_cache(maxsize=None)
def _cyclic_powers(generator: Permutation) -> frozenset[Permutation]:
    powers = [Permutation.identity(generator.degree)]
    current = generator
    while not current.is_identity():
        powers.append(current)
        current = compose(current, generator)
    return frozenset(powers)


@dataclass(frozen=True)
class CyclicGroup(GroupSpec):
    generator: Permutation

    @property
    def degree(self) -> int:
        return self.generator.degree

    def _powers(self) -> frozenset[Permutation]:
        return _cyclic_powers(self.generator)

    def _contains(self, sigma: Permutation) -> bool:
        return sigma in self._powers()

    def order(self) -> int:
        return self.generator.order()

    def _generate(self):
        return iter(self._powers())

    def __str__(self):
        return f"cyclic:{self.generator}"


@dataclass(frozen=True)
class PointwiseStabilizer(GroupSpec):
    """All permutations fixing every point of a given set."""

    n: int
    points: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be positive")
        if not all(1 <= p <= self.n for p in self.points):
            raise ValueError(f"stabilized points must lie in [1..{self.n}]")

    @property
    def degree(self) -> int:
        return self.n

    def _contains(self, sigma: Permutation) -> bool:
        return self.points <= sigma.fixed_points()

    def order(self) -> int:
        return factorial(self.n - len(self.points))

    def _generate(self):
        free = sorted(set(range(1, self.n + 1)) - self.points)
        for arrangement in itertools.permutations(free):
            images = list(range(1, self.n + 1))
            for src, dst in zip(free, arrangement):
                images[src - 1] = dst
            yield Permutation(tuple(images))

    def __str__(self):
        return f"stab:{','.join(map(str, sorted(self.points)))}@{self.n}"


@dataclass(frozen=True)
class GeneratedSubgroup(GroupSpec):
    """Closure of a list of generators; memoized on first membership query."""

    n: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be positive")
        for g in self.generators:
            if g.degree != self.n:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} != group degree {self.n}"
                )

    @property
    def degree(self) -> int:
        return self.n

    def _closure(self, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Permutation]:
        with _CLOSURE_LOCK:
            cached = _CLOSURE_CACHE.get(self)
            if cached is None:
                elements = {Permutation.identity(self.n)}
                frontier = list(elements)
                while frontier:
                    nxt = []
                    for g in self.generators:
                        for h in frontier:
                            prod = compose(g, h)
                            if prod not in elements:
                                elements.add(prod)
                                nxt.append(prod)
                                if len(elements) > cap:
                                    raise CapacityError(
                                        f"closure exceeds cap {cap}"
                                    )
                    frontier = nxt
                cached = frozenset(elements)
                _CLOSURE_CACHE[self] = cached
            return cached

    def _contains(self, sigma: Permutation) -> bool:
        return sigma in self._closure()

    def order(self) -> int:
        return len(self._closure())

    def _generate(self):
        return iter(self._closure())

    def __str__(self):
        gens = ",".join(str(g) for g in self.generators)
        return f"gens:{gens}@{self.n}"


_CLOSURE_LOCK = threading.Lock()
_CLOSURE_CACHE: dict[GeneratedSubgroup, frozenset[Permutation]] = {}


@dataclass(frozen=True)
class FiniteSubgroup:
    """Fully enumerated subgroup in deterministic (image-lexicographic) order."""

    spec: GroupSpec
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def zero_based(self) -> tuple[tuple[int, ...], ...]:
        """Elements as 0-based image tuples (the kernels' working form)."""
        try:
            return self._zero_based  # type: ignore[attr-defined]
        except AttributeError:
            converted = tuple(
                tuple(v - 1 for v in p.images) for p in self.elements
            )
            object.__setattr__(self, "_zero_based", converted)
            return converted


def enumerate_group(
    spec: GroupSpec, cap: int = DEFAULT_ENUMERATION_CAP
) -> FiniteSubgroup:
    """List all elements of the subgroup, sorted by image sequence.

    Raises CapacityError when the group order exceeds ``cap``; the check
    runs before any enumeration for variants with a known order formula.
    Results are memoized (they are immutable and reused heavily by the
    naive summation route).
    """
    return _enumerate_group_cached(spec, cap)


@functools.lru_cache(maxsize=64)
def _enumerate_group_cached(spec: GroupSpec, cap: int) -> FiniteSubgroup:
    if isinstance(spec, GeneratedSubgroup):
        elements = spec._closure(cap)
    else:
        if spec.order() > cap:
            raise CapacityError(f"group order {spec.order()} exceeds cap {cap}")
        elements = spec._generate()
    ordered = tuple(sorted(elements, key=lambda p: p.images))
    if len(ordered) > cap:
        raise CapacityError(f"group order {len(ordered)} exceeds cap {cap}")
    return FiniteSubgroup(spec, ordered)


_SYM_RE = _re.compile(r"^([SA])(\d+)$")


def parse_group(text: str, default_degree: int | None = None) -> GroupSpec:
    """Parse "S6", "A6", "cyclic:(1 2 3 4)", "stab:1,3,5@6", "gens:(1 2),(1 2 3)@3".

    An "@n" suffix fixes the degree; otherwise ``default_degree`` is used
    for the variants that need one.
    """
    s = text.strip()
    m = _SYM_RE.match(s)
    if m:
        n = int(m.group(2))
        return SymmetricGroup(n) if m.group(1) == "S" else AlternatingGroup(n)
    body = s
    degree = default_degree
    if "@" in s:
        body, _, suffix = s.rpartition("@")
        try:
            degree = int(suffix)
        except ValueError as exc:
            raise ParseError(f"bad degree suffix in {text!r}") from exc
    if degree is None:
        raise ParseError(f"group {text!r} needs an @n suffix or an explicit degree")
    if body.startswith("cyclic:"):
        return CyclicGroup(parse_permutation(body[len("cyclic:") :], degree))
    if body.startswith("stab:"):
        items = body[len("stab:") :].split(",")
        try:
            points = frozenset(int(tok) for tok in items if tok.strip())
        except ValueError as exc:
            raise ParseError(f"bad stabilizer points in {text!r}") from exc
        try:
            return PointwiseStabilizer(degree, points)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    if body.startswith("gens:"):
        gens = tuple(
            parse_permutation(tok, degree)
            for tok in body[len("gens:") :].split(",")
            if tok.strip()
        )
        if not gens:
            raise ParseError(f"no generators in {text!r}")
        return GeneratedSubgroup(degree, gens)
    raise ParseError(f"unrecognized group spec: {text!r}")
