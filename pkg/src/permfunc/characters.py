"""Evaluable class functions on subgroups of the symmetric group.

Five variants: the trivial and sign characters, irreducible characters
of S_n indexed by partitions (evaluated with the Murnaghan-Nakayama
border-strip recursion), explicit lookup tables over an enumerated
subgroup, and the linear characters of a cyclic group sending the
generator to a root of unity.

Values stay in the exact field Q(i); cyclic-group characters whose root
of unity leaves that field are rejected in exact mode and exposed only
through ``evaluate_float``.
"""

from __future__ import annotations

import cmath
import functools
import json
import re as _re
from dataclasses import dataclass
from math import factorial, prod

from .errors import CharacterDomainError, ExactnessError, ParseError
from .gaussian import GaussianRational, I, ONE, gauss
from .groups import FiniteSubgroup
from .perm import CycleStructure, Permutation, cycle_structure, parse_permutation


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; indexes an irreducible character."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def partitions(n: int):
    """Yield all partitions of n as tuples, largest part first."""

    def rec(remaining: int, maximum: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(remaining, maximum), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def hook_length_degree(parts: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of the given shape."""
    n = sum(parts)
    hooks = []
    for i, row in enumerate(parts):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for below in parts[i + 1 :] if below > j)
            hooks.append(arm + leg + 1)
    return factorial(n) // prod(hooks)


def _beta_numbers(parts: tuple[int, ...]) -> tuple[int, ...]:
    length = len(parts)
    return tuple(parts[i] + (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    parts = tuple(ordered[i] - (length - 1 - i) for i in range(length))
    return tuple(p for p in parts if p > 0)


def _strip_removals(parts: tuple[int, ...], size: int):
    """Yield (smaller_partition, strip_height) for each removable border strip."""
    beta = _beta_numbers(parts)
    present = set(beta)
    for b in beta:
        target = b - size
        if target < 0 or target in present:
            continue
        height = sum(1 for other in beta if target < other < b)
        new_beta = tuple(target if x == b else x for x in beta)
        yield _partition_from_beta(new_beta), height


@functools.cache
def mn_value(parts: tuple[int, ...], cycle_type: tuple[int, ...]) -> int:
    """Irreducible character value for shape ``parts`` at ``cycle_type``.

    ``cycle_type`` lists all cycle lengths including fixed points as 1s.
    Border strips are removed for the largest cycle first; the recursion
    is memoized because dominance sweeps revisit the same pairs heavily.
    """
    if sum(parts) != sum(cycle_type):
        raise ValueError(
            f"partition of {sum(parts)} evaluated at class of {sum(cycle_type)}"
        )
    if not cycle_type:
        return 1
    ordered = tuple(sorted(cycle_type, reverse=True))
    largest, rest = ordered[0], ordered[1:]
    total = 0
    for smaller, height in _strip_removals(parts, largest):
        total += (-1) ** height * mn_value(smaller, rest)
    return total


class CharacterSpec:
    """Base class; subclasses provide exact evaluation on their group."""

    def evaluate(self, sigma: Permutation) -> GaussianRational:
        raise NotImplementedError

    def conjugate_evaluate(self, sigma: Permutation) -> GaussianRational:
        """Value at the inverse element (the conjugate character)."""
        return self.evaluate(sigma.inverse())

    def evaluate_float(self, sigma: Permutation) -> complex:
        v = self.evaluate(sigma)
        return complex(v.re, v.im)

    def degree(self):
        raise NotImplementedError

    def is_linear(self) -> bool:
        return self.degree() == 1


@functools.lru_cache(maxsize=4096)
def _gauss_int(value: int) -> GaussianRational:
    # character values recur constantly; share the scalar objects
    return gauss(value)


_MINUS_ONE = _gauss_int(-1)


@dataclass(frozen=True)
class TrivialCharacter(CharacterSpec):
    def evaluate(self, sigma: Permutation) -> GaussianRational:
        return ONE

    def degree(self) -> int:
        return 1

    def __str__(self):
        return "trivial"


@dataclass(frozen=True)
class SignCharacter(CharacterSpec):
    def evaluate(self, sigma: Permutation) -> GaussianRational:
        return ONE if sigma.sign() > 0 else _MINUS_ONE

    def degree(self) -> int:
        return 1

    def __str__(self):
        return "sign"


@dataclass(frozen=True)
class IrreducibleCharacter(CharacterSpec):
    """Irreducible character of S_n for the given shape, restrictable to
    any subgroup; values are integers computed by border-strip recursion."""

    partition: Partition

    def value(self, structure: CycleStructure) -> int:
        return mn_value(self.partition.parts, structure.full_type())

    def evaluate(self, sigma: Permutation) -> GaussianRational:
        if sigma.degree != self.partition.size:
            raise CharacterDomainError(
                f"degree {sigma.degree} element for a character of S_{self.partition.size}"
            )
        return _gauss_int(self.value(cycle_structure(sigma)))

    def degree(self) -> int:
        return hook_length_degree(self.partition.parts)

    def __str__(self):
        return f"irr:{self.partition}"


@dataclass(frozen=True)
class TableCharacter(CharacterSpec):
    """Explicit value table over an enumerated subgroup.

    Construction validates the class-function property and the bound
    |chi(sigma)| <= chi(id) unless ``validate`` is off (useful only for
    adversarial tests).
    """

    subgroup: FiniteSubgroup
    table: tuple[tuple[Permutation, GaussianRational], ...]
    validate: bool = True

    def __post_init__(self):
        mapping = dict(self.table)
        if set(mapping) != set(self.subgroup.elements):
            raise ValueError("table domain must equal the subgroup's element set")
        if self.validate:
            ident = Permutation.identity(self.subgroup.spec.degree)
            top = mapping[ident]
            if not top.is_real():
                raise ValueError("chi(id) must be real")
            for sigma, value in mapping.items():
                if value.abs_squared() > top.re * top.re:
                    raise ValueError(f"|chi({sigma})| exceeds chi(id)")
                for g in self.subgroup.elements:
                    conj = g * sigma * g.inverse()
                    if mapping[conj] != value:
                        raise ValueError("table is not a class function")

    def _lookup(self, sigma: Permutation) -> GaussianRational:
        for p, value in self.table:
            if p == sigma:
                return value
        raise CharacterDomainError(f"{sigma} not in the character's table")

    def evaluate(self, sigma: Permutation) -> GaussianRational:
        return self._lookup(sigma)

    def degree(self):
        v = self._lookup(Permutation.identity(self.subgroup.spec.degree))
        return v.re

    def __str__(self):
        return "table"


@dataclass(frozen=True)
class CyclicRootCharacter(CharacterSpec):
    """Linear character of <generator> mapping it to exp(2*pi*i*k/order).

    Exact values exist only when the generator's order divides 4 (roots
    1, -1, +-i); other orders raise in exact mode and are served by
    ``evaluate_float``.
    """

    generator: Permutation
    index: int = 1

    def _power_of(self, sigma: Permutation) -> int:
        current = Permutation.identity(self.generator.degree)
        for k in range(self.generator.order()):
            if current == sigma:
                return k
            current = current * self.generator
        raise CharacterDomainError(f"{sigma} is not a power of the generator")

    def evaluate(self, sigma: Permutation) -> GaussianRational:
        order = self.generator.order()
        k = self._power_of(sigma)
        e = (k * self.index) % order
        if order == 1:
            return ONE
        if order == 2:
            return gauss(1 - 2 * e)
        if order == 4:
            return I**e
        raise ExactnessError(
            f"root of unity of order {order} is not exactly representable; "
            "use evaluate_float"
        )

    def evaluate_float(self, sigma: Permutation) -> complex:
        order = self.generator.order()
        k = self._power_of(sigma)
        return cmath.exp(2j * cmath.pi * k * self.index / order)

    def degree(self) -> int:
        return 1

    def __str__(self):
        return f"cyclic-root:{self.generator}^{self.index}"


_IRR_RE = _re.compile(r"^irr:\[([\d,\s]*)\]$")


def parse_character(text: str, degree: int | None = None) -> CharacterSpec:
    """Parse "trivial", "sign", "irr:[3,1]" or "table:<path>"."""
    s = text.strip()
    if s == "trivial":
        return TrivialCharacter()
    if s == "sign":
        return SignCharacter()
    m = _IRR_RE.match(s)
    if m:
        try:
            parts = tuple(int(tok) for tok in m.group(1).split(",") if tok.strip())
            return IrreducibleCharacter(Partition(parts))
        except ValueError as exc:
            raise ParseError(f"bad partition in {text!r}") from exc
    if s.startswith("table:"):
        if degree is None:
            raise ParseError("table characters need an explicit degree")
        return _load_table_character(s[len("table:") :], degree)
    raise ParseError(f"unrecognized character spec: {text!r}")


def _load_table_character(path: str, degree: int) -> TableCharacter:
    """Load a JSON map from cycle notation to {"re": "p/q", "im": "p/q"}."""
    from .groups import GeneratedSubgroup, enumerate_group

    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read character table {path!r}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("character table must be a JSON object")
    entries = {}
    for key, value in raw.items():
        entries[parse_permutation(key, degree)] = GaussianRational.from_json(value)
    subgroup = enumerate_group(GeneratedSubgroup(degree, tuple(entries)))
    if set(subgroup.elements) != set(entries):
        raise ParseError("character table domain is not closed under the group laws")
    try:
        return TableCharacter(subgroup, tuple(entries.items()))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
