"""Character values: border-strip recursion against independent oracles."""

import math
import random
from fractions import Fraction

import pytest

from permfunc.characters import (
    CyclicRootCharacter,
    IrreducibleCharacter,
    Partition,
    SignCharacter,
    TableCharacter,
    TrivialCharacter,
    hook_length_degree,
    mn_value,
    parse_character,
    partitions,
)
from permfunc.errors import CharacterDomainError, ExactnessError, ParseError
from permfunc.gaussian import I, ONE, gauss
from permfunc.groups import CyclicGroup, enumerate_group
from permfunc.perm import Permutation, cycle_structure, parse_permutation
from support import frobenius_character, rand_perm


def P(text, n):
    return parse_permutation(text, n)


def full_types(n):
    """All class labels of S_n (cycle types, fixed points as 1s)."""
    return [tuple(sorted(lam, reverse=True)) for lam in partitions(n)]


def test_trivial_and_sign_basics():
    assert TrivialCharacter().evaluate(P("(1 5 3)(2 6)", 6)) == ONE
    assert SignCharacter().evaluate(P("(1 5 3)(2 6)", 6)) == gauss(-1)
    assert SignCharacter().evaluate(P("(1 2 3)", 3)) == ONE
    assert TrivialCharacter().degree() == 1
    assert SignCharacter().degree() == 1


def test_two_one_character_values():
    chi = IrreducibleCharacter(Partition((2, 1)))
    values = {
        "id": chi.evaluate(Permutation.identity(3)),
        "swap": chi.evaluate(P("(1 2)", 3)),
        "rot": chi.evaluate(P("(1 2 3)", 3)),
    }
    assert values == {"id": gauss(2), "swap": gauss(0), "rot": gauss(-1)}
    # column orthogonality of the S_3 table: columns (1,1,2), (1,-1,0), (1,1,-1)
    assert 1 * 1 + (-1) * 1 + 0 * 2 == 0
    assert chi.degree() == 2 == hook_length_degree((2, 1))


def test_mn_trivial_and_sign_rows():
    for n in range(1, 6):
        for mu in full_types(n):
            assert mn_value((n,), mu) == 1
            parity = (-1) ** sum(l - 1 for l in mu)
            assert mn_value(tuple([1] * n), mu) == parity


def test_mn_two_two_frozen():
    # frozen from the polynomial-coefficient oracle
    assert frobenius_character((2, 2), (2, 2)) == 2
    assert mn_value((2, 2), (2, 2)) == 2


def test_mn_against_polynomial_oracle():
    for n in range(1, 6):
        for lam in partitions(n):
            for mu in full_types(n):
                assert mn_value(lam, mu) == frobenius_character(lam, mu)


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_value((2, 1), (2, 2))


def test_first_orthogonality():
    for n in range(2, 6):
        classes = {}
        for images in __import__("itertools").permutations(range(1, n + 1)):
            sigma = Permutation(images)
            classes.setdefault(cycle_structure(sigma).full_type(), []).append(sigma)
        lams = list(partitions(n))
        for lam in lams:
            for mu in lams:
                total = sum(
                    len(members) * mn_value(lam, t) * mn_value(mu, t)
                    for t, members in classes.items()
                )
                assert total == (math.factorial(n) if lam == mu else 0)


def test_degree_square_sum():
    for n in range(1, 7):
        assert sum(hook_length_degree(lam) ** 2 for lam in partitions(n)) == math.factorial(n)


def test_bounded_by_degree_and_class_function():
    rng = random.Random(99)
    for n in range(2, 6):
        for lam in partitions(n):
            chi = IrreducibleCharacter(Partition(lam))
            top = chi.degree()
            for _ in range(10):
                sigma = rand_perm(rng, n)
                value = chi.evaluate(sigma)
                assert value.abs_squared() <= Fraction(top * top)
                g = rand_perm(rng, n)
                conjugated = g * sigma * g.inverse()
                assert chi.evaluate(conjugated) == value


def test_conjugate_evaluate():
    rng = random.Random(7)
    sigma = rand_perm(rng, 6)
    assert SignCharacter().conjugate_evaluate(sigma) == SignCharacter().evaluate(sigma)
    chi = IrreducibleCharacter(Partition((3, 2, 1)))
    assert chi.conjugate_evaluate(sigma) == chi.evaluate(sigma)  # integer values


class TestCyclicRoot:
    def test_order_four_exact(self):
        g = P("(1 2 3 4)", 4)
        chi = CyclicRootCharacter(g, 1)
        assert chi.evaluate(Permutation.identity(4)) == ONE
        assert chi.evaluate(g) == I
        assert chi.evaluate(g * g) == gauss(-1)
        assert chi.conjugate_evaluate(g) == chi.evaluate(g).conjugate()

    def test_order_two_exact(self):
        g = P("(1 2)", 2)
        chi = CyclicRootCharacter(g, 1)
        assert chi.evaluate(g) == gauss(-1)

    def test_order_three_rejected_exactly_but_floats(self):
        g = P("(1 2 3)", 3)
        chi = CyclicRootCharacter(g, 1)
        with pytest.raises(ExactnessError):
            chi.evaluate(g)
        value = chi.evaluate_float(g)
        assert abs(value - complex(-0.5, math.sqrt(3) / 2)) < 1e-12

    def test_outside_group(self):
        chi = CyclicRootCharacter(P("(1 2)", 3), 1)
        with pytest.raises(CharacterDomainError):
            chi.evaluate(P("(1 3)", 3))

    def test_is_homomorphism_order_four(self):
        g = P("(1 2 3 4)", 4)
        chi = CyclicRootCharacter(g, 3)
        powers = [Permutation.identity(4), g, g * g, g * g * g]
        for x in powers:
            for y in powers:
                assert chi.evaluate(x * y) == chi.evaluate(x) * chi.evaluate(y)


class TestTable:
    def _cyclic4_table(self):
        g = P("(1 2 3 4)", 4)
        sub = enumerate_group(CyclicGroup(g))
        chi = CyclicRootCharacter(g, 1)
        return sub, tuple((sigma, chi.evaluate(sigma)) for sigma in sub.elements)

    def test_valid_table(self):
        sub, entries = self._cyclic4_table()
        chi = TableCharacter(sub, entries)
        g = P("(1 2 3 4)", 4)
        assert chi.evaluate(g) == I
        assert chi.conjugate_evaluate(g) == I.conjugate()
        assert chi.degree() == 1

    def test_table_miss(self):
        sub, entries = self._cyclic4_table()
        chi = TableCharacter(sub, entries)
        with pytest.raises(CharacterDomainError):
            chi.evaluate(P("(1 2)", 4))

    def test_rejects_value_above_degree(self):
        sub, entries = self._cyclic4_table()
        bad = tuple(
            (sigma, gauss(5) if not sigma.is_identity() else value)
            for sigma, value in entries
        )
        with pytest.raises(ValueError):
            TableCharacter(sub, bad)
        TableCharacter(sub, bad, validate=False)  # adversarial escape hatch

    def test_rejects_non_class_function(self):
        from permfunc.groups import SymmetricGroup

        sub = enumerate_group(SymmetricGroup(3))
        swap = P("(1 2)", 3)
        bad = tuple(
            (sigma, gauss(1) if sigma == swap else (gauss(2) if sigma.is_identity() else gauss(0)))
            for sigma in sub.elements
        )
        with pytest.raises(ValueError):
            TableCharacter(sub, bad)


def test_parse_character():
    assert parse_character("trivial") == TrivialCharacter()
    assert parse_character("sign") == SignCharacter()
    assert parse_character("irr:[3,1]") == IrreducibleCharacter(Partition((3, 1)))
    with pytest.raises(ParseError):
        parse_character("irr:[1,3]")
    with pytest.raises(ParseError):
        parse_character("nope")


def test_table_character_from_json(tmp_path):
    path = tmp_path / "chi.json"
    path.write_text(
        '{"id": {"re": "1", "im": "0"},'
        ' "(1 2 3)": {"re": "1", "im": "0"},'
        ' "(1 3 2)": {"re": "1", "im": "0"}}'
    )
    chi = parse_character(f"table:{path}", 3)
    assert chi.evaluate(P("(1 2 3)", 3)) == ONE
    with pytest.raises(ParseError):
        parse_character(f"table:{tmp_path / 'missing.json'}", 3)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((0,))
    assert Partition((3, 1)).size == 4
