"""Evaluation routes for generalized matrix functions.

A generalized matrix function contracts a matrix against a subgroup G of
S_n and a character chi: sum over sigma in G of chi(sigma) times the
entry product A[i, sigma(i)].  The determinant is (S_n, sign), the
permanent (S_n, trivial), immanants (S_n, irreducible chi).

Routes provided, all exact unless stated otherwise:

* naive summation over an enumerated group (the defining formula);
* the structured fast route for a*P_theta + b*P_tau, which sums only the
  2^r permutations that agree pointwise with theta or tau;
* closed forms for determinant and permanent straight from the cycle
  structure of theta^-1*tau;
* a minor-expansion oracle for det(A+B) over all complementary index
  pairs;
* the block generalization for sums of two scaled block-permutation
  layers;
* relations and closed forms for the symmetric companion S_theta;
* floating singular values, a singular-value bound check for linear
  characters, permanent-dominance and superadditivity checks, and a
  tensor-space symmetrizer oracle.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from .characters import CharacterSpec
from .errors import (
    CharacterDomainError,
    DegreeMismatchError,
    DisjointnessError,
    ExactnessError,
    PermfuncError,
)
from .gaussian import GaussianRational, ONE, ZERO, gauss
from .groups import (
    DEFAULT_ENUMERATION_CAP,
    GroupSpec,
    SymmetricGroup,
    enumerate_group,
)
from .matrices import (
    BlockSpec,
    Matrix,
    integer_grid,
    linear_sum,
    mat_add,
    mat_mul,
    s_matrix,
)
from .perm import (
    Permutation,
    compose,
    cycle_structure,
    disjoint_cycles,
    x_set,
)
from . import kernels

REL_TOL = 1e-9


class Method(str, enum.Enum):
    NAIVE = "naive"
    FORMULA = "formula"
    CLOSED_FORM = "closed"
    CAUCHY_BINET = "cauchy-binet"
    BLOCK = "block"
    TENSOR = "tensor"


@dataclass(frozen=True)
class GmfResult:
    value: GaussianRational
    method: Method
    term_count: int

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "method": self.method.value,
            "terms": self.term_count,
        }


@dataclass(frozen=True)
class IndexTuple:
    """Strictly increasing 1-based column/row selector."""

    indices: tuple[int, ...]

    @property
    def rank_sum(self) -> int:
        return sum(self.indices)


def index_tuples(k: int, n: int):
    """All strictly increasing k-tuples from [1..n]."""
    for combo in itertools.combinations(range(1, n + 1), k):
        yield IndexTuple(combo)


def _weights_to_int(values) -> tuple[list[int], list[int], int]:
    den = 1
    for v in values:
        den = lcm(den, v.re.denominator, v.im.denominator)
    if den == 1:
        wre = [v.re.numerator for v in values]
        wim = [v.im.numerator for v in values]
    else:
        wre = [int(v.re * den) for v in values]
        wim = [int(v.im * den) for v in values]
    return wre, wim, den


@functools.lru_cache(maxsize=64)
def _cached_weights(
    chi: CharacterSpec, group: GroupSpec, cap: int
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Character values over an enumerated group, as scaled integers.

    Keyed by the symbolic group spec (cheap to hash) rather than the
    element list; enumeration order is deterministic, so the key is
    sound.
    """
    subgroup = enumerate_group(group, cap)
    wre, wim, den = _weights_to_int([chi.evaluate(s) for s in subgroup.elements])
    return tuple(wre), tuple(wim), den


def det_exact(a: Matrix) -> GaussianRational:
    """Exact determinant by fraction-free elimination."""
    if not a.is_square:
        raise DegreeMismatchError("determinant needs a square matrix")
    pre, pim, den = integer_grid(a)
    dre, dim = kernels.det_gaussian_int(pre, pim)
    scale = Fraction(1, den**a.rows)
    return GaussianRational(dre * scale, dim * scale)


def gmf_naive(
    a: Matrix,
    group: GroupSpec,
    chi: CharacterSpec,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> GmfResult:
    """Sum chi(sigma) * prod_i A[i, sigma(i)] over the whole group."""
    if not a.is_square:
        raise DegreeMismatchError("generalized matrix functions need square matrices")
    if group.degree != a.rows:
        raise DegreeMismatchError(
            f"matrix degree {a.rows}, group degree {group.degree}"
        )
    subgroup = enumerate_group(group, cap)
    wre, wim, wden = _cached_weights(chi, group, cap)
    pre, pim, den = integer_grid(a)
    sre, sim = kernels.gmf_sum(
        list(subgroup.zero_based()), list(wre), list(wim), pre, pim
    )
    scale = Fraction(1, wden * den**a.rows)
    return GmfResult(
        GaussianRational(sre * scale, sim * scale), Method.NAIVE, subgroup.order
    )


def gmf_linear_sum(
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
    group: GroupSpec,
    chi: CharacterSpec,
) -> GmfResult:
    """Fast route for a*P_theta + b*P_tau.

    Only permutations agreeing pointwise with theta or tau contribute;
    each contributes conj-chi(sigma) * a^(n-t-F) * b^t, all times
    (a+b)^F, where F counts the points where theta and tau agree and t
    the points where sigma follows tau.  0^0 counts as 1, and a
    vanishing (a+b) with F > 0 short-circuits to exact zero.
    """
    if theta.degree != tau.degree:
        raise DegreeMismatchError(f"degrees differ: {theta.degree} vs {tau.degree}")
    if group.degree != theta.degree:
        raise DegreeMismatchError(
            f"permutation degree {theta.degree}, group degree {group.degree}"
        )
    n = theta.degree
    f_count = len(compose(theta.inverse(), tau).fixed_points())
    prefactor = (a + b) ** f_count
    if prefactor.is_zero():
        return GmfResult(ZERO, Method.FORMULA, 0)
    total = ZERO
    terms = 0
    for element in x_set(theta, tau):
        if not group.contains(element.sigma):
            continue
        t = element.t_sigma
        monomial = a ** (n - t - f_count) * b**t
        if monomial.is_zero():
            continue
        terms += 1
        total = total + chi.conjugate_evaluate(element.sigma) * monomial
    return GmfResult(prefactor * total, Method.FORMULA, terms)


def _closed_form(
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
    signed: bool,
) -> GmfResult:
    cs = cycle_structure(compose(theta.inverse(), tau))
    n = theta.degree
    lengths = cs.lengths
    f_count = cs.fixed_count
    prefactor = (a + b) ** f_count
    if prefactor.is_zero():
        return GmfResult(ZERO, Method.CLOSED_FORM, 0)
    total = ZERO
    terms = 0
    for mask in range(1 << len(lengths)):
        moved = 0
        size = 0
        for i, length in enumerate(lengths):
            if mask >> i & 1:
                moved += length
                size += 1
        monomial = a ** (n - moved - f_count) * b**moved
        if monomial.is_zero():
            continue
        terms += 1
        if signed and (size + moved) % 2:
            monomial = -monomial
        total = total + monomial
    if signed and theta.sign() < 0:
        total = -total
    return GmfResult(prefactor * total, Method.CLOSED_FORM, terms)


def det_linear_sum(
    a: GaussianRational, b: GaussianRational, theta: Permutation, tau: Permutation
) -> GmfResult:
    """det(a*P_theta + b*P_tau) from the cycle structure of theta^-1*tau alone.

    Each subset of cycles contributes with sign (-1)^(count + moved); the
    whole sum carries sign(theta).
    """
    if theta.degree != tau.degree:
        raise DegreeMismatchError(f"degrees differ: {theta.degree} vs {tau.degree}")
    return _closed_form(a, b, theta, tau, signed=True)


def per_linear_sum(
    a: GaussianRational, b: GaussianRational, theta: Permutation, tau: Permutation
) -> GmfResult:
    """per(a*P_theta + b*P_tau) from the cycle structure of theta^-1*tau alone."""
    if theta.degree != tau.degree:
        raise DegreeMismatchError(f"degrees differ: {theta.degree} vs {tau.degree}")
    return _closed_form(a, b, theta, tau, signed=False)


def det_cauchy_binet_sum(a: Matrix, b: Matrix) -> GmfResult:
    """det(a+b) expanded over all complementary minor pairs.

    Sums (-1)^(r(alpha)+r(beta)) det(a[alpha|beta]) det(b(alpha|beta))
    over all k and all strictly increasing index pairs; the inner
    determinants run fraction-free on Gaussian integers.
    """
    if not a.is_square or not b.is_square or a.rows != b.rows:
        raise DegreeMismatchError("need two square matrices of equal size")
    n = a.rows
    pre_a, pim_a, den_a = integer_grid(a)
    pre_b, pim_b, den_b = integer_grid(b)
    total = ZERO
    terms = 0
    everything = frozenset(range(1, n + 1))
    for k in range(n + 1):
        scale = Fraction(1, den_a**k * den_b ** (n - k))
        selectors = [
            (t, sorted(everything - set(t.indices)), t.rank_sum)
            for t in index_tuples(k, n)
        ]
        for alpha, alpha_rest, alpha_rank in selectors:
            for beta, beta_rest, beta_rank in selectors:
                terms += 1
                da = kernels.det_gaussian_int(
                    [[pre_a[i - 1][j - 1] for j in beta.indices] for i in alpha.indices],
                    [[pim_a[i - 1][j - 1] for j in beta.indices] for i in alpha.indices],
                )
                db = kernels.det_gaussian_int(
                    [[pre_b[i - 1][j - 1] for j in beta_rest] for i in alpha_rest],
                    [[pim_b[i - 1][j - 1] for j in beta_rest] for i in alpha_rest],
                )
                prod_re = da[0] * db[0] - da[1] * db[1]
                prod_im = da[0] * db[1] + da[1] * db[0]
                if (alpha_rank + beta_rank) % 2:
                    prod_re, prod_im = -prod_re, -prod_im
                total = total + GaussianRational(prod_re * scale, prod_im * scale)
    return GmfResult(total, Method.CAUCHY_BINET, terms)


def gmf_block(spec: BlockSpec, group: GroupSpec, chi: CharacterSpec) -> GmfResult:
    """Fast route for the block assembly described by ``spec``.

    With alpha, beta the induced permutations of [1..m*n], only the
    2^r pointwise mixtures of the two contribute.  A cycle (or fixed
    point) of alpha^-1*beta supported on column y collects the
    coefficient of the block row containing alpha(y); agreement points
    contribute (a_j + b_j) factors.
    """
    if group.degree != spec.size:
        raise DegreeMismatchError(
            f"group degree {group.degree} != block matrix size {spec.size}"
        )
    alpha, beta = spec.induced_pair()
    dec = disjoint_cycles(compose(alpha.inverse(), beta))

    def image_block(point: int) -> int:
        return (alpha(point) - 1) // spec.m

    fixed_per_block = [0] * spec.n
    for point in dec.fixed_points:
        fixed_per_block[image_block(point)] += 1
    counts = [
        [0] * spec.n for _ in dec.cycles
    ]  # counts[i][j]: cycle i's points landing in block row j+1
    for i, cycle in enumerate(dec.cycles):
        for point in cycle:
            counts[i][image_block(point)] += 1

    prefactor = ONE
    for j in range(spec.n):
        prefactor = prefactor * (spec.a[j] + spec.b[j]) ** fixed_per_block[j]
    if prefactor.is_zero():
        return GmfResult(ZERO, Method.BLOCK, 0)

    total = ZERO
    terms = 0
    for element in x_set(alpha, beta):
        if not group.contains(element.sigma):
            continue
        weight = ONE
        for i in range(len(dec.cycles)):
            coeffs = spec.b if (i + 1) in element.chosen else spec.a
            for j in range(spec.n):
                if counts[i][j]:
                    weight = weight * coeffs[j] ** counts[i][j]
        if weight.is_zero():
            continue
        terms += 1
        total = total + chi.conjugate_evaluate(element.sigma) * weight
    return GmfResult(prefactor * total, Method.BLOCK, terms)


def gmf_s_matrix(
    theta: Permutation, group: GroupSpec, chi: CharacterSpec
) -> GmfResult:
    """Value on the symmetric companion S_theta.

    P_theta + P_theta^-1 doubles the entries of S_theta on fixed points
    and 2-cycles, so the linear-sum value divides by 2^(F + 2t).
    """
    cs = cycle_structure(theta)
    doubled = gmf_linear_sum(
        ONE, ONE, theta, theta.inverse(), group, chi
    )
    twos = cs.fixed_count + 2 * sum(1 for length in cs.lengths if length == 2)
    half = GaussianRational(Fraction(1, 2**twos))
    return GmfResult(doubled.value * half, Method.FORMULA, doubled.term_count)


def _s_cycle_counts(theta: Permutation) -> tuple[int, int, int, int]:
    """(fixed, odd cycles, cycles of length 2 mod 4 above 2, 2-cycles)."""
    cs = cycle_structure(theta)
    odd = sum(1 for length in cs.lengths if length % 2 == 1)
    two_mod_four = sum(1 for length in cs.lengths if length > 2 and length % 4 == 2)
    transpositions = sum(1 for length in cs.lengths if length == 2)
    return cs.fixed_count, odd, two_mod_four, transpositions


def det_s_closed(theta: Permutation) -> GaussianRational:
    """det(S_theta) in closed form.

    Zero whenever some cycle length is divisible by 4; otherwise
    (-1)^(s+t) * 2^(r+2s) with r odd cycles (length >= 3), s cycles of
    length 2 mod 4 above 2, and t transpositions.
    """
    cs = cycle_structure(theta)
    if any(length % 4 == 0 for length in cs.lengths):
        return ZERO
    _, odd, two_mod_four, transpositions = _s_cycle_counts(theta)
    sign = -1 if (two_mod_four + transpositions) % 2 else 1
    return gauss(sign * 2 ** (odd + 2 * two_mod_four))


def det_perm_pair_closed(theta: Permutation) -> GaussianRational:
    """det(P_theta + P_theta^-1) in closed form."""
    cs = cycle_structure(theta)
    if any(length % 4 == 0 for length in cs.lengths):
        return ZERO
    fixed, odd, two_mod_four, transpositions = _s_cycle_counts(theta)
    sign = -1 if (two_mod_four + transpositions) % 2 else 1
    return gauss(sign * 2 ** (fixed + odd + 2 * (two_mod_four + transpositions)))


def s_product(theta: Permutation, tau: Permutation) -> Matrix:
    """S_theta * S_tau collapses to S_(theta*tau) for disjoint supports.

    Raises DisjointnessError when the moved points overlap; the identity
    genuinely fails there.  The returned matrix is checked against the
    actual product.
    """
    if theta.degree != tau.degree:
        raise DegreeMismatchError(f"degrees differ: {theta.degree} vs {tau.degree}")
    if theta.support() & tau.support():
        raise DisjointnessError("moved points of the two permutations overlap")
    expected = s_matrix(compose(theta, tau))
    actual = mat_mul(s_matrix(theta), s_matrix(tau))
    if expected != actual:
        raise PermfuncError("product identity violated despite disjoint supports")
    return expected


@dataclass(frozen=True)
class SingularSpectrum:
    """All n singular values (floating, descending)."""

    values: tuple[float, ...]

    def sum_squares(self) -> float:
        return sum(v * v for v in self.values)

    def prod_squares(self) -> float:
        return math.prod(v * v for v in self.values)

    def to_json(self) -> dict:
        return {"values": list(self.values)}


def singular_values(
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
) -> SingularSpectrum:
    """Singular values of a*P_theta + b*P_tau.

    The Gram matrix is (|a|^2+|b|^2) I plus conj(a)b P_rho plus its
    adjoint, rho = theta^-1*tau, so each cycle of length l contributes
    the values sqrt(|a|^2 + |b|^2 + 2 Re(conj(a) b zeta)) over the l-th
    roots of unity zeta.
    """
    if theta.degree != tau.degree:
        raise DegreeMismatchError(f"degrees differ: {theta.degree} vs {tau.degree}")
    rho = compose(theta.inverse(), tau)
    base = float(a.abs_squared() + b.abs_squared())
    cross = a.conjugate() * b
    cr, ci = float(cross.re), float(cross.im)
    out = []
    for length in cycle_structure(rho).full_type():
        for k in range(length):
            angle = 2.0 * math.pi * k / length
            radicand = base + 2.0 * (cr * math.cos(angle) - ci * math.sin(angle))
            if radicand < -REL_TOL * max(1.0, base):
                raise PermfuncError(f"negative squared singular value: {radicand}")
            out.append(math.sqrt(max(radicand, 0.0)))
    return SingularSpectrum(tuple(sorted(out, reverse=True)))


@dataclass(frozen=True)
class BoundReport:
    lhs: float
    rhs: float
    holds: bool

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def _linear_sum_value_float(
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
    group: GroupSpec,
    chi: CharacterSpec,
) -> complex:
    """Floating twin of gmf_linear_sum for characters outside Q(i)."""
    n = theta.degree
    f_count = len(compose(theta.inverse(), tau).fixed_points())
    af, bf = complex(a.re, a.im), complex(b.re, b.im)
    total = 0j
    for element in x_set(theta, tau):
        if not group.contains(element.sigma):
            continue
        t = element.t_sigma
        weight = chi.evaluate_float(element.sigma.inverse())
        total += weight * af ** (n - t - f_count) * bf**t
    return total * (af + bf) ** f_count


def check_singular_bound(
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
    group: GroupSpec,
    chi: CharacterSpec,
) -> BoundReport:
    """Squared modulus of the fast-route value against the spectral mean.

    For a linear character, |value|^2 is bounded by the mean of the
    2n-th powers of the singular values.  The left side is computed
    exactly and floated; the comparison margin uses a relative 1e-9
    tolerance because equality cases are common (all singular values
    equal) and the right side is floating.
    """
    if not chi.is_linear():
        raise CharacterDomainError("the singular-value bound needs a linear character")
    n = theta.degree
    try:
        value = gmf_linear_sum(a, b, theta, tau, group, chi).value
        lhs = float(value.abs_squared())
    except ExactnessError:
        lhs = abs(_linear_sum_value_float(a, b, theta, tau, group, chi)) ** 2
    spectrum = singular_values(a, b, theta, tau)
    rhs = sum((v * v) ** n for v in spectrum.values) / n
    holds = lhs <= rhs + REL_TOL * max(1.0, abs(lhs), abs(rhs))
    return BoundReport(lhs, rhs, holds)


@dataclass(frozen=True)
class DominanceReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "holds": self.holds}


def _require_psd_pair(k: Fraction, m: Fraction, pi: Permutation):
    if k < abs(m):
        raise ValueError(f"need k >= |m|, got k={k}, m={m}")
    if not pi.is_involution():
        raise ValueError(f"{pi} is not an involution")


def check_dominance(
    k: Fraction,
    m: Fraction,
    pi: Permutation,
    chi: CharacterSpec,
) -> DominanceReport:
    """Exact check of (1/chi(id)) * gmf(k*I + m*P_pi) <= per(k*I + m*P_pi).

    The matrix is positive semidefinite by construction (k >= |m|, pi an
    involution); both sides are real rationals, compared exactly.
    """
    _require_psd_pair(k, m, pi)
    n = pi.degree
    ident = Permutation.identity(n)
    value = gmf_linear_sum(
        gauss(k), gauss(m), ident, pi, SymmetricGroup(n), chi
    ).value
    if not value.is_real():
        raise PermfuncError("dominance check produced a non-real value")
    permanent = per_linear_sum(gauss(k), gauss(m), ident, pi).value
    lhs = value.re / Fraction(chi.degree())
    rhs = permanent.re
    return DominanceReport(lhs, rhs, lhs <= rhs)


@dataclass(frozen=True)
class SuperadditivityReport:
    combined: Fraction
    left: Fraction
    right: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {
            "combined": str(self.combined),
            "left": str(self.left),
            "right": str(self.right),
            "holds": self.holds,
        }


def check_superadditivity(
    k1: Fraction,
    m1: Fraction,
    pi1: Permutation,
    k2: Fraction,
    m2: Fraction,
    pi2: Permutation,
    chi: CharacterSpec,
) -> SuperadditivityReport:
    """gmf(A+B) >= gmf(A) + gmf(B) for two positive semidefinite layers.

    A = k1*I + m1*P_pi1 and B = k2*I + m2*P_pi2; the sum is a three-term
    matrix, evaluated by the naive route over S_n; the parts use the
    fast route.  All values are exact rationals.
    """
    if pi1.degree != pi2.degree:
        raise DegreeMismatchError(f"degrees differ: {pi1.degree} vs {pi2.degree}")
    _require_psd_pair(k1, m1, pi1)
    _require_psd_pair(k2, m2, pi2)
    n = pi1.degree
    ident = Permutation.identity(n)
    group = SymmetricGroup(n)
    total_matrix = mat_add(
        linear_sum(gauss(k1), gauss(m1), ident, pi1),
        linear_sum(gauss(k2), gauss(m2), ident, pi2),
    )
    combined = gmf_naive(total_matrix, group, chi).value
    left = gmf_linear_sum(gauss(k1), gauss(m1), ident, pi1, group, chi).value
    right = gmf_linear_sum(gauss(k2), gauss(m2), ident, pi2, group, chi).value
    for v in (combined, left, right):
        if not v.is_real():
            raise PermfuncError("superadditivity check produced a non-real value")
    return SuperadditivityReport(
        combined.re, left.re, right.re, combined.re >= left.re + right.re
    )


def tensor_oracle(
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
    group: GroupSpec,
    chi: CharacterSpec,
    max_degree: int = 4,
) -> GaussianRational:
    """Evaluate the linear sum through the tensor-space symmetrizer.

    Applies T = sum_{sigma in G} chi(sigma) P(sigma) on the n^n
    dimensional tensor power, with P(sigma) permuting slots, to
    x = e_1 x ... x e_n and to y = the columns of a*P_theta + b*P_tau,
    and returns <Tx, Ty> / |G|.

    That quotient equals the generalized matrix function whenever chi
    splits into distinct linear characters of G (so in particular for
    every linear chi); for a d-dimensional irreducible character the
    tensor pairing carries an extra factor |G|/d.  Scalars are kept real
    so the result does not depend on a conjugation convention.
    """
    n = theta.degree
    if n > max_degree:
        raise ValueError(f"tensor space would have dimension {n}^{n}; max is {max_degree}")
    if not (a.is_real() and b.is_real()):
        raise ExactnessError("tensor oracle is restricted to real coefficients")
    if group.degree != n:
        raise DegreeMismatchError(
            f"permutation degree {n}, group degree {group.degree}"
        )
    matrix = linear_sum(a, b, theta, tau)
    elements = enumerate_group(group).elements

    # T x for x = e_1 x ... x e_n: one basis vector per group element.
    tx: dict[tuple[int, ...], GaussianRational] = {}
    for sigma in elements:
        inv = sigma.inverse()
        key = tuple(inv(k) for k in range(1, n + 1))
        weight = chi.evaluate(sigma)
        tx[key] = tx.get(key, ZERO) + weight

    # T y for y = y_1 x ... x y_n with (y_j)_i = A[i][j].
    ty: dict[tuple[int, ...], GaussianRational] = {}
    for sigma in elements:
        weight = chi.evaluate(sigma)
        if weight.is_zero():
            continue
        for key in itertools.product(range(1, n + 1), repeat=n):
            coeff = weight
            for j in range(1, n + 1):
                coeff = coeff * matrix.entry(key[sigma(j) - 1], j)
                if coeff.is_zero():
                    break
            if coeff.is_zero():
                continue
            ty[key] = ty.get(key, ZERO) + coeff

    pairing = ZERO
    for key, left in tx.items():
        right = ty.get(key)
        if right is not None:
            pairing = pairing + left * right.conjugate()
    return pairing / gauss(len(elements))


@dataclass(frozen=True)
class TermCounts:
    naive: int
    formula: int
    cauchy_binet: int

    def to_json(self) -> dict:
        return {
            "naive": self.naive,
            "formula": self.formula,
            "cauchy-binet": self.cauchy_binet,
        }


def term_counts(theta: Permutation, tau: Permutation, group: GroupSpec) -> TermCounts:
    """Summand counts of the three evaluation routes for one instance."""
    if theta.degree != tau.degree or group.degree != theta.degree:
        raise DegreeMismatchError("degrees must agree")
    n = theta.degree
    in_group = sum(1 for el in x_set(theta, tau) if group.contains(el.sigma))
    minor_pairs = sum(comb(n, k) ** 2 for k in range(n + 1))
    return TermCounts(group.order(), in_group, minor_pairs)
