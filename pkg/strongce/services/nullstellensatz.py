"""Polynomial certificates for list assignments (Combinatorial Nullstellensatz).

A system of factor pairs (i, j) stands for the polynomial P = prod(x_i - x_j).
If the coefficient of x^k in P is nonzero, deg P = sum(k), and every list S_i
has more than k_i colors, then some choice s_i in S_i makes every factor
nonzero. Coefficients are extracted either from a sparse expansion that drops
monomials above the target exponents, or from a dense numpy grid of the same
shape.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from strongce.errors import CoefficientOverflowError, GuaranteeViolation, PreconditionError
from strongce.utils.logger import get_logger

logger = get_logger("nullstellensatz")

Monomial = Tuple[int, ...]
FactorPair = Tuple[int, int]

INT64_LIMIT = 2 ** 63 - 1

# Nine uncolored edges around a 5-cycle: x0..x4 are the cycle edges, x5..x8
# the pendants erased after the greedy pass.
FIVE_CYCLE_FACTORS: Tuple[FactorPair, ...] = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 8),
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
    (3, 4), (3, 6), (3, 7), (3, 8),
    (4, 5), (4, 7), (4, 8),
    (5, 6), (6, 7), (7, 8),
)
FIVE_CYCLE_TARGET: Monomial = (3, 4, 5, 4, 4, 2, 3, 2, 2)
FIVE_CYCLE_COEFFICIENT = -1


def _checked(value: int) -> int:
    if abs(value) > INT64_LIMIT:
        raise CoefficientOverflowError(f"coefficient {value} does not fit in 64 bits")
    return value


class SparsePolynomial:
    """Integer polynomial in n variables stored as exponent vector -> coefficient"""

    def __init__(self, variable_count: int, terms: Optional[Dict[Monomial, int]] = None):
        self.variable_count = variable_count
        self.terms: Dict[Monomial, int] = {}
        for monomial, coefficient in (terms or {}).items():
            if len(monomial) != variable_count:
                raise PreconditionError(f"monomial {monomial} does not have {variable_count} exponents")
            if coefficient:
                self.terms[tuple(monomial)] = _checked(int(coefficient))

    @classmethod
    def one(cls, variable_count: int) -> "SparsePolynomial":
        return cls(variable_count, {(0,) * variable_count: 1})

    def multiply_capped(self, factor: FactorPair, caps: Optional[Sequence[int]] = None) -> "SparsePolynomial":
        """self * (x_i - x_j), dropping monomials with an exponent above its cap"""
        i, j = factor
        if i == j:
            raise PreconditionError(f"factor ({i}, {j}) is identically zero")
        result: Dict[Monomial, int] = {}
        for monomial, coefficient in self.terms.items():
            for index, sign in ((i, 1), (j, -1)):
                if caps is not None and monomial[index] + 1 > caps[index]:
                    continue
                grown = monomial[:index] + (monomial[index] + 1,) + monomial[index + 1:]
                result[grown] = _checked(result.get(grown, 0) + sign * coefficient)
        return SparsePolynomial(self.variable_count, {m: c for m, c in result.items() if c})

    def coefficient_of(self, monomial: Sequence[int]) -> int:
        return self.terms.get(tuple(monomial), 0)

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for monomial, coefficient in self.terms.items():
            term = coefficient
            for value, exponent in zip(values, monomial):
                term *= value ** exponent
            total += term
        return total

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.variable_count == other.variable_count and self.terms == other.terms

    def __repr__(self) -> str:
        return f"SparsePolynomial(n={self.variable_count}, terms={len(self.terms)})"


def expand_capped(variable_count: int, factors: Iterable[FactorPair], caps: Optional[Sequence[int]] = None) -> SparsePolynomial:
    poly = SparsePolynomial.one(variable_count)
    for factor in factors:
        poly = poly.multiply_capped(factor, caps)
    return poly


def dense_coefficient(variable_count: int, factors: Sequence[FactorPair], target: Sequence[int]) -> int:
    """Coefficient of x^target in prod(x_i - x_j), expanded on a capped numpy grid"""
    shape = tuple(k + 1 for k in target)
    grid = np.zeros(shape, dtype=np.int64)
    grid[(0,) * variable_count] = 1
    for i, j in factors:
        grown = np.zeros_like(grid)
        grown[_shift(i, variable_count)] += grid[_trim(i, variable_count)]
        grown[_shift(j, variable_count)] -= grid[_trim(j, variable_count)]
        if grown.size and int(np.abs(grown).max()) > INT64_LIMIT // 2:
            raise CoefficientOverflowError("dense expansion left the safe 64-bit range")
        grid = grown
    return int(grid[tuple(target)])


def _shift(axis: int, n: int) -> Tuple[slice, ...]:
    return tuple(slice(1, None) if a == axis else slice(None) for a in range(n))


def _trim(axis: int, n: int) -> Tuple[slice, ...]:
    return tuple(slice(None, -1) if a == axis else slice(None) for a in range(n))


def expand_by_enumeration(variable_count: int, factors: Sequence[FactorPair]) -> SparsePolynomial:
    """Full expansion by choosing one term from every factor; for small products"""
    if len(factors) > 16:
        raise PreconditionError("enumerated expansion is limited to 16 factors")
    terms: Dict[Monomial, int] = {}
    for choice in product((0, 1), repeat=len(factors)):
        exponents = [0] * variable_count
        sign = 1
        for (i, j), pick in zip(factors, choice):
            if pick:
                exponents[j] += 1
                sign = -sign
            else:
                exponents[i] += 1
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + sign
    return SparsePolynomial(variable_count, terms)


def finite_difference_coefficient(variable_count: int, factors: Sequence[FactorPair], target: Sequence[int]) -> int:
    """Coefficient of x^target via mixed forward differences of P at the origin.

    Valid when sum(target) equals the number of factors: every other monomial
    of that degree has some exponent below its target and is annihilated.
    """
    if sum(target) != len(factors):
        raise PreconditionError("finite differences need sum(target) equal to the degree")
    shape = tuple(k + 1 for k in target)
    points = np.indices(shape).reshape(variable_count, -1)
    nonzero = np.ones(points.shape[1], dtype=bool)
    for i, j in factors:
        nonzero &= points[i] != points[j]
    total = 0
    for column in np.flatnonzero(nonzero):
        t = [int(v) for v in points[:, column]]
        value = 1
        for i, j in factors:
            value *= t[i] - t[j]
        weight = 1
        for k, ti in zip(target, t):
            weight *= comb(k, ti)
        if (sum(target) - sum(t)) % 2:
            weight = -weight
        total += weight * value
    scale = 1
    for k in target:
        scale *= factorial(k)
    if total % scale:
        raise GuaranteeViolation("finite difference sum is not divisible by the factorial scale")
    return total // scale


@dataclass(frozen=True)
class ConflictSystem:
    """Variables with color lists, factor pairs that must differ, and target exponents"""
    variable_count: int
    factor_pairs: Tuple[FactorPair, ...]
    lists: Tuple[Tuple[int, ...], ...]
    targets: Monomial

    def __post_init__(self):
        if len(self.lists) != self.variable_count or len(self.targets) != self.variable_count:
            raise PreconditionError("lists and targets must have one entry per variable")
        for i, j in self.factor_pairs:
            if i == j or not (0 <= i < self.variable_count and 0 <= j < self.variable_count):
                raise PreconditionError(f"invalid factor pair ({i}, {j})")

    @property
    def degree(self) -> int:
        return len(self.factor_pairs)

    def sizes_suffice(self) -> bool:
        return all(len(s) > k for s, k in zip(self.lists, self.targets))

    def target_coefficient(self) -> int:
        if sum(self.targets) != self.degree:
            return 0
        return dense_coefficient(self.variable_count, self.factor_pairs, self.targets)

    def evaluate(self, values: Sequence[int]) -> int:
        result = 1
        for i, j in self.factor_pairs:
            result *= values[i] - values[j]
        return result

    def is_solution(self, values: Sequence[int]) -> bool:
        return all(v in s for v, s in zip(values, self.lists)) and all(values[i] != values[j] for i, j in self.factor_pairs)


@lru_cache(maxsize=1)
def five_cycle_certificate() -> int:
    """Target coefficient of the nine-variable 5-cycle polynomial; always -1"""
    if len(FIVE_CYCLE_FACTORS) != 29 or sum(FIVE_CYCLE_TARGET) != 29:
        raise GuaranteeViolation("5-cycle polynomial must have 29 factors and degree 29")
    coefficient = dense_coefficient(9, FIVE_CYCLE_FACTORS, FIVE_CYCLE_TARGET)
    logger.debug(f"5-cycle certificate coefficient {coefficient}")
    if coefficient != FIVE_CYCLE_COEFFICIENT:
        raise GuaranteeViolation(f"5-cycle certificate is {coefficient}, expected {FIVE_CYCLE_COEFFICIENT}")
    return coefficient


def cn_find_assignment(system: ConflictSystem) -> Optional[Tuple[int, ...]]:
    """Backtracking search for s_i in S_i with every factor pair distinct.

    Variables are tried smallest list first; a prefix is pruned as soon as a
    factor with both ends assigned vanishes.
    """
    n = system.variable_count
    order = sorted(range(n), key=lambda i: (len(system.lists[i]), i))
    partners: List[List[int]] = [[] for _ in range(n)]
    for i, j in system.factor_pairs:
        partners[i].append(j)
        partners[j].append(i)
    values: List[Optional[int]] = [None] * n

    def search(depth: int) -> bool:
        if depth == n:
            return True
        var = order[depth]
        for color in system.lists[var]:
            if any(values[p] == color for p in partners[var]):
                continue
            values[var] = color
            if search(depth + 1):
                return True
        values[var] = None
        return False

    if not search(0):
        return None
    return tuple(values)
