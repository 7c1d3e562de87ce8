"""Degree-k pieces of quotients S/I for explicitly generated homogeneous ideals.

Because every space handled here lives in one degree k with generators of
degree at most k, the degree-k piece of the ideal is exactly the span of
the monomial multiples of the generators. One echelonization therefore
yields the dimension, a monomial basis of the quotient (the non-pivot
columns) and a linear reduction map to coordinates; no Groebner bases are
needed at these sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import ExactMatrix
from .poly import (
    Monomial,
    Polynomial,
    VariableMismatchError,
    VariableSet,
    graded_monomials,
    monomial_count,
)


@dataclass(frozen=True)
class GradedQuotientContext:
    """Degree-k piece of S/(generators): monomial basis plus reduction data.

    `basis` lists the monomials representing the quotient; `reduce` maps
    any degree-k polynomial to its coordinate vector over that basis.
    """

    variables: VariableSet
    degree: int
    generators: tuple[Polynomial, ...]
    monomials: tuple[Monomial, ...]
    basis: tuple[Monomial, ...]
    pivots: tuple[int, ...] = field(repr=False)
    rref_rows: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectorize(self, f: Polynomial) -> list[Fraction]:
        """Coefficient vector of a degree-k polynomial over all of S_k."""
        if f.variables != self.variables:
            raise VariableMismatchError("polynomial over a different variable set")
        if not f.is_zero() and f.homogeneous_degree() != self.degree:
            raise ValueError(
                f"expected a homogeneous polynomial of degree {self.degree}"
            )
        index = {m: i for i, m in enumerate(self.monomials)}
        v = [Fraction(0)] * len(self.monomials)
        for m, c in f.terms.items():
            v[index[m]] = c
        return v

    def reduce(self, f: Polynomial) -> tuple[Fraction, ...]:
        """Coordinates of the class of f in `basis`; generator multiples go to zero."""
        v = self.vectorize(f)
        for r, c in enumerate(self.pivots):
            coeff = v[c]
            if coeff:
                row = self.rref_rows[r]
                v = [a - coeff * b for a, b in zip(v, row)]
        pivot_set = set(self.pivots)
        return tuple(v[j] for j in range(len(v)) if j not in pivot_set)


def _validated(generators: Sequence[Polynomial]) -> tuple[VariableSet, list[Polynomial]]:
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise VariableMismatchError("generators over different variable sets")
        if g.is_zero():
            raise ValueError("zero generator")
        g.homogeneous_degree()  # raises when inhomogeneous
    return variables, gens


def _multiple_rows(
    generators: Sequence[Polynomial], k: int
) -> tuple[VariableSet, list[Monomial], list[list[Fraction]]]:
    """Coefficient rows of all degree-k monomial multiples of the generators."""
    variables, gens = _validated(generators)
    if k < 0:
        raise ValueError("degree must be nonnegative")
    monomials = graded_monomials(variables, k)
    index = {m: i for i, m in enumerate(monomials)}
    rows: list[list[Fraction]] = []
    for g in gens:
        dg = g.homogeneous_degree()
        if dg > k:
            continue
        for m in graded_monomials(variables, k - dg):
            product = g.mul_monomial(m)
            row = [Fraction(0)] * len(monomials)
            for mm, c in product.terms.items():
                row[index[mm]] = c
            rows.append(row)
    return variables, monomials, rows


def ideal_degree_dim(generators: Sequence[Polynomial], k: int) -> int:
    """Dimension of the degree-k piece of the ideal spanned by the generators."""
    _, monomials, rows = _multiple_rows(generators, k)
    if not rows:
        return 0
    return ExactMatrix.from_rows(rows, cols=len(monomials)).rank()


def quotient_context(generators: Sequence[Polynomial], k: int) -> GradedQuotientContext:
    """Build the degree-k quotient: basis monomials are the non-pivot columns."""
    variables, monomials, rows = _multiple_rows(generators, k)
    matrix = ExactMatrix.from_rows(rows, cols=len(monomials))
    reduced, pivots = matrix.rref()
    pivot_set = set(pivots)
    basis = tuple(m for j, m in enumerate(monomials) if j not in pivot_set)
    rref_rows = tuple(reduced.row(r) for r in range(len(pivots)))
    return GradedQuotientContext(
        variables=variables,
        degree=k,
        generators=tuple(generators),
        monomials=tuple(monomials),
        basis=basis,
        pivots=pivots,
        rref_rows=rref_rows,
    )


def koszul_expected_dim(a: int, b: int, nvars: int, k: int) -> int:
    """Quotient dimension in degree k predicted for a regular sequence of degrees (a, b)."""
    if a < 1 or b < 1:
        raise ValueError("generator degrees must be positive")
    return (
        monomial_count(nvars, k)
        - monomial_count(nvars, k - a)
        - monomial_count(nvars, k - b)
        + monomial_count(nvars, k - a - b)
    )
