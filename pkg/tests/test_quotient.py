"""Graded quotient pieces: golden dimensions, reduction, brute-force agreement."""

import random
from fractions import Fraction

import pytest

from ivhs import (
    PLANE_VARS,
    SPACE_VARS,
    Monomial,
    Polynomial,
    VariableMismatchError,
    graded_monomials,
    ideal_degree_dim,
    koszul_expected_dim,
    monomial_count,
    parse_polynomial,
    quotient_context,
)

from oracles import gauss_rank, quotient_dim_oracle

QUADRIC = parse_polynomial("x0*x1-x2*x3", SPACE_VARS)
CUBIC = parse_polynomial("x0^3+x1^3+x2^3+x3^3", SPACE_VARS)
CUBIC2 = parse_polynomial("x0^3+2*x1^3+3*x2^3+4*x3^3", SPACE_VARS)
FERMAT4 = parse_polynomial("x^4+y^4+z^4", PLANE_VARS)


def test_two_cubics_span_eight_quartics():
    assert ideal_degree_dim([CUBIC, CUBIC2], 4) == 8


def test_generator_above_degree_contributes_nothing():
    assert ideal_degree_dim([FERMAT4], 2) == 0


def test_unique_quadric():
    assert ideal_degree_dim([QUADRIC], 2) == 1


def test_quartic_quotient_in_degree_two_is_everything():
    ctx = quotient_context([FERMAT4], 2)
    assert ctx.dim == 6
    assert list(ctx.basis) == graded_monomials(PLANE_VARS, 2)


def test_quadric_cubic_quotient_degree_two():
    assert quotient_context([QUADRIC, CUBIC], 2).dim == 9


def test_cubic_pair_quotient_degree_four():
    assert quotient_context([CUBIC, CUBIC2], 4).dim == 27


def test_reduce_swaps_quadric_terms():
    # x0*x1 and x2*x3 agree modulo the quadric
    ctx = quotient_context([QUADRIC], 2)
    lhs = ctx.reduce(parse_polynomial("x0*x1", SPACE_VARS))
    rhs = ctx.reduce(parse_polynomial("x2*x3", SPACE_VARS))
    assert lhs == rhs
    position = list(ctx.basis).index(Monomial((0, 0, 1, 1)))
    assert lhs[position] == 1
    assert sum(1 for c in lhs if c) == 1


def test_reduce_zero_polynomial():
    ctx = quotient_context([QUADRIC], 2)
    assert ctx.reduce(Polynomial.zero(SPACE_VARS)) == (Fraction(0),) * 9


def test_reduce_kills_generator_multiples():
    gens = [parse_polynomial(t, PLANE_VARS) for t in ("x^3", "y^3", "z^3")]
    ctx = quotient_context(gens, 5)
    reduced = ctx.reduce(parse_polynomial("x^3*y^2", PLANE_VARS))
    assert all(c == 0 for c in reduced)


def test_reduce_is_linear():
    rng = random.Random(5)
    ctx = quotient_context([QUADRIC, CUBIC], 2)
    mons = graded_monomials(SPACE_VARS, 2)
    for _ in range(25):
        f = Polynomial(SPACE_VARS, {m: rng.randrange(-3, 4) for m in mons})
        g = Polynomial(SPACE_VARS, {m: rng.randrange(-3, 4) for m in mons})
        a, b = Fraction(rng.randrange(-3, 4)), Fraction(rng.randrange(-3, 4))
        combined = ctx.reduce(f.scale(a) + g.scale(b))
        expected = tuple(
            a * x + b * y for x, y in zip(ctx.reduce(f), ctx.reduce(g))
        )
        assert combined == expected


def test_generator_multiples_reduce_to_zero_in_context():
    ctx = quotient_context([QUADRIC, CUBIC], 4)
    for g in (QUADRIC, CUBIC):
        dg = g.homogeneous_degree()
        for m in graded_monomials(SPACE_VARS, 4 - dg):
            assert all(c == 0 for c in ctx.reduce(g.mul_monomial(m)))


def test_single_generator_dimension_formula():
    # A nonzero form of degree d is a non-zerodivisor: dim = S_k - S_{k-d}
    gens = {
        1: parse_polynomial("x+2*y", PLANE_VARS),
        2: parse_polynomial("x^2-y*z", PLANE_VARS),
        3: parse_polynomial("x^3+y^3+x*y*z", PLANE_VARS),
        4: FERMAT4,
        5: parse_polynomial("x^5+y^5+z^5+x*y^2*z^2", PLANE_VARS),
    }
    for d, g in gens.items():
        for k in range(2 * d + 1):
            expected = monomial_count(3, k) - monomial_count(3, k - d)
            assert quotient_context([g], k).dim == expected


def test_koszul_expected_dims():
    assert koszul_expected_dim(2, 3, 4, 2) == 9
    assert koszul_expected_dim(3, 3, 4, 4) == 27
    assert koszul_expected_dim(2, 3, 4, 0) == 1


def test_complete_intersection_matches_koszul():
    for k in range(7):
        assert quotient_context([QUADRIC, CUBIC], k).dim == koszul_expected_dim(2, 3, 4, k)


def test_monomial_ideals_against_divisibility_oracle():
    # Exhaustive: every single monomial generator of degree <= 5 in 3 variables
    for d in range(1, 6):
        for gen in graded_monomials(PLANE_VARS, d):
            g = Polynomial.from_monomial(PLANE_VARS, gen)
            for k in range(9):
                divisible = sum(
                    1
                    for m in graded_monomials(PLANE_VARS, k)
                    if all(a >= b for a, b in zip(m.exponents, gen.exponents))
                )
                expected = monomial_count(3, k) - divisible
                assert monomial_count(3, k) - ideal_degree_dim([g], k) == expected


def test_dense_generators_against_elimination_oracle():
    rng = random.Random(17)
    for d in range(1, 6):
        mons = graded_monomials(PLANE_VARS, d)
        terms = {m: rng.randrange(-3, 4) for m in mons}
        if not any(terms.values()):
            terms[mons[0]] = 1
        g = Polynomial(PLANE_VARS, terms)
        gen_terms = {m.exponents: c for m, c in g.terms.items()}
        for k in range(7):
            oracle = quotient_dim_oracle(gen_terms, 3, d, k)
            assert quotient_context([g], k).dim == oracle


def test_multi_generator_against_elimination_oracle():
    # two- and three-generator sets in <= 3 variables, degrees <= 3, k <= 6
    sets = [
        ["x^2", "y^2"],
        ["x^2-y*z", "y^2-x*z"],
        ["x^3", "y^3", "z^3"],
        ["x*y", "y*z", "x*z"],
    ]
    for texts in sets:
        gens = [parse_polynomial(t, PLANE_VARS) for t in texts]
        for k in range(7):
            columns = graded_monomials(PLANE_VARS, k)
            index = {m: i for i, m in enumerate(columns)}
            rows = []
            for g in gens:
                dg = g.homogeneous_degree()
                if dg > k:
                    continue
                for shift in graded_monomials(PLANE_VARS, k - dg):
                    row = [Fraction(0)] * len(columns)
                    for m, c in g.mul_monomial(shift).terms.items():
                        row[index[m]] += c
                    rows.append(row)
            assert quotient_context(gens, k).dim == len(columns) - gauss_rank(rows)


def test_rejects_zero_generator():
    with pytest.raises(ValueError):
        quotient_context([Polynomial.zero(PLANE_VARS)], 2)


def test_rejects_inhomogeneous_generator():
    bad = parse_polynomial("x^2+x", PLANE_VARS)
    with pytest.raises(ValueError):
        quotient_context([bad], 2)


def test_reduce_validates_degree_and_variables():
    ctx = quotient_context([QUADRIC], 2)
    with pytest.raises(ValueError):
        ctx.reduce(parse_polynomial("x0^3", SPACE_VARS))
    with pytest.raises(VariableMismatchError):
        ctx.reduce(parse_polynomial("x^2", PLANE_VARS))
