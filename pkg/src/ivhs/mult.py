"""Canonical multiplication maps Sym^2 H^0(omega) -> H^0(omega^2) as explicit matrices.

Three concrete models are supported: plane curves (dualizing sheaf cut
out by degree d-3 forms), complete intersections of two surfaces in
3-space (degree a+b-4 forms modulo the two equations), and hyperelliptic
curves (pure exponent arithmetic on the affine differentials x^i dx/y).

The Sym^2 source is the list of unordered pairs (i <= j) of section-basis
elements in index-lex order; the column for a pair is the reduction of the
product, taken once (no factor of two), so ranks and kernels match the
monomial-pair conventions used for hand computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import ExactMatrix
from .poly import Monomial, Polynomial, VariableSet, graded_monomials
from .quotient import koszul_expected_dim, quotient_context


class RegularSequenceError(ValueError):
    """The two equations do not behave like a regular sequence in the degrees used."""


@dataclass(frozen=True)
class MultiplicationReport:
    """Multiplication matrix of a concrete model with its rank and kernel.

    kernel_basis holds primitive integer vectors over the Sym^2 pair
    basis; kernel_relations renders each as a quadratic relation in the
    pair labels.
    """

    model: str
    source_dim: int
    target_dim: int
    matrix: ExactMatrix
    rank: int
    kernel_dim: int
    kernel_basis: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[int, int], ...]
    section_labels: tuple[str, ...]
    pair_labels: tuple[str, ...]
    kernel_relations: tuple[str, ...]
    sections: tuple[Monomial, ...] | None = None
    variables: VariableSet | None = None


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def _relation_text(vector: tuple[int, ...], labels: tuple[str, ...]) -> str:
    chunks = []
    for c, label in zip(vector, labels):
        if not c:
            continue
        mag = abs(c)
        piece = label if mag == 1 else f"{mag}*{label}"
        if not chunks:
            chunks.append(piece if c > 0 else f"-{piece}")
        else:
            chunks.append(f" {'+' if c > 0 else '-'} {piece}")
    return "".join(chunks) if chunks else "0"


def _build_report(
    model: str,
    columns: list[tuple[Fraction, ...]],
    target_dim: int,
    pairs: list[tuple[int, int]],
    section_labels: list[str],
    sections: tuple[Monomial, ...] | None,
    variables: VariableSet | None = None,
) -> MultiplicationReport:
    matrix = ExactMatrix.from_rows(
        [[col[r] for col in columns] for r in range(target_dim)], cols=len(columns)
    )
    rank = matrix.rank()
    kernel = tuple(tuple(v) for v in matrix.kernel_basis())
    pair_labels = tuple(
        f"{section_labels[i]}*{section_labels[j]}" for i, j in pairs
    )
    relations = tuple(_relation_text(v, pair_labels) for v in kernel)
    return MultiplicationReport(
        model=model,
        source_dim=len(pairs),
        target_dim=target_dim,
        matrix=matrix,
        rank=rank,
        kernel_dim=len(kernel),
        kernel_basis=kernel,
        pairs=tuple(pairs),
        section_labels=tuple(section_labels),
        pair_labels=pair_labels,
        kernel_relations=relations,
        sections=sections,
        variables=variables,
    )


def plane_mu(curve: Polynomial, singular: bool = False) -> MultiplicationReport:
    """Multiplication matrix for a degree-d plane curve, d >= 4.

    Canonical sections are all degree d-3 monomials; the target is the
    degree 2d-6 quotient by the curve equation (which is all of S_{2d-6}
    for d <= 5). The construction only uses that the curve is reduced
    with planar Gorenstein singularities, so declared-singular inputs are
    accepted and labeled.
    """
    if len(curve.variables) != 3:
        raise ValueError("plane model expects 3 variables")
    d = curve.homogeneous_degree()
    if d is None:
        raise ValueError("curve equation must be nonzero")
    if d < 4:
        raise ValueError("plane model expects degree >= 4")
    sections = graded_monomials(curve.variables, d - 3)
    target = quotient_context([curve], 2 * d - 6)
    pairs = _pairs(len(sections))
    columns = [
        target.reduce(
            Polynomial.from_monomial(curve.variables, sections[i] * sections[j])
        )
        for i, j in pairs
    ]
    labels = [m.text(curve.variables) for m in sections]
    model = f"{'singular-plane' if singular else 'plane'}(d={d})"
    return _build_report(
        model, columns, target.dim, pairs, labels, tuple(sections), curve.variables
    )


def ci_mu(eq1: Polynomial, eq2: Polynomial) -> MultiplicationReport:
    """Multiplication matrix for a complete intersection of type (a, b) in 3-space.

    Raises RegularSequenceError when the computed quotient dimensions
    disagree with the inclusion-exclusion count for a regular sequence;
    the check runs in the source degree a+b-4, the target degree
    2(a+b-4), and the first syzygy degree a+b (where a dependent pair
    such as (Q, Q*L) first becomes visible).
    """
    if eq1.variables != eq2.variables or len(eq1.variables) != 4:
        raise ValueError("complete-intersection model expects a shared set of 4 variables")
    da, db = eq1.homogeneous_degree(), eq2.homogeneous_degree()
    if da is None or db is None:
        raise ValueError("generators must be nonzero")
    first, second = (eq1, eq2) if da <= db else (eq2, eq1)
    a, b = min(da, db), max(da, db)
    if a + b < 5:
        raise ValueError("type (a,b) needs a+b >= 5 for an effective dualizing sheaf")
    gens = [first, second]
    pa = a + b - 4
    source = quotient_context(gens, pa)
    target = quotient_context(gens, 2 * pa)
    for k, computed in (
        (pa, source.dim),
        (2 * pa, target.dim),
        (a + b, quotient_context(gens, a + b).dim),
    ):
        expected = koszul_expected_dim(a, b, 4, k)
        if computed != expected:
            raise RegularSequenceError(
                f"quotient dimension {computed} in degree {k} differs from the "
                f"regular-sequence count {expected}; the pair of degrees ({a},{b}) "
                "is not a regular sequence there"
            )
    sections = list(source.basis)
    pairs = _pairs(len(sections))
    columns = [
        target.reduce(
            Polynomial.from_monomial(eq1.variables, sections[i] * sections[j])
        )
        for i, j in pairs
    ]
    labels = [m.text(eq1.variables) for m in sections]
    return _build_report(
        f"complete-intersection({a},{b})",
        columns,
        target.dim,
        pairs,
        labels,
        tuple(sections),
        eq1.variables,
    )


def hyperelliptic_mu(g: int) -> MultiplicationReport:
    """Multiplication matrix for a hyperelliptic curve of genus g >= 2.

    Sections are x^i dx/y for i = 0..g-1, products land at exponent i+j,
    so the matrix has a single 1 per column; its rank is 2g-1.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    pairs = _pairs(g)
    target_dim = 2 * g - 1
    columns = []
    for i, j in pairs:
        col = [Fraction(0)] * target_dim
        col[i + j] = Fraction(1)
        columns.append(tuple(col))
    labels = [f"s{i}" for i in range(g)]
    return _build_report(f"hyperelliptic(g={g})", columns, target_dim, pairs, labels, None)


def kernel_polynomial(report: MultiplicationReport, index: int) -> Polynomial:
    """Lift a kernel vector to the quadratic form sum c_(i,j) m_i m_j.

    Only meaningful for the plane and complete-intersection models, whose
    sections are monomials.
    """
    if report.sections is None or report.variables is None:
        raise ValueError("kernel lifting needs monomial sections")
    vector = report.kernel_basis[index]
    total = Polynomial.zero(report.variables)
    for coeff, (i, j) in zip(vector, report.pairs):
        if coeff:
            total = total + Polynomial.from_monomial(
                report.variables, report.sections[i] * report.sections[j], coeff
            )
    return total
