"""Multivariate homogeneous polynomials with exact rational coefficients.

The one global ordering convention: monomials are compared graded-lex,
ties broken by exponent vector with the first variable heaviest. Every
basis list in the package (and therefore every matrix) inherits its
ordering from `graded_monomials`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence


class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class VariableMismatchError(ValueError):
    """Raised when combining polynomials over different variable sets."""


@dataclass(frozen=True)
class VariableSet:
    """Ordered, fixed list of distinct variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("variable set must be nonempty")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for name in self.names:
            if not name or not name[0].isalpha() or not name.isidentifier():
                raise ValueError(f"invalid variable name {name!r}")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)


PLANE_VARS = VariableSet(("x", "y", "z"))
SPACE_VARS = VariableSet(("x0", "x1", "x2", "x3"))


@dataclass(frozen=True)
class Monomial:
    """Exponent vector; its length must match the ambient variable set."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise VariableMismatchError("monomials over different variable sets")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def text(self, variables: VariableSet) -> str:
        if all(e == 0 for e in self.exponents):
            return "1"
        parts = []
        for name, e in zip(variables.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


def grlex_key(m: Monomial) -> tuple:
    """Sort key: ascending degree, then descending lex with the first variable heaviest."""
    return (m.degree, tuple(-e for e in m.exponents))


def graded_monomials(variables: VariableSet, k: int) -> list[Monomial]:
    """All degree-k monomials in graded-lex order; count is C(k+n-1, n-1)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    n = len(variables)
    out: list[Monomial] = []

    def descend(prefix: list[int], remaining: int, slot: int):
        if slot == n - 1:
            out.append(Monomial(tuple(prefix + [remaining])))
            return
        for e in range(remaining, -1, -1):
            descend(prefix + [e], remaining - e, slot + 1)

    descend([], k, 0)
    return out


def monomial_count(nvars: int, k: int) -> int:
    """dim of the degree-k piece of a polynomial ring in `nvars` variables."""
    if k < 0:
        return 0
    return comb(k + nvars - 1, nvars - 1)


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial: map from monomials to nonzero rational coefficients."""

    variables: VariableSet
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            c = Fraction(c)
            if len(m.exponents) != len(self.variables):
                raise VariableMismatchError("monomial arity does not match variable set")
            if c:
                clean[m] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, variables: VariableSet) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def from_monomial(cls, variables: VariableSet, m: Monomial, coeff: int | Fraction = 1) -> "Polynomial":
        return cls(variables, {m: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms; None for the zero polynomial.

        Raises ValueError when the terms have mixed degrees.
        """
        degrees = {m.degree for m in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
        return degrees.pop()

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def _check_compatible(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise VariableMismatchError("polynomials over different variable sets")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.variables, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.variables, out)

    def scale(self, c: int | Fraction) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.variables, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, m: Monomial) -> "Polynomial":
        return Polynomial(self.variables, {mm * m: c for mm, c in self.terms.items()})

    def partial(self, var: int) -> "Polynomial":
        """Formal partial derivative with respect to the var-th variable."""
        if not 0 <= var < len(self.variables):
            raise ValueError("variable index out of range")
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m.exponents[var]
            if e == 0:
                continue
            lowered = list(m.exponents)
            lowered[var] = e - 1
            mm = Monomial(tuple(lowered))
            out[mm] = out.get(mm, Fraction(0)) + c * e
        return Polynomial(self.variables, out)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms with the leading (grlex-largest) monomial first."""
        return sorted(
            self.terms.items(),
            key=lambda t: (-t[0].degree, tuple(-e for e in t[0].exponents)),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = m.text(self.variables)
            if body == "1":
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if i == 0:
                chunks.append(piece if sign == "+" else f"-{piece}")
            else:
                chunks.append(f" {sign} {piece}")
        return "".join(chunks)


# --- parsing ------------------------------------------------------------

_OPS = "+-*^/"


def _tokenize(text: str, variables: VariableSet) -> list[tuple[str, object, int]]:
    """Tokens: ('op', char, pos) | ('int', value, pos) | ('var', index, pos).

    Runs of identifier characters are split greedily into declared
    variable names, so juxtaposed variables ("xy", "x0x1") work without
    an explicit '*'.
    """
    tokens: list[tuple[str, object, int]] = []
    by_length = sorted(variables.names, key=len, reverse=True)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            run = text[i:j]
            pos = i
            while run:
                name = next((n for n in by_length if run.startswith(n)), None)
                if name is None:
                    raise PolynomialSyntaxError(f"unknown variable {run!r}", pos)
                tokens.append(("var", variables.names.index(name), pos))
                pos += len(name)
                run = run[len(name):]
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    return tokens


def parse_polynomial(text: str, variables: VariableSet) -> Polynomial:
    """Parse polynomial text over the given variables.

    Grammar: terms joined by '+'/'-'; a term is an optional integer (or
    integer/integer) coefficient followed by variable powers `v^e`.  '*'
    may be omitted between variable factors but is required after a
    number, so "x0*x1", "xy" and "3*x^2" parse while "2x" does not.
    """
    tokens = _tokenize(text, variables)
    n = len(tokens)
    k = 0

    def peek():
        return tokens[k] if k < n else ("end", None, len(text))

    def take():
        nonlocal k
        tok = peek()
        k += 1
        return tok

    def parse_exponent(pos: int) -> int:
        kind, value, p = take()
        if kind == "op" and value == "-":
            raise PolynomialSyntaxError("negative exponent", p)
        if kind != "int":
            raise PolynomialSyntaxError("expected exponent after '^'", pos)
        return int(value)  # type: ignore[arg-type]

    def parse_term() -> Polynomial:
        coeff = Fraction(1)
        exponents = [0] * len(variables)
        saw_factor = False
        kind, value, pos = peek()
        if kind == "int":
            take()
            coeff = Fraction(int(value))  # type: ignore[arg-type]
            saw_factor = True
            kind, value, pos = peek()
            if kind == "op" and value == "/":
                take()
                dkind, dvalue, dpos = take()
                if dkind != "int" or int(dvalue) == 0:  # type: ignore[arg-type]
                    raise PolynomialSyntaxError("expected nonzero integer denominator", dpos)
                coeff /= int(dvalue)  # type: ignore[arg-type]
                kind, value, pos = peek()
            if kind == "var":
                raise PolynomialSyntaxError("missing '*' between number and variable", pos)
        while True:
            kind, value, pos = peek()
            if kind == "op" and value == "*":
                take()
                kind, value, pos = peek()
                if kind != "var":
                    raise PolynomialSyntaxError("expected variable after '*'", pos)
            if kind != "var":
                break
            take()
            var = int(value)  # type: ignore[arg-type]
            e = 1
            nkind, nvalue, npos = peek()
            if nkind == "op" and nvalue == "^":
                take()
                e = parse_exponent(npos)
            exponents[var] += e
            saw_factor = True
        if not saw_factor:
            raise PolynomialSyntaxError("expected a term", peek()[2])
        return Polynomial(variables, {Monomial(tuple(exponents)): coeff})

    result = Polynomial.zero(variables)
    sign = 1
    kind, value, pos = peek()
    if kind == "op" and value in "+-":
        take()
        sign = -1 if value == "-" else 1
    elif kind == "end":
        raise PolynomialSyntaxError("empty input", pos)
    while True:
        term = parse_term()
        result = result + (term if sign == 1 else -term)
        kind, value, pos = peek()
        if kind == "end":
            return result
        if kind == "op" and value in "+-":
            take()
            sign = -1 if value == "-" else 1
            continue
        raise PolynomialSyntaxError("expected '+' or '-'", pos)
