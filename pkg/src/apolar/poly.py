"""Exponents, dual polynomials, truncated jets, and the contraction action.

The dual side lives in P = Q[y_1..y_n]; the series side in R/M^(s+1) with
R = Q[[x_1..x_n]].  R acts on P by differentiation:

    x^a o y^b = b!/(b-a)! * y^(b-a)   if b >= a componentwise, else 0.

The monomial basis dual to {x^a} under this pairing is {y^a / a!}; the
toolkit calls coordinates with respect to it "dual coordinates".  Every
matrix anywhere in the package indexes its rows and columns by the single
monomial enumeration defined here: total degree ascending, and inside a
fixed degree the x_1-dominant monomial first (descending lexicographic
exponent tuples).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .linalg import RationalMatrix


class Exponent(tuple):
    """A monomial exponent: an n-tuple of naturals.

    Ordered by deg-lex with x_1 > ... > x_n: compare total degree first,
    then lexicographically (use `sort_key`; sorting by it reproduces the
    canonical enumeration of `monomials`).
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(a) for a in parts)
        if any(a < 0 for a in parts):
            raise ValueError(f"negative exponent in {parts}")
        return super().__new__(cls, parts)

    @property
    def degree(self) -> int:
        return sum(self)

    def sort_key(self) -> tuple:
        return (sum(self), tuple(-a for a in self))

    def __add__(self, other: "Exponent") -> "Exponent":
        return Exponent(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Exponent") -> "Exponent":
        return Exponent(a - b for a, b in zip(self, other))

    def dominates(self, other: "Exponent") -> bool:
        """True when every part of self is >= the matching part of other."""
        return all(a >= b for a, b in zip(self, other))

    def factorial(self) -> int:
        r = 1
        for a in self:
            r *= factorial(a)
        return r

    @classmethod
    def unit(cls, num_vars: int, j: int) -> "Exponent":
        """delta_j: the exponent of the single variable x_{j+1}."""
        return cls(int(k == j) for k in range(num_vars))


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponents of the given degree, canonically ordered.

    Descending lexicographic: (d,0,...,0) first, (0,...,0,d) last.  Length
    is binom(num_vars-1+degree, num_vars-1).
    """
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return ()
    if num_vars == 1:
        return (Exponent((degree,)),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - first):
            out.append(Exponent((first,) + tuple(rest)))
    return tuple(out)


def monomials_up_to(num_vars: int, max_degree: int) -> tuple[Exponent, ...]:
    """Exponents of degree 0..max_degree, degree ascending then canonical."""
    out: list[Exponent] = []
    for d in range(max_degree + 1):
        out.extend(monomials(num_vars, d))
    return tuple(out)


def degree_dimension(num_vars: int, degree: int) -> int:
    """dim of the space of forms of the given degree."""
    return comb(num_vars - 1 + degree, num_vars - 1) if degree >= 0 else 0


def _normalized_terms(num_vars: int, terms: Mapping) -> dict[Exponent, Fraction]:
    out: dict[Exponent, Fraction] = {}
    for e, c in terms.items():
        e = e if isinstance(e, Exponent) else Exponent(e)
        if len(e) != num_vars:
            raise ValueError(f"exponent {tuple(e)} has wrong arity, expected {num_vars}")
        c = Fraction(c)
        if c:
            out[e] = c
    return out


class DualPolynomial:
    """Element of P = Q[y_1..y_n], stored in the plain monomial basis."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping = ()):
        object.__setattr__(self, "num_vars", int(num_vars))
        object.__setattr__(self, "terms", _normalized_terms(num_vars, dict(terms)))

    def __setattr__(self, name, value):
        raise AttributeError("DualPolynomial is immutable")

    @classmethod
    def zero(cls, num_vars: int) -> "DualPolynomial":
        return cls(num_vars)

    @classmethod
    def monomial(cls, num_vars: int, exponent, coeff=1) -> "DualPolynomial":
        return cls(num_vars, {Exponent(exponent): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max((e.degree for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({e.degree for e in self.terms}) <= 1

    def homogeneous_component(self, j: int) -> "DualPolynomial":
        """The degree-j part; summing over all j reconstructs the polynomial."""
        return DualPolynomial(
            self.num_vars, {e: c for e, c in self.terms.items() if e.degree == j}
        )

    def top_component(self) -> "DualPolynomial":
        return self.homogeneous_component(self.degree)

    def coefficient(self, exponent) -> Fraction:
        return self.terms.get(Exponent(exponent), Fraction(0))

    def __add__(self, other: "DualPolynomial") -> "DualPolynomial":
        self._check_arity(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return DualPolynomial(self.num_vars, out)

    def __sub__(self, other: "DualPolynomial") -> "DualPolynomial":
        return self + (-other)

    def __neg__(self) -> "DualPolynomial":
        return DualPolynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def scaled(self, factor) -> "DualPolynomial":
        f = Fraction(factor)
        return DualPolynomial(self.num_vars, {e: f * c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DualPolynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .parsing import format_polynomial

        return f"DualPolynomial({self.num_vars}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self)

    def _check_arity(self, other) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable-count mismatch: {self.num_vars} vs {other.num_vars}"
            )


class JetPolynomial:
    """Element of R/M^(s+1): a polynomial truncated beyond degree s."""

    __slots__ = ("num_vars", "truncation_order", "terms")

    def __init__(self, num_vars: int, truncation_order: int, terms: Mapping = ()):
        object.__setattr__(self, "num_vars", int(num_vars))
        object.__setattr__(self, "truncation_order", int(truncation_order))
        kept = {
            e: c
            for e, c in _normalized_terms(num_vars, dict(terms)).items()
            if e.degree <= truncation_order
        }
        object.__setattr__(self, "terms", kept)

    def __setattr__(self, name, value):
        raise AttributeError("JetPolynomial is immutable")

    @classmethod
    def one(cls, num_vars: int, truncation_order: int) -> "JetPolynomial":
        return cls(num_vars, truncation_order, {Exponent((0,) * num_vars): 1})

    @classmethod
    def variable(cls, num_vars: int, truncation_order: int, j: int) -> "JetPolynomial":
        return cls(num_vars, truncation_order, {Exponent.unit(num_vars, j): 1})

    @classmethod
    def monomial(cls, num_vars, truncation_order, exponent, coeff=1) -> "JetPolynomial":
        return cls(num_vars, truncation_order, {Exponent(exponent): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((e.degree for e in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get(Exponent((0,) * self.num_vars), Fraction(0))

    def homogeneous_component(self, j: int) -> "JetPolynomial":
        return JetPolynomial(
            self.num_vars,
            self.truncation_order,
            {e: c for e, c in self.terms.items() if e.degree == j},
        )

    def __add__(self, other: "JetPolynomial") -> "JetPolynomial":
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return JetPolynomial(self.num_vars, self.truncation_order, out)

    def __sub__(self, other: "JetPolynomial") -> "JetPolynomial":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "JetPolynomial":
        f = Fraction(factor)
        return JetPolynomial(
            self.num_vars, self.truncation_order, {e: f * c for e, c in self.terms.items()}
        )

    def __mul__(self, other: "JetPolynomial") -> "JetPolynomial":
        """Product truncated beyond the truncation order."""
        self._check_compatible(other)
        s = self.truncation_order
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            if e1.degree > s:
                continue
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e.degree > s:
                    continue
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return JetPolynomial(self.num_vars, s, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, JetPolynomial)
            and self.num_vars == other.num_vars
            and self.truncation_order == other.truncation_order
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, self.truncation_order, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .parsing import format_polynomial

        return (
            f"JetPolynomial({self.num_vars}, {self.truncation_order}, "
            f"{format_polynomial(self)!r})"
        )

    def __str__(self) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self)

    def _check_compatible(self, other) -> None:
        if self.num_vars != other.num_vars or self.truncation_order != other.truncation_order:
            raise ValueError("jet arity or truncation order mismatch")


# ---------------------------------------------------------------------------
# contraction action
# ---------------------------------------------------------------------------


def contract_monomial(alpha: Exponent, g: DualPolynomial) -> DualPolynomial:
    """x^alpha o g, by the rule x^a o y^b = b!/(b-a)! y^(b-a)."""
    out: dict[Exponent, Fraction] = {}
    for beta, c in g.terms.items():
        if not beta.dominates(alpha):
            continue
        scale = 1
        for b, a in zip(beta, alpha):
            scale *= factorial(b) // factorial(b - a)
        rest = beta - alpha
        out[rest] = out.get(rest, Fraction(0)) + c * scale
    return DualPolynomial(g.num_vars, out)


def contract(f: JetPolynomial, g: DualPolynomial) -> DualPolynomial:
    """f o g = f(d/dy_1, ..., d/dy_n) applied to g."""
    if f.num_vars != g.num_vars:
        raise ValueError(
            f"variable-count mismatch: {f.num_vars} vs {g.num_vars}"
        )
    acc = DualPolynomial.zero(g.num_vars)
    for alpha, c in f.terms.items():
        acc = acc + contract_monomial(alpha, g).scaled(c)
    return acc


def pairing(f: JetPolynomial, g: DualPolynomial) -> Fraction:
    """<f, g>: the constant term of f o g.

    On monomials <x^a, y^b/b!> = 1 if a == b else 0, which is what makes
    {y^a/a!} the dual basis.
    """
    return contract(f, g).coefficient(Exponent((0,) * g.num_vars))


# ---------------------------------------------------------------------------
# dual-basis coordinates
# ---------------------------------------------------------------------------


def dual_coordinates(g: DualPolynomial, degree: int | None = None) -> tuple[Fraction, ...]:
    """Coordinates of a homogeneous g in the dual basis {y^a / a!}.

    Entry at exponent a is a! times the plain coefficient of y^a, indexed by
    the canonical enumeration of that degree.
    """
    if not g.is_homogeneous():
        raise ValueError("dual coordinates require a homogeneous polynomial")
    if degree is None:
        degree = g.degree
        if degree < 0:
            raise ValueError("zero polynomial needs an explicit degree")
    elif not g.is_zero() and g.degree != degree:
        raise ValueError(f"polynomial has degree {g.degree}, not {degree}")
    return tuple(e.factorial() * g.coefficient(e) for e in monomials(g.num_vars, degree))


def from_dual_coordinates(
    num_vars: int, degree: int, coordinates: Sequence
) -> DualPolynomial:
    """Inverse of dual_coordinates: rebuild g = sum b_a * y^a/a!."""
    exps = monomials(num_vars, degree)
    if len(coordinates) != len(exps):
        raise ValueError(
            f"expected {len(exps)} coordinates for degree {degree}, got {len(coordinates)}"
        )
    return DualPolynomial(
        num_vars,
        {e: Fraction(b) / e.factorial() for e, b in zip(exps, coordinates)},
    )


# ---------------------------------------------------------------------------
# the derived submodule and its graded slices
# ---------------------------------------------------------------------------


def _contraction_closure(generators: Sequence[DualPolynomial]):
    """All contractions x^gamma o g_r as coefficient rows.

    Rows are indexed over monomials_up_to(n, d_max) (degree ascending), which
    makes "degree <= j" a coordinate prefix.
    """
    n = generators[0].num_vars
    top = max(g.degree for g in generators)
    exps = monomials_up_to(n, max(top, 0))
    pos = {e: i for i, e in enumerate(exps)}
    rows: list[list[Fraction]] = []
    for g in generators:
        for gamma in monomials_up_to(n, max(g.degree, 0)):
            cg = contract_monomial(gamma, g)
            if cg.is_zero():
                continue
            row = [Fraction(0)] * len(exps)
            for e, c in cg.terms.items():
                row[pos[e]] = c
            rows.append(row)
    return exps, rows


def _filtered_dimensions(generators: Sequence[DualPolynomial]) -> list[int]:
    """dim of (span of all contractions) intersected with P_{<=j}, j = 0..top.

    The intersection with P_{<=j} is the kernel of projecting rows onto the
    coordinates of degree > j, so its dimension is dim(span) minus the rank
    of the column block of degree > j.
    """
    n = generators[0].num_vars
    top = max(g.degree for g in generators)
    exps, rows = _contraction_closure(generators)
    dim_span = RationalMatrix(rows).rank()
    out = []
    offset = 0
    for j in range(top + 1):
        offset += degree_dimension(n, j)
        if offset < len(exps):
            tail_rank = RationalMatrix([r[offset:] for r in rows]).rank()
        else:
            tail_rank = 0
        out.append(dim_span - tail_rank)
    return out


def slice_dimensions(generators: Sequence[DualPolynomial]) -> tuple[int, ...]:
    """Dimensions of the graded slices of the generated submodule.

    Entry j is the dimension of the degree-j slice: elements of the
    submodule of degree <= j, taken modulo those of degree < j.  For a
    nonzero Macaulay dual module this is the Hilbert function of the
    corresponding quotient algebra.
    """
    if not generators:
        raise ValueError("need at least one generator")
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("all generators are zero")
    if len({g.num_vars for g in gens}) > 1:
        raise ValueError("generators must share the variable count")
    filtered = _filtered_dimensions(gens)
    return tuple(b - a for a, b in zip([0] + filtered[:-1], filtered))


def derivative_span(
    generators: Sequence[DualPolynomial], target_degree: int
) -> list[DualPolynomial]:
    """Basis of the degree-j slice of the submodule generated under derivation.

    Each basis element is the degree-j leading part of a submodule element of
    degree <= j.  When every generator is homogeneous the slice is just the
    span of the order-(deg g - j) contractions of each g; in general lower
    degree tails force the filtered computation.
    """
    if not generators:
        return []
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    n = gens[0].num_vars
    if any(g.num_vars != n for g in gens):
        raise ValueError("generators must share the variable count")
    j = target_degree
    if j < 0 or j > max(g.degree for g in gens):
        return []
    exps_j = monomials(n, j)

    if all(g.is_homogeneous() for g in gens):
        rows = []
        for g in gens:
            if g.degree < j:
                continue
            for gamma in monomials(n, g.degree - j):
                cg = contract_monomial(gamma, g)
                if not cg.is_zero():
                    rows.append([cg.coefficient(e) for e in exps_j])
        if not rows:
            return []
        red, pivots = RationalMatrix(rows).rref()
        return [
            DualPolynomial(n, {e: red[i, k] for k, e in enumerate(exps_j)})
            for i in range(len(pivots))
        ]

    exps, rows = _contraction_closure(gens)
    if not rows:
        return []
    prefix = sum(degree_dimension(n, d) for d in range(j + 1))
    # order columns so degree > j comes first: echelon rows with a leading
    # entry inside the trailing (degree <= j) block span the filtered piece
    reordered = [r[prefix:] + r[:prefix] for r in rows]
    red, pivots = RationalMatrix(reordered).rref()
    cut = len(exps) - prefix
    out = []
    for i, c in enumerate(pivots):
        if c < cut:
            continue
        # trailing block holds degrees <= j, with degree j occupying its tail
        tail = red.row(i)[cut:]
        comp = {e: tail[k] for k, e in enumerate(exps[:prefix]) if e.degree == j and tail[k]}
        if comp:
            out.append(DualPolynomial(n, comp))
    if not out:
        return []
    red2, piv2 = RationalMatrix([[g.coefficient(e) for e in exps_j] for g in out]).rref()
    return [
        DualPolynomial(n, {e: red2[i, k] for k, e in enumerate(exps_j)})
        for i in range(len(piv2))
    ]
