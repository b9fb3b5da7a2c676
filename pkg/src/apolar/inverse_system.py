"""Annihilator ideals and the Artin algebra attached to dual generators.

A presentation is a finite set of dual polynomials G_1..G_t with linearly
independent leading forms.  Its algebra is A = R/I where I is everything in
R that contracts all generators to zero; A is a finite-dimensional local
ring and all of its invariants here (Hilbert function, socle type,
compressedness) come out of exact linear algebra on contraction matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .catalecticant import HilbertFunction, compressed_hilbert_function
from .errors import DependentLeadingForms
from .linalg import RationalMatrix
from .poly import (
    DualPolynomial,
    Exponent,
    JetPolynomial,
    contract_monomial,
    monomials,
    monomials_up_to,
    slice_dimensions,
)


class SocleType(tuple):
    """The vector (e_0, ..., e_s) of socle dimensions along the filtration."""

    __slots__ = ()

    def __new__(cls, values):
        values = tuple(int(v) for v in values)
        if any(v < 0 for v in values):
            raise ValueError("socle type entries must be naturals")
        if not values or values[-1] <= 0:
            raise ValueError("e_s must be positive")
        return super().__new__(cls, values)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    def type(self) -> int:
        """dim of the socle."""
        return sum(self)


@dataclass(frozen=True)
class AlgebraPresentation:
    """Dual generators of an Artin local algebra."""

    num_vars: int
    generators: tuple[DualPolynomial, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("need at least one generator")
        for g in gens:
            if g.num_vars != self.num_vars:
                raise ValueError("generator variable count does not match presentation")
            if g.is_zero():
                raise ValueError("zero generator")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_strings(cls, num_vars: int, texts: Sequence[str]) -> "AlgebraPresentation":
        from .parsing import parse_dual

        return cls(num_vars, tuple(parse_dual(t, num_vars) for t in texts))

    @property
    def socle_degree(self) -> int:
        return max(g.degree for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def leading_forms(self) -> tuple[DualPolynomial, ...]:
        return tuple(g.top_component() for g in self.generators)


def macaulay_validate(pres: AlgebraPresentation) -> None:
    """Check the leading forms are linearly independent.

    Raises DependentLeadingForms carrying a witness relation otherwise.
    Forms of different degrees cannot interact, so the check stacks plain
    coefficient vectors over every exponent that appears.
    """
    tops = pres.leading_forms()
    exps = sorted({e for g in tops for e in g.terms}, key=Exponent.sort_key)
    mat = RationalMatrix.from_columns([[g.coefficient(e) for e in exps] for g in tops])
    if mat.rank() < len(tops):
        raise DependentLeadingForms(mat.kernel_basis()[0])


def _contraction_kernel(
    pres: AlgebraPresentation, fmons: Sequence[Exponent], jet_order: int
) -> list[JetPolynomial]:
    """Kernel of f -> (f o G_1, ..., f o G_t) over the span of fmons."""
    n = pres.num_vars
    s = pres.socle_degree
    exps = monomials_up_to(n, s)
    pos = {e: i for i, e in enumerate(exps)}
    columns = []
    for gamma in fmons:
        col = []
        for g in pres.generators:
            block = [Fraction(0)] * len(exps)
            for e, c in contract_monomial(gamma, g).terms.items():
                block[pos[e]] = c
            col.extend(block)
        columns.append(col)
    kernel = RationalMatrix.from_columns(columns).kernel_basis()
    return [
        JetPolynomial(n, jet_order, {fmons[k]: v[k] for k in range(len(fmons))})
        for v in kernel
    ]


def annihilator_slice(pres: AlgebraPresentation, degree: int) -> list[JetPolynomial]:
    """Basis of the homogeneous degree-d piece of the annihilator ideal."""
    if not 0 <= degree <= pres.socle_degree + 1:
        raise ValueError(f"degree must lie in 0..{pres.socle_degree + 1}")
    if degree == 0:
        return []
    return _contraction_kernel(pres, monomials(pres.num_vars, degree), degree)


def annihilator_upto(pres: AlgebraPresentation, degree: int) -> list[JetPolynomial]:
    """Basis of the inhomogeneous annihilator slice {f of degree <= d, f(0) = 0}.

    At d = s+1 this pins down A = R/I as a vector space, since everything of
    degree above the socle degree annihilates.
    """
    if not 1 <= degree <= pres.socle_degree + 1:
        raise ValueError(f"degree must lie in 1..{pres.socle_degree + 1}")
    n = pres.num_vars
    fmons = [e for e in monomials_up_to(n, degree) if e.degree >= 1]
    return _contraction_kernel(pres, fmons, degree)


def hilbert_function(pres: AlgebraPresentation) -> HilbertFunction:
    """Hilbert function of A: dimensions of the graded slices of the dual module."""
    macaulay_validate(pres)
    return HilbertFunction(slice_dimensions(pres.generators))


def algebra_length(pres: AlgebraPresentation) -> int:
    """dim_K A, the length of the algebra."""
    return hilbert_function(pres).length()


class _QuotientAlgebra:
    """A = R/I with multiplication truncated past the socle degree.

    Basis: the monomials of degree <= s that are not pivots of the reduced
    annihilator; multiplication reduces back into that basis.  Everything of
    degree s+1 and beyond is already in I, so truncating products there is
    exact.
    """

    def __init__(self, pres: AlgebraPresentation):
        n, s = pres.num_vars, pres.socle_degree
        self.num_vars, self.socle_degree = n, s
        self.mons = monomials_up_to(n, s)
        self.pos = {e: i for i, e in enumerate(self.mons)}
        ann = annihilator_upto(pres, s) if s >= 1 else []
        rows = []
        for f in ann:
            row = [Fraction(0)] * len(self.mons)
            for e, c in f.terms.items():
                row[self.pos[e]] = c
            rows.append(row)
        if rows:
            red, pivots = RationalMatrix(rows).rref()
            self._reduced = red
            self._pivots = pivots
        else:
            self._reduced = RationalMatrix([])
            self._pivots = ()
        pivot_set = set(self._pivots)
        self.basis = [i for i in range(len(self.mons)) if i not in pivot_set]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        for i, c in enumerate(self._pivots):
            if vec[c]:
                f = vec[c]
                row = self._reduced.row(i)
                vec = [x - f * y for x, y in zip(vec, row)]
        return vec

    def class_of_monomial(self, e: Exponent) -> list[Fraction]:
        """Residue class of x^e, in coordinates over the quotient basis."""
        if e.degree > self.socle_degree:
            return [Fraction(0)] * self.dimension
        vec = [Fraction(0)] * len(self.mons)
        vec[self.pos[e]] = Fraction(1)
        vec = self._reduce(vec)
        return [vec[i] for i in self.basis]

    def multiply_by_variable(self, k: int, basis_index: int) -> list[Fraction]:
        """Class of x_k times the basis monomial at the given quotient index."""
        e = self.mons[self.basis[basis_index]] + Exponent.unit(self.num_vars, k)
        return self.class_of_monomial(e)


def _subspace_intersection_dim(u_rows: list, v_rows: list) -> int:
    if not u_rows or not v_rows:
        return 0
    du = RationalMatrix(u_rows).rank()
    dv = RationalMatrix(v_rows).rank()
    return du + dv - RationalMatrix(u_rows + v_rows).rank()


def socle_type(pres: AlgebraPresentation) -> SocleType:
    """Socle dimensions e_i along the powers of the maximal ideal.

    Works on A itself (not a dual-side shortcut), so inhomogeneous
    generators are handled: the socle is the kernel of simultaneous
    multiplication by the variables, intersected with the filtration by
    monomial residues of degree >= i.
    """
    macaulay_validate(pres)
    A = _QuotientAlgebra(pres)
    n, s, dim = A.num_vars, A.socle_degree, A.dimension

    rows = []
    cols = [
        [A.multiply_by_variable(k, b) for b in range(dim)] for k in range(n)
    ]
    for k in range(n):
        for r in range(dim):
            rows.append([cols[k][b][r] for b in range(dim)])
    socle = [list(v) for v in RationalMatrix(rows).kernel_basis()]

    def filtration_rows(i: int) -> list[list[Fraction]]:
        if i == 0:
            return [
                [Fraction(int(a == b)) for a in range(dim)] for b in range(dim)
            ]
        return [
            A.class_of_monomial(e)
            for e in A.mons
            if e.degree >= i
        ]

    dims = [
        _subspace_intersection_dim(socle, filtration_rows(i)) for i in range(s + 2)
    ]
    return SocleType(dims[i] - dims[i + 1] for i in range(s + 1))


def is_compressed(pres: AlgebraPresentation) -> bool:
    """Whether A has the maximal Hilbert function for its socle type."""
    E = socle_type(pres)
    hf = hilbert_function(pres)
    return hf == compressed_hilbert_function(pres.num_vars, pres.socle_degree, E)


def type_mismatch_warning(pres: AlgebraPresentation, E: SocleType) -> Optional[str]:
    """Note when dim Soc(A) differs from the number of dual generators.

    A minimal presentation has one generator per socle dimension; a mismatch
    usually means a generator is redundant.  Reported, never guessed around.
    """
    t = E.type()
    if t != len(pres.generators):
        return (
            f"socle dimension {t} differs from generator count "
            f"{len(pres.generators)}; the presentation may not be minimal"
        )
    return None
