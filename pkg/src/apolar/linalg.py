"""Dense exact linear algebra over the rationals.

Everything in the toolkit that needs a rank, a kernel, or a solved linear
system comes through here.  Matrices are immutable, entries are
`fractions.Fraction`, and all elimination is deterministic: pivots are the
first nonzero entry scanning columns left to right and rows top to bottom,
so reduced forms, kernels, and solutions are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rational = Fraction

Vector = tuple[Fraction, ...]


def _as_fraction_row(row: Iterable) -> Vector:
    return tuple(Fraction(x) for x in row)


class RationalMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(_as_fraction_row(r) for r in entries)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    # ---- construction helpers -------------------------------------------

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RationalMatrix":
        cols = [_as_fraction_row(c) for c in columns]
        if not cols:
            return cls([])
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise ValueError("ragged columns")
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(height)])

    @classmethod
    def stacked(cls, blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        """Vertical concatenation, in block order."""
        blocks = list(blocks)
        if not blocks:
            return cls([])
        width = blocks[0].cols
        if any(b.cols != width for b in blocks):
            raise ValueError("column count mismatch in stack")
        return cls([row for b in blocks for row in b._data])

    # ---- access ----------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"

    def to_text(self) -> str:
        """Plain row-per-line rendering, entries space-separated."""
        return "\n".join(" ".join(str(x) for x in r) for r in self._data)

    # ---- arithmetic ------------------------------------------------------

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose()._data
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self._data]
        )

    def apply(self, vector: Sequence) -> Vector:
        """Matrix times column vector."""
        v = _as_fraction_row(vector)
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._data)

    def row_apply(self, vector: Sequence) -> Vector:
        """Row vector times matrix."""
        v = _as_fraction_row(vector)
        if len(v) != self.rows:
            raise ValueError("vector length does not match row count")
        return tuple(
            sum(v[i] * self._data[i][j] for i in range(self.rows)) for j in range(self.cols)
        )

    # ---- elimination -----------------------------------------------------

    def rank(self) -> int:
        """Exact rank, computed fraction-free over the integers.

        Rows are scaled to integers (rank is invariant under row scaling) and
        eliminated by cross-multiplication with a gcd normalization after
        each step to keep entries small.
        """
        rows = []
        for r in self._data:
            den = 1
            for x in r:
                d = x.denominator
                den = den // gcd(den, d) * d
            ints = [x.numerator * (den // x.denominator) for x in r]
            if any(ints):
                g = 0
                for v in ints:
                    g = gcd(g, v)
                rows.append([v // g for v in ints])
        rank = 0
        for col in range(self.cols):
            piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            lead = rows[rank][col]
            for i in range(rank + 1, len(rows)):
                f = rows[i][col]
                if f:
                    new = [lead * a - f * b for a, b in zip(rows[i], rows[rank])]
                    g = 0
                    for v in new:
                        g = gcd(g, v)
                    rows[i] = new if g <= 1 else [v // g for v in new]
            rank += 1
            if rank == len(rows):
                break
        return rank

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        rows = [list(r) for r in self._data]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            lead = rows[r][c]
            if lead != 1:
                rows[r] = [x / lead for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return RationalMatrix(rows), tuple(pivots)

    def kernel_basis(self) -> list[Vector]:
        """Deterministic basis of the right null space.

        One basis vector per free column of the reduced echelon form, with a
        1 in the free position and the negated reduced entries in the pivot
        positions.
        """
        red, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for i, c in enumerate(pivots):
                v[c] = -red[i, free]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence) -> Optional[Vector]:
        """Some x with M @ x = b, or None if b is outside the column space.

        Free variables are set to zero, so the solution is the unique one
        supported on the pivot columns of the reduced echelon form.
        """
        rhs = _as_fraction_row(b)
        if len(rhs) != self.rows:
            raise ValueError("right-hand side length does not match row count")
        aug = RationalMatrix(
            [list(self._data[i]) + [rhs[i]] for i in range(self.rows)]
            if self.rows
            else []
        )
        if self.rows == 0:
            return tuple(Fraction(0) for _ in range(self.cols))
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for i, c in enumerate(pivots):
            x[c] = red[i, self.cols]
        return tuple(x)

    def in_column_space(self, b: Sequence) -> bool:
        return self.solve(b) is not None


def echelon_with_combinations(
    vectors: Sequence[Sequence],
) -> list[tuple[Vector, Vector]]:
    """Forward echelon of `vectors`, tracking how each output row was formed.

    Returns pairs (row, combo) where combo has one coefficient per input
    vector and row = sum combo_k * vectors[k].  Zero rows are discarded.
    """
    vecs = [_as_fraction_row(v) for v in vectors]
    n = len(vecs)
    out: list[tuple[list[Fraction], list[Fraction]]] = []
    for k, v in enumerate(vecs):
        cur = list(v)
        combo = [Fraction(0)] * n
        combo[k] = Fraction(1)
        for row, rcombo in out:
            lead = next(i for i, x in enumerate(row) if x != 0)
            if cur[lead] != 0:
                f = cur[lead] / row[lead]
                cur = [a - f * b for a, b in zip(cur, row)]
                combo = [a - f * b for a, b in zip(combo, rcombo)]
        if any(x != 0 for x in cur):
            out.append((cur, combo))
    return [(tuple(r), tuple(c)) for r, c in out]


def reduce_against(
    echelon: Sequence[tuple[Vector, Vector]], vector: Sequence
) -> tuple[Vector, Vector]:
    """Normal form of `vector` against rows from echelon_with_combinations.

    Returns (residual, combo) with residual = vector - sum combo_k * inputs[k],
    where the inputs are the original vectors the echelon was built from.
    """
    cur = list(_as_fraction_row(vector))
    total: Optional[list[Fraction]] = None
    for row, rcombo in echelon:
        lead = next(i for i, x in enumerate(row) if x != 0)
        if cur[lead] != 0:
            f = cur[lead] / row[lead]
            cur = [a - f * b for a, b in zip(cur, row)]
            scaled = [f * c for c in rcombo]
            total = scaled if total is None else [a + b for a, b in zip(total, scaled)]
    if total is None:
        total = [Fraction(0)] * (len(echelon[0][1]) if echelon else 0)
    return tuple(cur), tuple(total)
