"""Exact dense linear algebra over Q and GF(p).

Rank, canonical reduced echelon form, kernel bases and row-space sums, all
exact.  Over Q the forward elimination is fraction-free (Bareiss): rows are
scaled to integers and the two-step determinant identity keeps every
intermediate entry an exact integer minor, avoiding rational blow-up.  The
final normalization to leading-one reduced form is done with Fractions on the
already-triangularized rows.  Over GF(p) classical elimination with modular
inverses is used directly.

Echelon form here always means the canonical reduced form: leading entries 1,
zeros above and below every pivot, zero rows dropped.  That makes every basis
produced by this module byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, FieldMismatch, SingularMatrix
from .fields import QQ, RationalField


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _row_to_integers(row) -> list[int]:
    """Scale a row of Fractions by the lcm of denominators (row space kept)."""
    scale = 1
    for e in row:
        scale = _lcm(scale, e.denominator)
    return [int(e * scale) for e in row]


def _bareiss_forward(rows: list[list[int]]) -> tuple[int, list[int]]:
    """Fraction-free forward elimination in place.

    Returns (rank, pivot column list).  Pivot selection is first-nonzero, so
    the result is deterministic.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            t = rows[i][c]
            if t == 0 and piv == prev:
                continue  # scaling factor is 1, row unchanged
            ri, rr = rows[i], rows[r]
            rows[i] = [(piv * ri[j] - t * rr[j]) // prev for j in range(ncols)]
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots


def _normalize_echelon(rows: list[list], pivots: list[int], one) -> list[list]:
    """Jordan-normalize echelon rows: leading 1s, zeros above pivots."""
    rank = len(pivots)
    out = [list(rows[i]) for i in range(rank)]
    for i in range(rank - 1, -1, -1):
        c = pivots[i]
        piv = out[i][c]
        if piv != one:
            out[i] = [e / piv for e in out[i]]
        for k in range(i):
            f = out[k][c]
            if f:
                rk, ri = out[k], out[i]
                out[k] = [a - f * b for a, b in zip(rk, ri)]
    return out


def _rref_rational(rows) -> tuple[list[list[Fraction]], list[int]]:
    work = [_row_to_integers(r) for r in rows]
    if not work:
        return [], []
    _, pivots = _bareiss_forward(work)
    frac_rows = [[Fraction(e) for e in row] for row in work]
    return _normalize_echelon(frac_rows, pivots, Fraction(1)), pivots


def _rref_classical(rows, field, pivot_limit=None) -> tuple[list[list], list[int]]:
    """Division-based elimination; used for prime fields and transforms.

    ``pivot_limit`` restricts pivot search to the first columns (augmented
    elimination); row operations still run over the full width.
    """
    work = [list(r) for r in rows]
    m = len(work)
    ncols = len(work[0]) if m else 0
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        pr = next((i for i in range(r, m) if work[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            work[r], work[pr] = work[pr], work[r]
        piv = work[r][c]
        if piv != field.one:
            work[r] = [e / piv for e in work[r]]
        for i in range(m):
            if i == r:
                continue
            f = work[i][c]
            if f:
                wi, wr = work[i], work[r]
                work[i] = [a - f * b for a, b in zip(wi, wr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    ordered = [work[i] for i in range(len(pivots))]
    tail = [work[i] for i in range(len(pivots), m)]
    return ordered + tail, pivots


class Matrix:
    """Immutable dense matrix over one exact field.

    Rows are stored as lists of field scalars; nothing mutates a constructed
    instance, so sharing across threads is safe.
    """

    def __init__(self, field, rows: Sequence[Sequence], ncols: int | None = None):
        rows = [list(map(field.element, r)) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionMismatch(f"expected {ncols} columns, rows have {width}")
        else:
            width = 0 if ncols is None else ncols
        self.field = field
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = width
        self._rref: tuple[Matrix, tuple[int, ...]] | None = None

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> list:
        return list(self._rows[i])

    def rows(self) -> list[list]:
        return [list(r) for r in self._rows]

    def entry(self, i: int, j: int):
        return self._rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def stack(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        return Matrix(self.field, self._rows + other._rows, ncols=self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch("matrix product across different fields")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        zero = self.field.zero
        bt = other.transpose()._rows
        out = []
        for r in self._rows:
            out.append([sum((a * b for a, b in zip(r, col) if a and b), zero) for col in bt])
        return Matrix(self.field, out, ncols=other.ncols)

    def mul_column(self, v: Sequence) -> list:
        """Matrix times column vector (skips zero vector entries)."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} vs {self.ncols} columns")
        zero = self.field.zero
        nz = [(j, x) for j, x in enumerate(v) if x]
        return [sum((r[j] * x for j, x in nz), zero) for r in self._rows]

    def mul_row(self, v: Sequence) -> list:
        """Row vector times matrix."""
        if len(v) != self.nrows:
            raise DimensionMismatch(f"vector of length {len(v)} vs {self.nrows} rows")
        zero = self.field.zero
        out = [zero] * self.ncols
        for x, r in zip(v, self._rows):
            if x:
                out = [acc + x * e for acc, e in zip(out, r)]
        return out

    def is_zero(self) -> bool:
        return all(not e for r in self._rows for e in r)

    def rref(self) -> "Matrix":
        """Canonical reduced row-echelon form (zero rows dropped)."""
        return self._rref_with_pivots()[0]

    def pivot_columns(self) -> tuple[int, ...]:
        return self._rref_with_pivots()[1]

    def _rref_with_pivots(self) -> tuple["Matrix", tuple[int, ...]]:
        if self._rref is None:
            if isinstance(self.field, RationalField):
                rows, pivots = _rref_rational(self._rows)
            else:
                rows, pivots = _rref_classical(self._rows, self.field)
                rows = rows[: len(pivots)]
            reduced = Matrix(self.field, rows, ncols=self.ncols)
            reduced._rref = (reduced, tuple(pivots))
            self._rref = (reduced, tuple(pivots))
        return self._rref

    def rank(self) -> int:
        return len(self.pivot_columns())

    def kernel_basis(self) -> "Matrix":
        """Canonical echelonized basis of the right null space, as rows."""
        reduced, pivots = self._rref_with_pivots()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        zero, one = self.field.zero, self.field.one
        rows = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for i, p in enumerate(pivots):
                v[p] = -reduced.entry(i, f)
            rows.append(v)
        return Matrix(self.field, rows, ncols=self.ncols).rref()

    def _check_compatible(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"{self.ncols} vs {other.ncols} columns")

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self._rows), self.ncols))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"


def row_space_union(a: Matrix, b: Matrix) -> Matrix:
    """Canonical basis of the sum of two row spaces."""
    a._check_compatible(b)
    return a.stack(b).rref()


def rref_with_transform(m: Matrix) -> tuple[Matrix, Matrix]:
    """Return (R, T) with T invertible and T @ m = R in reduced form.

    Runs division-based elimination on [m | I]; intended for the small
    coordinate-change matrices, not the large boundary matrices.
    """
    field = m.field
    n = m.nrows
    zero, one = field.zero, field.one
    aug = [
        list(m._rows[i]) + [one if j == i else zero for j in range(n)]
        for i in range(n)
    ]
    rows, pivots = _rref_classical(aug, field, pivot_limit=m.ncols)
    left = Matrix(field, [r[: m.ncols] for r in rows], ncols=m.ncols)
    right = Matrix(field, [r[m.ncols:] for r in rows], ncols=n)
    return left, right


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch("only square matrices can be inverted")
    reduced, transform = rref_with_transform(m)
    if reduced != Matrix.identity(m.field, m.nrows):
        raise SingularMatrix("matrix is singular")
    return transform


class RowSpan:
    """Incrementally maintained row space in fully reduced form.

    ``add`` reduces the candidate against the current pivots, normalizes and
    back-substitutes, so ``matrix()`` is always the canonical reduced basis.
    Used where rows arrive one at a time (series, image enumeration).
    """

    def __init__(self, field, ncols: int):
        self.field = field
        self.ncols = ncols
        self._pivots: dict[int, list] = {}

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; True if the span grew."""
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector length {len(vec)} vs {self.ncols} columns")
        v = list(vec)
        for c in range(self.ncols):
            x = v[c]
            if not x:
                continue
            piv = self._pivots.get(c)
            if piv is None:
                v = [e / x for e in v]
                for row in self._pivots.values():
                    y = row[c]
                    if y:
                        row[:] = [a - y * b for a, b in zip(row, v)]
                self._pivots[c] = v
                return True
            v = [a - x * b for a, b in zip(v, piv)]
        return False

    def contains(self, vec: Sequence) -> bool:
        v = list(vec)
        for c in range(self.ncols):
            x = v[c]
            if not x:
                continue
            piv = self._pivots.get(c)
            if piv is None:
                return False
            v = [a - x * b for a, b in zip(v, piv)]
        return True

    def matrix(self) -> Matrix:
        rows = [list(self._pivots[c]) for c in sorted(self._pivots)]
        return Matrix(self.field, rows, ncols=self.ncols)
