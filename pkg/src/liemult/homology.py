"""Degree-2 homology of the exterior complex attached to a Lie algebra.

For a finite-dimensional nilpotent algebra over a field this homology is the
Schur multiplier, which is what ``multiplier_dim`` returns.  Only degrees up
to 3 of the complex are built: the boundary rows are

    d2(e_i ∧ e_j)        = [e_i, e_j]
    d3(e_i ∧ e_j ∧ e_k)  = [e_i,e_j] ∧ e_k  -  [e_i,e_k] ∧ e_j  +  [e_j,e_k] ∧ e_i

with [x, y] ∧ z expanded bilinearly into the degree-2 basis (a ∧ a = 0,
a ∧ b = -b ∧ a when a > b).  Ranks are convention independent; the sign
convention above is normative for golden outputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .algebra import LieAlgebra
from .errors import IndexOutOfRange, NonNilpotent, ResourceLimit
from .linalg import Matrix

MAX_HOMOLOGY_DIM = 64


class ExteriorBasis:
    """Bijection between sorted k-subsets of {0..n-1} and flat positions,
    in lexicographic order."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self._subsets = tuple(itertools.combinations(range(n), k))
        self._index = {s: pos for pos, s in enumerate(self._subsets)}

    @property
    def size(self) -> int:
        return len(self._subsets)

    def index_of(self, subset) -> int:
        key = tuple(subset)
        if key not in self._index:
            raise IndexOutOfRange(f"{key} is not a sorted {self.k}-subset of range({self.n})")
        return self._index[key]

    def subset_at(self, pos: int) -> tuple[int, ...]:
        if not 0 <= pos < len(self._subsets):
            raise IndexOutOfRange(f"position {pos} out of range")
        return self._subsets[pos]


@dataclass(frozen=True)
class BoundaryPair:
    """The two boundary matrices; rows are images of basis wedges."""

    d2: Matrix  # C(n,2) rows -> n cols
    d3: Matrix  # C(n,3) rows -> C(n,2) cols
    ext2: ExteriorBasis
    ext3: ExteriorBasis


def _wedge_into(row, ext2, vec: dict[int, object], partner: int, sign: int):
    """Accumulate (vec ∧ e_partner), vec sparse, into a degree-2 row."""
    for m, c in vec.items():
        if m == partner:
            continue
        if m < partner:
            pos = ext2.index_of((m, partner))
            row[pos] = row[pos] + c if sign > 0 else row[pos] - c
        else:
            pos = ext2.index_of((partner, m))
            row[pos] = row[pos] - c if sign > 0 else row[pos] + c


def boundary_matrices(L: LieAlgebra) -> BoundaryPair:
    n = L.n
    if n > MAX_HOMOLOGY_DIM:
        raise ResourceLimit(
            f"dimension {n} exceeds the homology guard ({MAX_HOMOLOGY_DIM}); "
            "the degree-3 exterior power would be too large"
        )
    field = L.field
    zero = field.zero
    ext2 = ExteriorBasis(n, 2)
    ext3 = ExteriorBasis(n, 3)

    d2_rows = []
    for i, j in itertools.combinations(range(n), 2):
        row = [zero] * n
        for k, c in L.bracket_basis(i, j).items():
            row[k] = c
        d2_rows.append(row)

    d3_rows = []
    for i, j, k in itertools.combinations(range(n), 3):
        row = [zero] * ext2.size
        _wedge_into(row, ext2, L.bracket_basis(i, j), k, +1)
        _wedge_into(row, ext2, L.bracket_basis(i, k), j, -1)
        _wedge_into(row, ext2, L.bracket_basis(j, k), i, +1)
        d3_rows.append(row)

    return BoundaryPair(
        d2=Matrix(field, d2_rows, ncols=n),
        d3=Matrix(field, d3_rows, ncols=ext2.size),
        ext2=ext2,
        ext3=ext3,
    )


def multiplier_dim(L: LieAlgebra) -> int:
    """dim of the Schur multiplier of a nilpotent algebra, exactly.

    Computed as C(n,2) - rank(d2) - rank(d3).
    """
    if L._multiplier_dim is not None:
        return L._multiplier_dim
    if L.n > MAX_HOMOLOGY_DIM:
        raise ResourceLimit(
            f"dimension {L.n} exceeds the homology guard ({MAX_HOMOLOGY_DIM})"
        )
    if not L.is_nilpotent():
        raise NonNilpotent("the multiplier computation requires a nilpotent algebra")
    pair = boundary_matrices(L)
    value = comb(L.n, 2) - pair.d2.rank() - pair.d3.rank()
    L._multiplier_dim = value
    return value
