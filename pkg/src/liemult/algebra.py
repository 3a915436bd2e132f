"""Lie algebras given by structure constants, with exact bracket evaluation.

An algebra is stored as a sparse table c[(i, j)][k] over 0-based indices with
i < j; antisymmetry is derived on lookup and never stored twice.  The Jacobi
identity is validated eagerly at construction, so everything downstream may
assume it.  Instances are immutable after construction (internal caches only
memoize pure results) and safe to share between workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    DuplicateBracket,
    FieldMismatch,
    IndexOutOfRange,
    JacobiViolation,
    NotAnIdeal,
    NotInSubspace,
    ResourceLimit,
)
from .fields import QQ
from .linalg import Matrix, RowSpan, inverse, rref_with_transform


class Subspace:
    """A subspace of the ambient coordinate space, held as a canonical
    reduced-echelon basis so equal subspaces compare equal."""

    def __init__(self, ambient: int, basis: Matrix):
        if basis.ncols != ambient:
            raise DimensionMismatch(f"basis has {basis.ncols} columns, ambient is {ambient}")
        reduced = basis.rref()
        self.ambient = ambient
        self.basis = reduced
        self.field = basis.field

    @classmethod
    def from_vectors(cls, field, ambient: int, vectors) -> "Subspace":
        return cls(ambient, Matrix(field, [list(v) for v in vectors], ncols=ambient))

    @classmethod
    def zero_space(cls, field, ambient: int) -> "Subspace":
        return cls(ambient, Matrix(field, [], ncols=ambient))

    @classmethod
    def full_space(cls, field, ambient: int) -> "Subspace":
        return cls(ambient, Matrix.identity(field, ambient))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def reduce(self, v) -> list:
        """Reduce a vector modulo the subspace (clear the pivot columns)."""
        w = list(v)
        for i, p in enumerate(self.basis.pivot_columns()):
            x = w[p]
            if x:
                row = self.basis.row(i)
                w = [a - x * b for a, b in zip(w, row)]
        return w

    def contains_vector(self, v) -> bool:
        return all(not e for e in self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains_vector(r) for r in other.basis.rows())

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces of different ambient spaces")
        return Subspace(self.ambient, self.basis.stack(other.basis))

    def dim_intersection(self, other: "Subspace") -> int:
        return self.dim + other.dim - self.sum(other).dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"


@dataclass(frozen=True)
class SeriesChain:
    """The lower central series γ₁ ⊇ γ₂ ⊇ … computed down to 0 or to
    stabilization (non-nilpotent input)."""

    terms: tuple[Subspace, ...]
    nilpotent: bool

    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    @property
    def nilpotency_class(self) -> int | None:
        if not self.nilpotent:
            return None
        return len(self.terms) - 1

    def gamma(self, i: int) -> Subspace:
        """γᵢ, 1-based; indices past the computed chain return the last term."""
        if i < 1:
            raise IndexOutOfRange(f"series index {i} < 1")
        if i <= len(self.terms):
            return self.terms[i - 1]
        return self.terms[-1]


@dataclass(frozen=True)
class QuotientPresentation:
    parent: "LieAlgebra"
    ideal: Subspace
    quotient: "LieAlgebra"
    projection: Matrix  # n x q, row i = image of the i-th parent basis vector
    section: Matrix     # q x n, row j = a lift of the j-th quotient basis vector


class LieAlgebra:
    """A finite-dimensional Lie algebra over an exact field."""

    def __init__(self, n: int, table, field=QQ, labels=None, validate: bool = True):
        if n < 0:
            raise DimensionMismatch("dimension must be nonnegative")
        self.n = n
        self.field = field
        clean: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), comps in table.items():
            if not (0 <= i < j < n):
                raise IndexOutOfRange(f"bracket key ({i + 1}, {j + 1}) out of range for n={n}")
            entry = {}
            for k, c in comps.items():
                if not 0 <= k < n:
                    raise IndexOutOfRange(f"component index {k + 1} out of range for n={n}")
                c = field.element(c)
                if c:
                    entry[k] = c
            if entry:
                clean[(i, j)] = entry
        self._table = clean
        if labels is None:
            labels = tuple(f"x{i + 1}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise DimensionMismatch("label count differs from dimension")
        self.labels = labels
        self._series: SeriesChain | None = None
        self._center: Subspace | None = None
        self._multiplier_dim: int | None = None
        if validate:
            self._validate_jacobi()

    # -- bracket evaluation -------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, object]:
        """[e_i, e_j] as a sparse dict, antisymmetry derived for i > j."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def zero_vector(self) -> list:
        return [self.field.zero] * self.n

    def basis_vector(self, i: int) -> list:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"basis index {i} out of range")
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def vector(self, coords) -> list:
        v = [self.field.element(c) for c in coords]
        if len(v) != self.n:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.n}")
        return v

    def bracket(self, x, y) -> list:
        """Bilinear extension of the structure-constant table."""
        if len(x) != self.n or len(y) != self.n:
            raise DimensionMismatch("vector length differs from algebra dimension")
        out = self.zero_vector()
        for (i, j), comps in self._table.items():
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff:
                for k, c in comps.items():
                    out[k] = out[k] + coeff * c
        return out

    def bracket_sparse(self, x: dict[int, object], y: dict[int, object]) -> dict[int, object]:
        """Bracket on sparse {index: coeff} vectors; cheap for short words."""
        out: dict[int, object] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                if a < b:
                    comps = self._table.get((a, b))
                    sign = ca * cb
                elif a > b:
                    comps = self._table.get((b, a))
                    sign = -(ca * cb)
                else:
                    continue
                if comps:
                    for k, c in comps.items():
                        v = out.get(k)
                        term = sign * c
                        out[k] = term if v is None else v + term
        return {k: v for k, v in out.items() if v}

    def jacobi_defect(self, x, y, z) -> list:
        a = self.bracket(self.bracket(x, y), z)
        b = self.bracket(self.bracket(y, z), x)
        c = self.bracket(self.bracket(z, x), y)
        return [p + q + r for p, q, r in zip(a, b, c)]

    def _jacobi_defect_basis(self, i: int, j: int, k: int) -> dict[int, object]:
        out: dict[int, object] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, coeff in self.bracket_basis(a, b).items():
                for t, c2 in self.bracket_basis(m, c).items():
                    v = out.get(t)
                    out[t] = coeff * c2 if v is None else v + coeff * c2
        return {t: v for t, v in out.items() if v}

    def _validate_jacobi(self):
        # A triple can only have a defect if one of its pairs is a table key,
        # so iterate table keys against third indices instead of all triples.
        seen = set()
        for (i, j) in self._table:
            for k in range(self.n):
                if k == i or k == j:
                    continue
                triple = tuple(sorted((i, j, k)))
                if triple in seen:
                    continue
                seen.add(triple)
                defect = self._jacobi_defect_basis(*triple)
                if defect:
                    dense = self.zero_vector()
                    for t, v in defect.items():
                        dense[t] = v
                    raise JacobiViolation(tuple(t + 1 for t in triple), dense)

    # -- structure accessors ------------------------------------------------

    def structure_constants(self) -> tuple[tuple[int, int, int, object], ...]:
        """Sorted sparse table as 1-based (i, j, k, coeff) tuples."""
        items = []
        for (i, j), comps in self._table.items():
            for k, c in comps.items():
                items.append((i + 1, j + 1, k + 1, c))
        return tuple(sorted(items, key=lambda t: t[:3]))

    def is_abelian(self) -> bool:
        return not self._table

    # -- series, center, predicates ------------------------------------------

    def product_subspace(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of all brackets of basis pairs of the two subspaces."""
        for s in (a, b):
            if s.ambient != self.n:
                raise DimensionMismatch("subspace of a different ambient space")
        span = RowSpan(self.field, self.n)
        for u in a.basis.rows():
            for v in b.basis.rows():
                w = self.bracket(u, v)
                if any(w):
                    span.add(w)
        return Subspace(self.n, span.matrix())

    def lower_central_series(self) -> SeriesChain:
        if self._series is None:
            full = Subspace.full_space(self.field, self.n)
            terms = [full]
            prev = full
            nilpotent = True
            while prev.dim > 0:
                nxt = self.product_subspace(prev, full)
                if nxt.dim == prev.dim:
                    nilpotent = False
                    break
                terms.append(nxt)
                prev = nxt
            self._series = SeriesChain(tuple(terms), nilpotent)
        return self._series

    def is_nilpotent(self) -> bool:
        return self.lower_central_series().nilpotent

    def nilpotency_class(self) -> int | None:
        return self.lower_central_series().nilpotency_class

    def derived_subalgebra(self) -> Subspace:
        return self.lower_central_series().gamma(2)

    def center(self) -> Subspace:
        """Exact kernel of the stacked adjoint-action matrix."""
        if self._center is None:
            zero = self.field.zero
            rows = []
            for j in range(self.n):
                block = [[zero] * self.n for _ in range(self.n)]
                for i in range(self.n):
                    for k, c in self.bracket_basis(i, j).items():
                        block[k][i] = c
                rows.extend(block)
            stacked = Matrix(self.field, rows, ncols=self.n)
            self._center = Subspace(self.n, stacked.kernel_basis())
        return self._center

    def is_maximal_class(self) -> tuple[bool, tuple[int, ...]]:
        """True iff the nilpotency class equals n - 1.  Needs n >= 3."""
        if self.n < 3:
            raise DimensionTooSmall(f"maximal class is only defined for n >= 3, got n={self.n}")
        series = self.lower_central_series()
        ok = series.nilpotent and series.nilpotency_class == self.n - 1
        return ok, series.dims()

    # -- quotients and ideals -------------------------------------------------

    def quotient(self, ideal: Subspace) -> QuotientPresentation:
        """Quotient by an ideal, with projection and section matrices."""
        if ideal.ambient != self.n:
            raise DimensionMismatch("ideal of a different ambient space")
        if ideal.field != self.field:
            raise FieldMismatch("ideal over a different field")
        for u in ideal.basis.rows():
            for j in range(self.n):
                w = self.bracket(u, self.basis_vector(j))
                if not ideal.contains_vector(w):
                    raise NotAnIdeal(
                        f"bracket of an ideal vector with {self.labels[j]} escapes the subspace",
                        witness=(u, j, w),
                    )
        pivot_set = set(ideal.basis.pivot_columns())
        free = [c for c in range(self.n) if c not in pivot_set]
        q = len(free)
        proj_rows = []
        for i in range(self.n):
            w = ideal.reduce(self.basis_vector(i))
            proj_rows.append([w[f] for f in free])
        projection = Matrix(self.field, proj_rows, ncols=q)
        section_rows = [self.basis_vector(f) for f in free]
        section = Matrix(self.field, section_rows, ncols=self.n)
        table: dict[tuple[int, int], dict[int, object]] = {}
        for a in range(q):
            for b in range(a + 1, q):
                w = ideal.reduce(self.bracket(self.basis_vector(free[a]), self.basis_vector(free[b])))
                comps = {k: w[f] for k, f in enumerate(free) if w[f]}
                if comps:
                    table[(a, b)] = comps
        quotient = LieAlgebra(
            q, table, field=self.field, labels=[self.labels[f] for f in free]
        )
        return QuotientPresentation(self, ideal, quotient, projection, section)

    def central_ideals(self) -> list[Subspace]:
        """Subspaces spanned by subsets of the canonical center basis.

        Every subspace of the center is a central ideal; the coordinate
        subsets are the deterministic test family, ordered by size then
        lexicographically.  The family has 2^dim Z(L) members, so centers
        beyond 16 dimensions are refused.
        """
        rows = self.center().basis.rows()
        if len(rows) > 16:
            raise ResourceLimit(
                f"the center is {len(rows)}-dimensional; enumerating "
                f"2^{len(rows)} central ideals is refused"
            )
        out = [Subspace.zero_space(self.field, self.n)]
        for size in range(1, len(rows) + 1):
            for combo in itertools.combinations(range(len(rows)), size):
                out.append(Subspace.from_vectors(self.field, self.n, [rows[i] for i in combo]))
        return out

    # -- basis changes ---------------------------------------------------------

    def change_basis(self, p: Matrix) -> "LieAlgebra":
        """Rewrite the table in the basis f_i = sum_j p[i][j] e_j."""
        if p.shape != (self.n, self.n):
            raise DimensionMismatch("change of basis must be square of matching size")
        if p.field != self.field:
            raise FieldMismatch("change of basis over a different field")
        p_inv = inverse(p)
        table: dict[tuple[int, int], dict[int, object]] = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                w = self.bracket(p.row(i), p.row(j))
                coords = p_inv.mul_row(w) if any(w) else w
                comps = {k: c for k, c in enumerate(coords) if c}
                if comps:
                    table[(i, j)] = comps
        return LieAlgebra(self.n, table, field=self.field)

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.n == other.n
            and self.field == other.field
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.n, self.field, self.structure_constants()))

    def __repr__(self):
        return f"LieAlgebra(n={self.n}, field={self.field})"


def build(n: int, brackets, field=QQ, labels=None) -> LieAlgebra:
    """Construct a validated algebra from 1-based sparse bracket entries.

    ``brackets`` is an iterable of (i, j, k, coeff) with 1 <= i < j <= n and
    1 <= k <= n, meaning [e_i, e_j] has the given coefficient on e_k.  A
    Jacobi failure is reported with the violating triple.
    """
    table: dict[tuple[int, int], dict[int, object]] = {}
    seen = set()
    for i, j, k, coeff in brackets:
        if not (1 <= i < j <= n):
            raise IndexOutOfRange(f"bracket indices ({i}, {j}) must satisfy 1 <= i < j <= {n}")
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"component index {k} must lie in [1, {n}]")
        if (i, j, k) in seen:
            raise DuplicateBracket(f"duplicate bracket entry ({i}, {j}, {k})")
        seen.add((i, j, k))
        c = field.element(coeff)
        if not c:
            continue
        table.setdefault((i - 1, j - 1), {})[k - 1] = c
    return LieAlgebra(n, table, field=field, labels=labels)


class QuotientMap:
    """Coordinates in U/W for nested subspaces W ⊆ U.

    The basis of U/W is the image of those canonical rows of U whose pivot
    column is not a pivot of W; the coordinate map is precomputed as a single
    matrix so repeated calls cost one matrix-vector product.
    """

    def __init__(self, sup: Subspace, sub: Subspace):
        if sup.ambient != sub.ambient:
            raise DimensionMismatch("nested subspaces must share the ambient space")
        if not sup.contains_subspace(sub):
            raise NotInSubspace("the second subspace is not contained in the first")
        self.sup = sup
        self.sub = sub
        sub_pivots = set(sub.basis.pivot_columns())
        complement = [
            sup.basis.row(i)
            for i, p in enumerate(sup.basis.pivot_columns())
            if p not in sub_pivots
        ]
        adapted = sub.basis.rows() + complement
        self.dim = len(complement)
        self._k = len(adapted)
        self._complement = complement
        m = Matrix(sup.field, adapted, ncols=sup.ambient)
        _, transform = rref_with_transform(m.transpose())
        self._transform = transform

    def coords(self, v) -> list:
        """Coordinates of v (which must lie in U) in the U/W basis."""
        w = self._transform.mul_column(v)
        if any(w[self._k:]):
            raise NotInSubspace("vector lies outside the larger subspace")
        return w[self.sub.dim: self._k]

    def coords_sparse(self, v: dict[int, object]) -> list:
        """coords() for a sparse {index: coeff} vector."""
        dense = [self.sup.field.zero] * self.sup.ambient
        for j, x in v.items():
            dense[j] = x
        return self.coords(dense)

    def lift(self, coords) -> list:
        out = [self.sup.field.zero] * self.sup.ambient
        for c, row in zip(coords, self._complement):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return out
