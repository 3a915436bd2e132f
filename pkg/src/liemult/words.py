"""Nested bracket words, the (i+1)-term vanishing identity, and the
multilinear maps into γᵢ/γᵢ₊₁ ⊗ L/γ₂ built from its term schedule.

The schedule is uniform: for 1 <= k <= i+1, term k is

    [[ R_k , L_k ], x_{i+2-k}]     (1-based argument positions)

where R_k = [x_{i+3-k}, ..., x_{i+1}] is right-normed, L_k = [x_1, ...,
x_{i+1-k}] is left-normed, and an empty factor means the inner bracket
degenerates to the other factor (k = 1 has no right word, k = i+1 no left
word).  Summing the terms gives the exact zero vector in every Lie algebra;
that contract is what the randomized defect tests enforce, so any wrong
schedule fails immediately.

The tensor-valued map replaces each outermost bracket [u_k, x_t] by
ū_k ⊗ x̄_t, all signs +, with ū_k taken in γᵢ/γᵢ₊₁ and x̄_t in L/γ₂.
Every inner word multiplies i arguments, so it always lies in γᵢ and the
left projection is well defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import LieAlgebra, QuotientMap, Subspace
from .errors import (
    CharTwoField,
    DimensionMismatch,
    EmptyWord,
    GeneratorSearchFailed,
    IndexOutOfRange,
    NonNilpotent,
    NotMaximalClass,
    TupleSpaceTooLarge,
    WordTooShort,
)
from .linalg import RowSpan

TUPLE_ENUMERATION_CAP = 10**6


def normed_bracket(L: LieAlgebra, xs, orientation: str = "left") -> list:
    """Evaluate a nested bracket word.

    left:  [...[[x1,x2],x3],...,xm]       right: [x1,[...[x_{m-1},xm]...]]
    A singleton word evaluates to its argument.
    """
    xs = list(xs)
    if not xs:
        raise EmptyWord("bracket words must have at least one argument")
    if orientation == "left":
        acc = xs[0]
        for x in xs[1:]:
            acc = L.bracket(acc, x)
        return acc
    if orientation == "right":
        acc = xs[-1]
        for x in reversed(xs[:-1]):
            acc = L.bracket(x, acc)
        return acc
    raise IndexOutOfRange(f"orientation must be 'left' or 'right', got {orientation!r}")


def term_schedule(i: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """The (right word, left word, outer argument) index triples, 0-based.

    Term k (1 <= k <= i+1) uses right word positions i+2-k .. i, left word
    positions 0 .. i-k and outer position i+1-k.
    """
    out = []
    for k in range(1, i + 2):
        right = tuple(range(i + 2 - k, i + 1))
        left = tuple(range(0, i + 1 - k))
        outer = i + 1 - k
        out.append((right, left, outer))
    return out


def _inner_word(L: LieAlgebra, xs, right, left) -> list:
    if not right:
        return normed_bracket(L, [xs[t] for t in left], "left")
    if not left:
        return normed_bracket(L, [xs[t] for t in right], "right")
    r = normed_bracket(L, [xs[t] for t in right], "right")
    l = normed_bracket(L, [xs[t] for t in left], "left")
    return L.bracket(r, l)


def defect_terms(L: LieAlgebra, xs) -> list[list]:
    """The individual outer-bracket terms of the vanishing identity."""
    xs = list(xs)
    i = len(xs) - 1
    if i < 3:
        raise WordTooShort(f"the identity needs at least 4 arguments, got {len(xs)}")
    out = []
    for right, left, outer in term_schedule(i):
        inner = _inner_word(L, xs, right, left)
        out.append(L.bracket(inner, xs[outer]))
    return out


def lemma_defect(L: LieAlgebra, xs) -> list:
    """Sum of the schedule terms; the zero vector for every Lie algebra."""
    terms = defect_terms(L, xs)
    total = L.zero_vector()
    for t in terms:
        total = [a + b for a, b in zip(total, t)]
    return total


@dataclass(frozen=True)
class TensorElement:
    """An element of γᵢ/γᵢ₊₁ ⊗ L/γ₂ in flat coordinates (left index major)."""

    left_dim: int
    right_dim: int
    coords: tuple

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


class PsiEvaluator:
    """Evaluates the degree-i tensor map; builds the quotient coordinate
    maps once so tuple enumeration is cheap."""

    def __init__(self, L: LieAlgebra, i: int):
        series = L.lower_central_series()
        if not series.nilpotent:
            raise NonNilpotent("the tensor maps require a nilpotent algebra")
        c = series.nilpotency_class
        if not 2 <= i <= c:
            raise IndexOutOfRange(f"degree i={i} outside [2, {c}] for this algebra")
        self.L = L
        self.i = i
        self.left_map = QuotientMap(series.gamma(i), series.gamma(i + 1))
        self.right_map = QuotientMap(
            Subspace.full_space(L.field, L.n), series.gamma(2)
        )
        self.schedule = term_schedule(i)

    @property
    def codomain_dim(self) -> int:
        return self.left_map.dim * self.right_map.dim

    def value(self, xs) -> TensorElement:
        xs = list(xs)
        if len(xs) != self.i + 1:
            raise DimensionMismatch(f"expected {self.i + 1} arguments, got {len(xs)}")
        ld, rd = self.left_map.dim, self.right_map.dim
        coords = [self.L.field.zero] * (ld * rd)
        for right, left, outer in self.schedule:
            inner = _inner_word(self.L, xs, right, left)
            if not any(inner):
                continue
            lc = self.left_map.coords(inner)
            if not any(lc):
                continue
            rc = self.right_map.coords(xs[outer])
            for a, la in enumerate(lc):
                if la:
                    for b, rb in enumerate(rc):
                        if rb:
                            coords[a * rd + b] = coords[a * rd + b] + la * rb
        return TensorElement(ld, rd, tuple(coords))


def psi(L: LieAlgebra, i: int, xs) -> TensorElement:
    """Single evaluation of the degree-i tensor map."""
    return PsiEvaluator(L, i).value(xs)


@dataclass(frozen=True)
class PsiImage:
    """Image dimension of a tensor map; ``exact`` is False when the value is
    only a certified lower bound (restricted tuple family, no saturation)."""

    i: int
    dim: int
    exact: bool
    mode: str
    tuples_examined: int


_MISSING = object()


def _span_over_tuples(ev: PsiEvaluator, candidates, field) -> tuple[int, int, bool]:
    """Rank of the span over candidate^(i+1); early exit at saturation.

    Nested word values and their left-quotient coordinates are memoized on
    candidate-index prefixes/suffixes, which the lexicographic product shares
    heavily.
    """
    L = ev.L
    cand = [{j: x for j, x in enumerate(c) if x} for c in candidates]
    right_basis_coords = [ev.right_map.coords(list(c)) for c in candidates]
    left_memo: dict[tuple[int, ...], dict] = {}
    right_memo: dict[tuple[int, ...], dict] = {}
    inner_memo: dict[tuple, list | None] = {}

    def left_word(idxs):
        v = left_memo.get(idxs)
        if v is None:
            v = cand[idxs[0]] if len(idxs) == 1 else L.bracket_sparse(left_word(idxs[:-1]), cand[idxs[-1]])
            left_memo[idxs] = v
        return v

    def right_word(idxs):
        v = right_memo.get(idxs)
        if v is None:
            v = cand[idxs[-1]] if len(idxs) == 1 else L.bracket_sparse(cand[idxs[0]], right_word(idxs[1:]))
            right_memo[idxs] = v
        return v

    def inner_coords(right_idxs, left_idxs):
        key = (right_idxs, left_idxs)
        v = inner_memo.get(key, _MISSING)
        if v is _MISSING:
            if not right_idxs:
                w = left_word(left_idxs)
            elif not left_idxs:
                w = right_word(right_idxs)
            else:
                w = L.bracket_sparse(right_word(right_idxs), left_word(left_idxs))
            if w:
                lc = ev.left_map.coords_sparse(w)
                v = lc if any(lc) else None
            else:
                v = None
            inner_memo[key] = v
        return v

    codim = ev.codomain_dim
    ld, rd = ev.left_map.dim, ev.right_map.dim
    zero = field.zero
    span = RowSpan(field, codim)
    count = 0
    saturated = False
    for tup in itertools.product(range(len(cand)), repeat=ev.i + 1):
        count += 1
        coords = None
        for right, left, outer in ev.schedule:
            lc = inner_coords(tuple(tup[t] for t in right), tuple(tup[t] for t in left))
            if lc is None:
                continue
            rc = right_basis_coords[tup[outer]]
            if coords is None:
                coords = [zero] * (ld * rd)
            for a, la in enumerate(lc):
                if la:
                    for b, rb in enumerate(rc):
                        if rb:
                            coords[a * rd + b] = coords[a * rd + b] + la * rb
        if coords is not None and any(coords):
            span.add(coords)
            if span.dim == codim:
                saturated = True
                break
    return span.dim, count, saturated


def psi_image_dim(L: LieAlgebra, i: int, mode: str = "exact") -> PsiImage:
    """Dimension of the image span of the degree-i tensor map.

    exact mode enumerates basis-vector tuples (by multilinearity this spans
    the image).  Tuples containing a basis vector inside γ₂ are skipped: any
    γ₂ entry either lands in the killed right factor or pushes the inner
    word into γᵢ₊₁, so those tuples contribute zero.  Enumeration beyond the
    cap raises; callers that can live with a certified lower bound should use
    ``psi_image_dims``.

    generators mode enumerates tuples from the maximal-class generator pair
    only, returning a lower bound unless the span saturates the codomain.
    """
    series = L.lower_central_series()
    if not series.nilpotent:
        raise NonNilpotent("image enumeration requires a nilpotent algebra")
    c = series.nilpotency_class
    if i < 2:
        raise IndexOutOfRange(f"degree i={i} must be at least 2")
    if i > c:
        # Degenerate codomain: gamma_i is 0 past the class.
        return PsiImage(i, 0, True, mode, 0)
    ev = PsiEvaluator(L, i)
    if ev.codomain_dim == 0:
        return PsiImage(i, 0, True, mode, 0)
    if mode == "exact":
        gamma2 = series.gamma(2)
        candidates = [
            L.basis_vector(j)
            for j in range(L.n)
            if not gamma2.contains_vector(L.basis_vector(j))
        ]
        if len(candidates) ** (i + 1) > TUPLE_ENUMERATION_CAP:
            raise TupleSpaceTooLarge(
                f"{len(candidates)}^{i + 1} tuples exceed the exact-mode cap "
                f"({TUPLE_ENUMERATION_CAP}); use the generator-restricted mode"
            )
        dim, count, _ = _span_over_tuples(ev, candidates, L.field)
        return PsiImage(i, dim, True, "exact", count)
    if mode == "generators":
        chain = generator_chain(L)
        dim, count, saturated = _span_over_tuples(ev, (chain.s, chain.s1), L.field)
        return PsiImage(i, dim, saturated, "generators", count)
    raise IndexOutOfRange(f"mode must be 'exact' or 'generators', got {mode!r}")


def psi_image_dims(L: LieAlgebra) -> list[PsiImage]:
    """Image dimensions for every degree 2..c, preferring exact mode and
    falling back to the generator-restricted lower bound past the cap."""
    series = L.lower_central_series()
    if not series.nilpotent:
        raise NonNilpotent("image enumeration requires a nilpotent algebra")
    out = []
    for i in range(2, (series.nilpotency_class or 1) + 1):
        try:
            out.append(psi_image_dim(L, i, "exact"))
        except TupleSpaceTooLarge:
            out.append(psi_image_dim(L, i, "generators"))
    return out


@dataclass(frozen=True)
class GeneratorChain:
    """Generators s, s1 outside γ₂ and the chain s_i = [s_{i-1}, s] with
    s_i in γᵢ \\ γᵢ₊₁ for 2 <= i <= c."""

    s: tuple
    s1: tuple
    tail: tuple  # (s_2, ..., s_c)


def _try_chain(L: LieAlgebra, series, s, s1):
    gamma2 = series.gamma(2)
    if gamma2.contains_vector(s) or gamma2.contains_vector(s1):
        return None
    pair = gamma2.sum(Subspace.from_vectors(L.field, L.n, [s, s1]))
    if pair.dim != gamma2.dim + 2:
        return None  # not independent modulo gamma2
    c = series.nilpotency_class
    tail = []
    cur = s1
    for idx in range(2, c + 1):
        cur = L.bracket(cur, s)
        if not series.gamma(idx).contains_vector(cur):
            return None
        if series.gamma(idx + 1).contains_vector(cur):
            return None
        tail.append(tuple(cur))
    return tuple(tail)


def generator_chain(L: LieAlgebra) -> GeneratorChain:
    """Deterministic generator pair and descending chain for a maximal-class
    algebra.

    The canonical choice is the first two canonical basis vectors outside
    γ₂ in index order; if that pair fails the chain property, ordered basis
    pairs and then small integer combinations are searched.
    """
    ok, _ = L.is_maximal_class()
    if not ok:
        raise NotMaximalClass("generator chains exist only for maximal-class algebras")
    series = L.lower_central_series()
    gamma2 = series.gamma(2)
    candidates = [
        j for j in range(L.n) if not gamma2.contains_vector(L.basis_vector(j))
    ]
    # Canonical pair first, then every ordered basis pair.
    pairs = [(candidates[0], candidates[1])] if len(candidates) >= 2 else []
    pairs += [
        (a, b) for a in candidates for b in candidates if a != b
    ]
    for a, b in pairs:
        s, s1 = L.basis_vector(a), L.basis_vector(b)
        tail = _try_chain(L, series, s, s1)
        if tail is not None:
            return GeneratorChain(tuple(s), tuple(s1), tail)
    # Escape hatch: combinations e_a + t e_b avoid any finite set of bad
    # directions over Q.
    c = series.nilpotency_class
    for t in range(1, c + 2):
        coeff = L.field.element(t)
        for a in candidates:
            for b in candidates:
                if a == b:
                    continue
                s = L.basis_vector(a)
                s[b] = coeff
                for b1 in candidates:
                    s1 = L.basis_vector(b1)
                    tail = _try_chain(L, series, s, s1)
                    if tail is not None:
                        return GeneratorChain(tuple(s), tuple(s1), tail)
    raise GeneratorSearchFailed(
        "no generator pair produced a full descending chain; "
        "the input algebra is defective or the field is too small"
    )


@dataclass(frozen=True)
class OddWitness:
    found: bool
    args: tuple | None
    value: TensorElement | None
    tuples_examined: int
    diagnostic: str | None = None


def odd_witness_search(L: LieAlgebra, i: int) -> OddWitness:
    """First generator tuple with a nonzero degree-i tensor value, i odd.

    Exhaustion contradicts the bound's proof for valid maximal-class input
    over characteristic != 2, so it is reported as a diagnostic, never
    silently.
    """
    if L.field.characteristic == 2:
        raise CharTwoField("the odd-degree witness requires characteristic != 2")
    if i % 2 == 0:
        raise IndexOutOfRange(f"witness degree must be odd, got {i}")
    chain = generator_chain(L)
    c = L.nilpotency_class()
    if not 3 <= i <= c:
        raise IndexOutOfRange(f"witness degree i={i} outside [3, {c}]")
    ev = PsiEvaluator(L, i)
    count = 0
    for tup in itertools.product((chain.s, chain.s1), repeat=i + 1):
        count += 1
        val = ev.value(tup)
        if not val.is_zero:
            return OddWitness(True, tup, val, count)
    return OddWitness(
        False,
        None,
        None,
        count,
        f"theorem-contradiction: all {count} generator tuples gave zero at odd "
        f"degree {i}; this should be impossible for a valid maximal-class "
        "algebra over characteristic != 2",
    )
