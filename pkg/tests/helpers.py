"""Shared independent oracles and random generators for the test suite.

Everything here is deliberately written the dumb, obviously-correct way
(textbook division-based elimination, full brute-force enumeration) so that
the production code paths are checked against a second route.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from liemult.algebra import LieAlgebra, QuotientMap, Subspace
from liemult.fields import QQ
from liemult.linalg import Matrix
from liemult.words import PsiEvaluator


def naive_rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Textbook rational Gauss-Jordan elimination, no fraction-free tricks."""
    work = [[Fraction(e) for e in r] for r in rows]
    m = len(work)
    ncols = len(work[0]) if m else 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        piv = work[r][c]
        work[r] = [e / piv for e in work[r]]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == m:
            break
    return [row for row in work if any(row)]


def naive_rank(rows) -> int:
    return len(naive_rref(rows))


def random_rational_matrix(rng: random.Random, nrows: int, ncols: int) -> list[list[Fraction]]:
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def random_rational_vector(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]


def random_unimodular(rng: random.Random, n: int, field=QQ) -> Matrix:
    """Product of unit triangular integer matrices: determinant exactly 1."""
    lower = [[field.element(1 if i == j else (rng.randint(-3, 3) if i > j else 0))
              for j in range(n)] for i in range(n)]
    upper = [[field.element(1 if i == j else (rng.randint(-3, 3) if i < j else 0))
              for j in range(n)] for i in range(n)]
    return Matrix(field, lower) @ Matrix(field, upper)


def brute_psi_image_dim(L: LieAlgebra, i: int) -> int:
    """Exhaustive enumeration over every basis-vector tuple, no pruning."""
    ev = PsiEvaluator(L, i)
    if ev.codomain_dim == 0:
        return 0
    seen_rows: list[list] = []
    basis = [L.basis_vector(j) for j in range(L.n)]
    for tup in itertools.product(basis, repeat=i + 1):
        val = ev.value(tup)
        if not val.is_zero:
            seen_rows.append(list(val.coords))
    if not seen_rows:
        return 0
    return Matrix(L.field, seen_rows).rank()


def quotient_coords_oracle(sup: Subspace, sub: Subspace, v):
    """Independent route for quotient coordinates (fresh map each call)."""
    return QuotientMap(sup, sub).coords(v)
