import random
from math import comb

import pytest

from helpers import random_unimodular
from liemult.algebra import build
from liemult.catalog import abelian, entries, heisenberg, standard_filiform
from liemult.errors import IndexOutOfRange, NonNilpotent, ResourceLimit
from liemult.fields import QQ
from liemult.homology import ExteriorBasis, boundary_matrices, multiplier_dim
from liemult.linalg import Matrix, row_space_union


@pytest.mark.parametrize("n,k", [(4, 2), (4, 3), (8, 2), (8, 3), (3, 3)])
def test_exterior_basis_round_trip(n, k):
    ext = ExteriorBasis(n, k)
    assert ext.size == comb(n, k)
    for pos in range(ext.size):
        assert ext.index_of(ext.subset_at(pos)) == pos
    # Lexicographic order: position 0 is the smallest subset.
    assert ext.subset_at(0) == tuple(range(k))


def test_exterior_basis_rejects_bad_subset():
    ext = ExteriorBasis(4, 2)
    with pytest.raises(IndexOutOfRange):
        ext.index_of((2, 1))
    with pytest.raises(IndexOutOfRange):
        ext.subset_at(99)


def test_abelian_boundaries_are_zero():
    pair = boundary_matrices(abelian(4))
    assert pair.d2.is_zero() and pair.d3.is_zero()


def test_d3_rows_of_n4_filiform():
    # Hand expansion: d3(x1^x2^x3) = [x1,x2]^x3 - [x1,x3]^x2 + [x2,x3]^x1
    #                              = x3^x3 - x4^x2 + 0 = x2^x4.
    L = standard_filiform(4)
    pair = boundary_matrices(L)
    row = pair.d3.row(pair.ext3.index_of((0, 1, 2)))
    expected = [QQ.zero] * pair.ext2.size
    expected[pair.ext2.index_of((1, 3))] = QQ.one
    assert row == expected
    # d3(x1^x3^x4) = x4^x4 - 0 + 0 = 0.
    assert not any(pair.d3.row(pair.ext3.index_of((0, 2, 3))))


def test_d2_rank_and_kernel_of_n4_filiform():
    # Hand row-reduction: only two nonzero boundary rows (x3 and x4), rank 2.
    pair = boundary_matrices(standard_filiform(4))
    assert pair.d2.rank() == 2
    cycles = pair.d2.transpose().kernel_basis()  # 2-cycles, as rows in degree 2
    assert cycles.nrows == 6 - 2
    # im d3 is contained in the cycles: the union adds nothing.
    union = row_space_union(cycles, pair.d3.rref())
    assert union.nrows == 4


def test_chain_condition_on_catalog():
    for entry in entries():
        pair = boundary_matrices(entry.algebra)
        assert (pair.d3 @ pair.d2).is_zero()


def test_chain_condition_under_random_basis_change():
    rng = random.Random(41)
    L = standard_filiform(5)
    for _ in range(5):
        conj = L.change_basis(random_unimodular(rng, 5))
        pair = boundary_matrices(conj)
        assert (pair.d3 @ pair.d2).is_zero()


@pytest.mark.parametrize(
    "algebra,expected",
    [
        (standard_filiform(4), 2),
        (standard_filiform(5), 3),
        (heisenberg(), 2),
        (abelian(3), 3),
        (abelian(6), 15),
    ],
)
def test_multiplier_dims(algebra, expected):
    assert multiplier_dim(algebra) == expected


def test_multiplier_dim_abelian_closed_form():
    for n in range(1, 7):
        assert multiplier_dim(abelian(n)) == n * (n - 1) // 2


def test_multiplier_invariant_under_basis_change():
    rng = random.Random(43)
    for L in (standard_filiform(4), standard_filiform(6), heisenberg()):
        want = multiplier_dim(L)
        for _ in range(5):
            assert multiplier_dim(L.change_basis(random_unimodular(rng, L.n))) == want


def test_multiplier_rejects_non_nilpotent():
    L = build(2, [(1, 2, 2, 1)])
    with pytest.raises(NonNilpotent):
        multiplier_dim(L)


def test_dimension_guard():
    with pytest.raises(ResourceLimit):
        multiplier_dim(abelian(65))


def test_multiplier_over_prime_field():
    from liemult.fields import PrimeField

    F = PrimeField(3)
    assert multiplier_dim(standard_filiform(4, field=F)) == 2
    assert multiplier_dim(standard_filiform(5, field=F)) == 3


def test_boundary_shapes():
    L = standard_filiform(6)
    pair = boundary_matrices(L)
    assert pair.d2.shape == (comb(6, 2), 6)
    assert pair.d3.shape == (comb(6, 3), comb(6, 2))
