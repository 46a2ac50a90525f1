from hypothesis import given, settings, strategies as st

from qconic.rationals import QQ
from qconic.linalg import (kernel_basis, kernel_basis_blockwise, rank,
                           rank_blockwise, solve_unique,
                           has_full_column_rank_certified, split_components)
from qconic.numberfield import field_for_root


def test_kernel_spec_examples():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    zero_row = kernel_basis([[0, 0, 0]])
    assert len(zero_row) == 3
    kb = kernel_basis([[1, 1, 0], [0, 1, 1]])
    assert len(kb) == 1
    v = kb[0]
    # spanned by (1, -1, 1)
    assert v[0] == -v[1] == v[2] and v[0] != 0


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=6),
       st.data())
def test_kernel_vectors_annihilate(nrows, ncols, data):
    rows = [[QQ(data.draw(st.integers(min_value=-6, max_value=6)))
             for _ in range(ncols)] for _ in range(nrows)]
    basis = kernel_basis(rows)
    for v in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0
    assert rank(rows) + len(basis) == ncols
    assert rank(rows) == rank_blockwise(rows)
    assert sorted(map(tuple, basis)) == sorted(map(tuple, kernel_basis_blockwise(rows)))


def test_full_column_rank_certificate_is_safe():
    assert has_full_column_rank_certified([[1, 0], [0, 1], [3, 5]])
    # rank-deficient matrices are never certified
    assert not has_full_column_rank_certified([[1, 2], [2, 4]])


def test_solve_unique():
    x = solve_unique([[2, 1], [1, -1]], [QQ(5), QQ(1)])
    assert x == [QQ(2), QQ(1)]


def test_split_components():
    rows = [[1, 0, 2, 0], [0, 3, 0, 0], [5, 0, 7, 0]]
    comps = split_components(rows)
    cols = sorted(tuple(c) for _, c in comps)
    assert cols == [(0, 2), (1,), (3,)]
    assert rank_blockwise(rows) == rank(rows) == 3


def test_field_entry_kernel():
    K = field_for_root((QQ(1), QQ(0), QQ(1)), 0)
    i, one = K.generator(), K.one()
    rows = [[one, i], [i, -one]]  # second row is i times the first
    basis = kernel_basis(rows)
    assert len(basis) == 1
    v = basis[0]
    for row in rows:
        acc = K.zero()
        for a, b in zip(row, v):
            acc = acc + a * b
        assert acc == K.zero()
