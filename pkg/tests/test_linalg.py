import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quiverhom import linalg
from quiverhom.linalg import GFp, Matrix, Subspace, DEFAULT_PRIME


F5 = GFp(5)
FD = GFp(DEFAULT_PRIME)


def test_field_validation():
    with pytest.raises(ValueError):
        GFp(2)
    with pytest.raises(ValueError):
        GFp(15)
    assert GFp(5).inv(2) == 3  # 2*3 = 6 = 1 mod 5


def test_rref_identity():
    m = Matrix.identity(FD, 2)
    red, rk, piv = m.rref()
    assert red == m and rk == 2 and piv == [0, 1]


def test_rref_zero():
    m = Matrix.zeros(FD, 3, 3)
    red, rk, piv = m.rref()
    assert red == m and rk == 0 and piv == []


def test_rref_rank_one_mod5():
    # [[1,2],[2,4]] mod 5: second row is twice the first.
    m = Matrix(F5, [[1, 2], [2, 4]])
    red, rk, piv = m.rref()
    assert rk == 1 and piv == [0]
    assert red.a.tolist() == [[1, 2], [0, 0]]


def test_rref_idempotent():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = rng.integers(0, 5, size=(4, 6))
        red, _, _ = linalg.rref(a, 5)
        red2, _, _ = linalg.rref(red, 5)
        assert (red == red2).all()


def test_kernel_identity_and_zero():
    assert Matrix.identity(FD, 4).kernel_basis().dim == 0
    assert Matrix.zeros(FD, 2, 3).kernel_basis().dim == 3


def test_kernel_hand_example_mod5():
    # x + y = 0 mod 5  ->  span{(1, 4)}
    ker = Matrix(F5, [[1, 1]]).kernel_basis()
    assert ker.dim == 1
    assert ker.basis.tolist() == [[1, 4]]


def test_solve_cases():
    ident = Matrix.identity(F5, 3)
    b = np.array([1, 2, 3])
    assert ident.solve(b).tolist() == [1, 2, 3]
    assert Matrix.zeros(F5, 2, 2).solve(np.array([1, 0])) is None
    # 2x = 1 mod 5  ->  x = 3
    assert Matrix(F5, [[2]]).solve(np.array([1])).tolist() == [3]
    with pytest.raises(linalg.DimensionMismatch):
        linalg.solve_matrix(np.zeros((2, 2)), np.zeros((3, 1)), 5)


def test_subspace_ops_trivial():
    w = Subspace(F5, 3, [[1, 0, 0], [0, 1, 0]])
    full = Subspace.full(F5, 3)
    zero = Subspace.zero(F5, 3)
    assert full.intersect(w) == w
    assert w.sum(zero) == w
    assert full.contains(w) and not w.contains(full)


def test_subspace_intersection_hand():
    # In F5^3: span{e1,e2} ∩ span{e2,e3} = span{e2}
    u = Subspace(F5, 3, [[1, 0, 0], [0, 1, 0]])
    v = Subspace(F5, 3, [[0, 1, 0], [0, 0, 1]])
    w = u.intersect(v)
    assert w.dim == 1 and w.basis.tolist() == [[0, 1, 0]]


def test_subspace_ambient_mismatch():
    with pytest.raises(linalg.DimensionMismatch):
        Subspace(F5, 3, [[1, 0, 0]]).sum(Subspace(F5, 2, [[1, 0]]))


def test_quotient_projection_kernel():
    u = Subspace(F5, 4, [[1, 2, 0, 3], [0, 0, 1, 1]])
    proj = u.quotient_projection()
    assert proj.rows == 2
    # kernel of the projection is exactly u
    assert (linalg.matmul(proj.a, u.basis.T, 5) == 0).all()
    assert proj.rank() == 2


small = st.integers(min_value=0, max_value=4)
mats = st.integers(min_value=1, max_value=5).flatmap(
    lambda r: st.integers(min_value=1, max_value=5).flatmap(
        lambda c: st.lists(
            st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(mats)
def test_rank_nullity(data):
    a = np.array(data, dtype=np.int64)
    assert linalg.rank(a, 5) + linalg.kernel(a, 5).shape[0] == a.shape[1]


@settings(max_examples=60, deadline=None)
@given(mats, mats)
def test_dimension_formula(d1, d2):
    amb = max(len(d1[0]), len(d2[0]))
    u_rows = [row + [0] * (amb - len(row)) for row in d1]
    v_rows = [row + [0] * (amb - len(row)) for row in d2]
    u = Subspace(F5, amb, u_rows)
    v = Subspace(F5, amb, v_rows)
    assert u.intersect(v).dim + u.sum(v).dim == u.dim + v.dim


@settings(max_examples=40, deadline=None)
@given(mats)
def test_kernel_members_annihilate(data):
    a = np.array(data, dtype=np.int64)
    ker = linalg.kernel(a, 5)
    if ker.shape[0]:
        assert (linalg.matmul(a, ker.T, 5) == 0).all()


@settings(max_examples=40, deadline=None)
@given(mats)
def test_backends_agree(data):
    a = np.array(data, dtype=np.int64) % 5
    from quiverhom import _gfpcore_py

    b = a.copy()
    rk_py, piv_py = _gfpcore_py.rref_ip(b, 5)
    red, rk, piv = linalg.rref(a, 5)
    assert rk == rk_py and piv == piv_py and (red == b).all()
