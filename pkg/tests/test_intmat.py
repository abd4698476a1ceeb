import random

import pytest
from hypothesis import given, settings, strategies as st

from gorpoly import intmat
from oracles import brute_hnf_2x2, det as oracle_det
from helpers import random_unimodular


def small_matrices(rows, cols, lo=-5, hi=5):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def test_identity_normal_forms():
    I = intmat.identity(3)
    H, U = intmat.hermite_normal_form(I)
    assert H == I
    S, _, _ = intmat.smith_normal_form(I)
    assert S == I


def test_smith_of_diagonal():
    S, U, V = intmat.smith_normal_form([[2, 0], [0, 4]])
    assert S == [[2, 0], [0, 4]]


def test_hnf_2x2_matches_brute_force():
    A = [[2, 1], [0, 3]]
    H, U = intmat.hermite_normal_form(A)
    assert brute_hnf_2x2(A) == {tuple(map(tuple, H))}
    assert H == A


@settings(max_examples=60, deadline=None)
@given(small_matrices(3, 4))
def test_hnf_shape_and_factorization(A):
    H, U = intmat.hermite_normal_form(A)
    assert intmat.matmul(U, A) == H
    assert abs(intmat.determinant(U)) == 1
    last_col = -1
    for row in H:
        if not any(row):
            continue
        piv = next(j for j, x in enumerate(row) if x)
        assert piv > last_col and row[piv] > 0
        last_col = piv
    # reduced above pivots
    for r, row in enumerate(H):
        if any(row):
            piv = next(j for j, x in enumerate(row) if x)
            assert all(0 <= H[i][piv] < row[piv] for i in range(r))


@settings(max_examples=60, deadline=None)
@given(small_matrices(3, 3))
def test_smith_divisibility(A):
    S, U, V = intmat.smith_normal_form(A)
    assert intmat.matmul(intmat.matmul(U, A), V) == S
    diag = [S[i][i] for i in range(3)]
    assert all(S[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b % a == 0) if a else b == 0
    assert abs(intmat.determinant(A)) == diag[0] * diag[1] * diag[2]


@settings(max_examples=80, deadline=None)
@given(small_matrices(4, 4, -4, 4))
def test_determinant_matches_cofactor_expansion(A):
    assert intmat.determinant(A) == oracle_det(A)


@settings(max_examples=40, deadline=None)
@given(small_matrices(3, 3))
def test_adjugate_identity(A):
    adj = intmat.adjugate(A)
    d = intmat.determinant(A)
    assert intmat.matmul(A, adj) == [[d * int(i == j) for j in range(3)] for i in range(3)]


def test_unimodular_inverse_roundtrip():
    rng = random.Random(3)
    for n in (1, 2, 4):
        U = random_unimodular(n, rng, steps=10)
        assert intmat.matmul(U, intmat.unimodular_inverse(U)) == intmat.identity(n)


def test_lattice_index_and_chart():
    assert intmat.lattice_index([[2, 0], [0, 3]]) == 6
    assert intmat.lattice_index([[1, 1, 0]]) == 1
    k, V = intmat.row_basis_chart([[2, 4, 0]], 3)
    assert k == 1
    assert abs(intmat.determinant(V)) == 1
    img = intmat.vecmat([2, 4, 0], V)
    assert img[1:] == (0, 0)


def test_primitive_and_gcd():
    assert intmat.primitive([4, -6, 0]) == (2, -3, 0)
    assert intmat.gcd_all([0, 0]) == 0
    g, s, t = intmat.xgcd(12, -18)
    assert g == 6 and 12 * s - 18 * t == g


@pytest.mark.parametrize("rows,expected", [([[1, 2], [2, 4]], 1), ([[1, 0], [0, 1]], 2), ([[0, 0]], 0)])
def test_rank(rows, expected):
    assert intmat.rank(rows) == expected
