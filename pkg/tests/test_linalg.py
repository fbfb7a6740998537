from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphdesign.linalg import (
    GramMatrix,
    LinalgError,
    PivotError,
    invert,
    ldlt,
    matmul,
    psd_rank,
)


def test_from_rows_symmetrizes_nothing_but_validates():
    with pytest.raises(LinalgError):
        GramMatrix.from_rows([[1, 2], [3, 1]])
    with pytest.raises(LinalgError):
        GramMatrix.from_rows([[1, 2, 3], [2, 1, 0]])


def test_identity_and_indexing():
    g = GramMatrix.identity(3)
    assert g.n == 3
    assert g[0, 0] == F(1)
    assert g[0, 1] == F(0)
    assert g.row(2) == (F(0), F(0), F(1))


def test_quadratic_form_exact():
    g = GramMatrix.from_rows([[2, -1], [-1, 2]])
    assert g.quadratic_form([1, 0]) == F(2)
    assert g.quadratic_form([1, 1]) == F(2)
    assert g.quadratic_form([2, 1]) == F(6)


def test_integer_entries_scale():
    g = GramMatrix.from_rows([[F(4, 3), F(-2, 3)], [F(-2, 3), F(4, 3)]])
    scale, gi = g.integer_entries()
    assert scale == 3
    assert gi == [[4, -2], [-2, 4]]


def test_ldlt_reconstructs():
    g = GramMatrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    L, D = ldlt(g)
    n = g.n
    ld = [[sum(L[i][k] * D[k] * L[j][k] for k in range(n))
           for j in range(n)] for i in range(n)]
    assert all(ld[i][j] == g[i, j] for i in range(n) for j in range(n))


def test_ldlt_indefinite_has_negative_pivot():
    _, D = ldlt(GramMatrix.from_rows([[1, 2], [2, 1]]))
    assert tuple(D) == (F(1), F(-3))


def test_ldlt_zero_pivot_nonzero_column_raises():
    with pytest.raises(PivotError, match="pivoted"):
        ldlt(GramMatrix.from_rows([[0, 1], [1, 0]]))


def test_ldlt_psd_singular():
    # rank-1 PSD: zero pivot with a zero column below it is accepted
    g = GramMatrix.from_rows([[1, 1], [1, 1]])
    L, D = ldlt(g)
    assert tuple(D) == (F(1), F(0))


def test_psd_rank_cases():
    assert psd_rank(GramMatrix.identity(4)) == (True, 4)
    assert psd_rank(GramMatrix.from_rows([[1, 1], [1, 1]])) == (True, 1)
    assert psd_rank(GramMatrix.from_rows([[1, 2], [2, 1]])) == (False, 2)
    assert psd_rank(GramMatrix.from_rows([[0, 0], [0, 0]])) == (True, 0)


def test_invert_roundtrip():
    g = GramMatrix.from_rows([[2, -1], [-1, 2]])
    gi = invert(g)
    prod = matmul([g.row(i) for i in range(2)], [gi.row(i) for i in range(2)])
    assert [list(r) for r in prod] == [[F(1), F(0)], [F(0), F(1)]]
    assert gi[0, 0] == F(2, 3)


def test_invert_singular_raises():
    with pytest.raises(LinalgError):
        invert(GramMatrix.from_rows([[1, 1], [1, 1]]))


def test_is_positive_definite():
    assert GramMatrix.from_rows([[2, -1], [-1, 2]]).is_positive_definite()
    assert not GramMatrix.from_rows([[1, 1], [1, 1]]).is_positive_definite()
    assert not GramMatrix.from_rows([[-1]]).is_positive_definite()


_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def _psd_grams(draw, nmax=4):
    """A^T A is PSD for any integer A; adding identity makes it PD."""
    n = draw(st.integers(min_value=1, max_value=nmax))
    m = draw(st.integers(min_value=1, max_value=nmax))
    a = [[draw(_entries) for _ in range(n)] for _ in range(m)]
    rows = [[sum(a[k][i] * a[k][j] for k in range(m)) for j in range(n)]
            for i in range(n)]
    return GramMatrix.from_rows(rows)


@given(_psd_grams())
@settings(max_examples=60, deadline=None)
def test_psd_rank_matches_sympy(g):
    import sympy

    ok, rank = psd_rank(g)
    assert ok
    m = sympy.Matrix([[sympy.Rational(x) for x in g.row(i)]
                      for i in range(g.n)])
    assert rank == m.rank()


@given(_psd_grams())
@settings(max_examples=40, deadline=None)
def test_pd_shift_ldlt_positive_pivots(g):
    rows = [[g[i, j] + (1 if i == j else 0) for j in range(g.n)]
            for i in range(g.n)]
    gp = GramMatrix.from_rows(rows)
    _, D = ldlt(gp)
    assert all(x > 0 for x in D)
    assert gp.is_positive_definite()
