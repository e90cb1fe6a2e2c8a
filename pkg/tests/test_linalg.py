from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import naive_det
from monocremona import SingularMatrix, adjugate, determinant, rational_inverse
from monocremona.linalg import identity, mat_mul, transpose


def square_matrices(min_size=1, max_size=5, lo=-9, hi=9):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


@st.composite
def stochastic_matrices(draw):
    size = draw(st.integers(3, 5))
    d = draw(st.integers(1, 9))
    rows = []
    for _ in range(size):
        cuts = sorted(draw(st.lists(st.integers(0, d), min_size=size - 1, max_size=size - 1)))
        rows.append([b - a for a, b in zip([0] + cuts, cuts + [d])])
    return rows, d


@pytest.mark.parametrize("d", range(1, 10))
def test_determinant_lower_bidiagonal(d):
    m = [[d, 0, 0, 0], [d - 1, 1, 0, 0], [0, d - 1, 1, 0], [0, 0, d - 1, 1]]
    assert determinant(m) == d


def test_determinant_examples():
    assert determinant([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == 2
    assert determinant([[0, 1, 1, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]) == -2


def test_adjugate_identity():
    assert adjugate(identity(4)) == identity(4)


def test_adjugate_example():
    m = [[2, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
    adj = adjugate(m)
    assert adj == ((1, 0, 0, 0), (-1, 2, 0, 0), (1, -2, 2, 0), (-1, 2, -2, 2))
    scaled = tuple(tuple(2 * x for x in row) for row in identity(4))
    assert mat_mul(m, adj) == scaled


def test_adjugate_1x1():
    assert adjugate([[7]]) == ((1,),)
    assert adjugate([[0]]) == ((1,),)


def test_rational_inverse_identity():
    inv = rational_inverse(identity(4))
    assert inv == tuple(tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4))


def test_rational_inverse_example():
    m = [[2, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
    half = Fraction(1, 2)
    assert rational_inverse(m) == (
        (half, 0, 0, 0),
        (-half, 1, 0, 0),
        (half, -1, 1, 0),
        (-half, 1, -1, 1),
    )


def test_rational_inverse_singular():
    with pytest.raises(SingularMatrix):
        rational_inverse([[1, 1], [1, 1]])


def test_non_square_rejected():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


@given(square_matrices())
def test_determinant_matches_cofactor_oracle(m):
    assert determinant(m) == naive_det(m)


@given(square_matrices())
def test_determinant_transpose_invariant(m):
    assert determinant(m) == determinant(transpose(m))


@given(square_matrices(min_size=2))
def test_determinant_row_swap_alternates(m):
    swapped = [m[1], m[0]] + m[2:]
    assert determinant(swapped) == -determinant(m)


@given(square_matrices())
def test_adjugate_product_identity(m):
    det = determinant(m)
    scaled = tuple(tuple(det * x for x in row) for row in identity(len(m)))
    assert mat_mul(m, adjugate(m)) == scaled


@given(square_matrices())
def test_rational_inverse_roundtrip(m):
    if determinant(m) == 0:
        with pytest.raises(SingularMatrix):
            rational_inverse(m)
        return
    inv = rational_inverse(m)
    n = len(m)
    prod = tuple(
        tuple(sum(Fraction(m[i][k]) * inv[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    assert prod == tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


@given(stochastic_matrices())
def test_stochastic_determinant_divisible_by_degree(md):
    m, d = md
    assert determinant(m) % d == 0
