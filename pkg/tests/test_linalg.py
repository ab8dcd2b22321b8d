from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilgrass.errors import IntegralityError
from nilgrass.linalg import echelon, rank, solve


def rational_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(a[0]) if a else 0):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols), min_size=1, max_size=5)
)


@given(matrices)
def test_rank_matches_rational_elimination(rows):
    assert rank(rows) == rational_rank(rows)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_solve_recovers_integer_solutions(matrix, x):
    if rank(matrix) < 3:
        return
    rhs = [sum(a * b for a, b in zip(row, x)) for row in matrix]
    assert solve(matrix, rhs) == x


def test_non_integral_solution_is_an_error():
    with pytest.raises(IntegralityError):
        solve([[2, 0], [0, 1]], [1, 1])


def test_singular():
    with pytest.raises(ValueError):
        solve([[1, 2], [2, 4]], [1, 2])


def test_pivots():
    _, pivots = echelon([[0, 1, 2], [0, 2, 4], [1, 0, 0]])
    assert pivots == [0, 1]
