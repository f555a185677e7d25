from fractions import Fraction as F

from hypothesis import given, strategies as st

from holorec.exactmath import linalg

fr = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_nullspace_vectors_are_kernel(rows, cols, data):
    m = [[data.draw(fr) for _ in range(cols)] for _ in range(rows)]
    basis = linalg.nullspace(m, cols)
    reduced, pivots = linalg.rref(m, cols)
    assert len(basis) == cols - len(pivots)
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in m)
        assert next(x for x in v if x) == 1


@given(st.integers(1, 4), st.data())
def test_solve_consistent_system(k, data):
    m = [[data.draw(fr) for _ in range(k)] for _ in range(k)]
    x = [data.draw(fr) for _ in range(k)]
    rhs = [sum(a * b for a, b in zip(row, x)) for row in m]
    sol = linalg.solve(m, rhs)
    assert sol is not None
    assert [sum(a * b for a, b in zip(row, sol)) for row in m] == rhs


def test_inconsistent():
    assert linalg.solve([[F(1), F(1)], [F(2), F(2)]], [F(1), F(3)]) is None
