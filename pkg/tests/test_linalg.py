import random
from fractions import Fraction

from k3census import linalg


def rand_int_matrix(rng, rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_solve_and_nullspace():
    a = [[1, 2], [3, 4]]
    x = linalg.solve(a, [5, 11])
    assert x == [Fraction(1), Fraction(2)]
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None  # inconsistent
    under = linalg.solve([[1, 1, 1]], [3])
    assert sum(under) == 3
    ns = linalg.nullspace([[1, 1, 1]])
    assert len(ns) == 2
    for v in ns:
        assert sum(v) == 0


def test_det_and_rank():
    assert linalg.det([[2, 0], [0, 3]]) == 6
    assert linalg.det([[1, 2], [2, 4]]) == 0
    assert linalg.rank([[1, 2], [2, 4]]) == 1


def test_charpoly_companion():
    # companion matrix of x^3 - 2x - 5
    c = [[0, 0, 5], [1, 0, 2], [0, 1, 0]]
    assert linalg.charpoly(c) == [Fraction(-5), Fraction(-2), Fraction(0), Fraction(1)]


def test_smith_normal_form_properties():
    rng = random.Random(60)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        a = rand_int_matrix(rng, rows, cols)
        d, u, v = linalg.smith_normal_form(a)
        # u a v == d
        ua = [[sum(u[i][k] * a[k][j] for k in range(rows)) for j in range(cols)]
              for i in range(rows)]
        uav = [[sum(ua[i][k] * v[k][j] for k in range(cols)) for j in range(cols)]
               for i in range(rows)]
        assert uav == d
        assert abs(linalg.det(u)) == 1 and abs(linalg.det(v)) == 1
        divs = linalg.elementary_divisors(a)
        for x, y in zip(divs, divs[1:]):
            assert y % x == 0
        # off-diagonal zero
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert d[i][j] == 0


def test_integer_kernel_is_saturated():
    rng = random.Random(61)
    for _ in range(20):
        a = rand_int_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        basis = linalg.integer_kernel_basis(a)
        for vec in basis:
            assert all(sum(a[i][j] * vec[j] for j in range(len(vec))) == 0
                       for i in range(len(a)))
        assert len(basis) == len(a[0]) - linalg.rank(a)
        if basis:
            assert all(x == 1 for x in linalg.elementary_divisors(basis))


def test_integer_solve():
    a = [[2, 0], [0, 3]]
    assert linalg.integer_solve(a, [4, 9]) == [2, 3]
    assert linalg.integer_solve(a, [1, 0]) is None  # 2x = 1 has no integer root
    # underdetermined with a solution
    sol = linalg.integer_solve([[2, 3]], [1])
    assert sol is not None and 2 * sol[0] + 3 * sol[1] == 1


def test_complete_to_basis():
    rng = random.Random(62)
    basis = linalg.complete_to_basis([[1, 0, 1], [0, 1, 0]], 3)
    assert abs(linalg.det(basis)) == 1
    # first rows span the input lattice
    for target in ([1, 0, 1], [0, 1, 0], [1, 1, 1]):
        coords = linalg.solve([[Fraction(basis[r][c]) for r in range(2)]
                               for c in range(3)], target)
        if target != [1, 1, 1]:
            assert coords is not None and all(x.denominator == 1 for x in coords)
    import pytest
    with pytest.raises(ValueError):
        linalg.complete_to_basis([[2, 0, 0]], 3)  # not saturated
