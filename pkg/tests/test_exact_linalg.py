import random
from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qaknots.errors import TooLarge
from qaknots.exact_linalg import (
    det_bareiss,
    det_cofactor,
    format_matrix,
    poly_det,
    read_matrix,
    signed_tree_sum,
    smith_normal_form,
)
from qaknots.families import family_matrix
from qaknots.poly import PolyZ, parse_poly
from qaknots.tait_graph import SignedTaitGraph, goeritz_reduced

from conftest import random_graph


def square(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


any_square = st.integers(0, 5).flatmap(square)


def test_det_small_cases():
    assert det_bareiss([[3]]) == 3
    assert det_bareiss([]) == 1
    assert det_bareiss([[int(i == j) for j in range(5)] for i in range(5)]) == 1
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[1, 2], [2, 4]]) == 0


def test_det_of_g1_at_one_one():
    # (3 + 6 + 6 + 5)^2
    assert det_bareiss(family_matrix(1, 1, 1)) == 400


def test_det_no_overflow():
    M = [[10**30 + i * j for j in range(4)] for i in range(4)]
    M[0][0] += 1
    assert det_bareiss(M) == det_cofactor(M)


@settings(max_examples=300, deadline=None)
@given(any_square)
def test_bareiss_agrees_with_cofactor_expansion(M):
    assert det_bareiss(M) == det_cofactor(M)


def test_snf_examples():
    assert smith_normal_form([[6, -3], [-3, 6]]) == [3, 9]
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([]) == []


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: square(n, -6, 6)))
def test_snf_product_and_divisibility(M):
    d = smith_normal_form(M)
    det = det_bareiss(M)
    nonzero = [x for x in d if x]
    if det:
        assert prod(d) == abs(det)
    else:
        assert 0 in d
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    assert d == sorted(nonzero) + [0] * (len(d) - len(nonzero))


def test_snf_matches_sympy(rng):
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    for _ in range(40):
        n = rng.randint(1, 5)
        M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        D = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
        expected = sorted(abs(int(D[i, i])) for i in range(n) if D[i, i])
        ours = smith_normal_form(M)
        assert [x for x in ours if x] == expected


def test_poly_det_small():
    b, c = PolyZ.var("b"), PolyZ.var("c")
    assert poly_det([[b, 0], [0, c]]) == b * c
    assert poly_det([[b, c], [c, b]]) == b * b - c * c
    assert poly_det([]) == 1


def test_poly_det_of_symbolic_g1():
    b, c = PolyZ.var("b"), PolyZ.var("c")
    assert poly_det(family_matrix(1, b, c)) == parse_poly("(3*b*c+6*b+6*c+5)^2")


def test_poly_det_specializes_to_integer_det():
    r = random.Random(7)
    for n in (2, 4, 6, 9):
        P = [[PolyZ({(r.randint(0, 1), r.randint(0, 1)): r.randint(-3, 3)}) + r.randint(-2, 2)
              for _ in range(n)] for _ in range(n)]
        D = poly_det(P)
        for _ in range(5):
            x, y = r.randint(-4, 4), r.randint(-4, 4)
            assert D.evaluate(x, y) == det_bareiss([[e.evaluate(x, y) for e in row] for row in P])


def test_signed_tree_sum_trefoil(trefoil):
    assert signed_tree_sum(trefoil) == -3
    assert abs(det_bareiss(goeritz_reduced(trefoil))) == 3


def test_signed_tree_sum_counts_trees_when_positive():
    k4 = SignedTaitGraph(4, 0, tuple((i, j, 1) for i in range(4) for j in range(i + 1, 4)))
    assert signed_tree_sum(k4) == 16  # Cayley: 4^(4-2)


def test_signed_tree_sum_refuses_large_graphs():
    g = SignedTaitGraph(2, 0, ((0, 1, 1),) * 25)
    with pytest.raises(TooLarge):
        signed_tree_sum(g)


def test_signed_tree_sum_matches_det(rng):
    for _ in range(150):
        g = random_graph(rng)
        assert abs(signed_tree_sum(g)) == abs(det_bareiss(goeritz_reduced(g)))


def test_matrix_text_round_trip():
    M = [[3, -3], [-3, 3]]
    assert read_matrix(format_matrix(M)) == M
    P = read_matrix("2\n3*b*c+6*b+6*c+5 0\n0 b\n")
    assert P[0][0] == parse_poly("3*b*c+6*b+6*c+5") and P[1][1] == PolyZ.var("b")
    with pytest.raises(ValueError):
        read_matrix("2\n1 2\n")
