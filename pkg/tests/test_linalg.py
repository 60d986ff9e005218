from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from affhur.linalg import (hnf, hnf_contains, hnf_reduce, identity_mat,
                           mat_det, mat_inv, mat_mul, mat_vec, rational_rank,
                           smith_normal_form, solve_integer, solve_rational)

small_int = st.integers(min_value=-6, max_value=6)


def square(n):
    return st.lists(st.lists(small_int, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(lambda r: tuple(map(tuple, r)))


def test_hnf_canonical_example():
    assert hnf([(2, 0), (0, 2), (1, 1)], 2) == ((1, 1), (0, 2))


def test_hnf_empty_and_zero():
    assert hnf([], 3) == ()
    assert hnf([(0, 0, 0)], 3) == ()


def test_hnf_is_basis_of_same_lattice():
    vecs = [(2, 4), (3, 1), (5, 5)]
    basis = hnf(vecs, 2)
    for v in vecs:
        assert hnf_contains(basis, v)
    # basis vectors generate nothing outside the original span: same HNF
    assert hnf(list(basis) + vecs, 2) == basis


def test_hnf_reduce_residue():
    basis = hnf([(1, 1), (0, 2)], 2)
    assert hnf_reduce(basis, (5, 3)) == (0, 0)
    assert hnf_reduce(basis, (0, 1)) == (0, 1)
    assert hnf_contains(basis, (5, 3))
    assert not hnf_contains(basis, (0, 1))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small_int, small_int, small_int),
                min_size=1, max_size=4))
def test_hnf_order_independent(vectors):
    assert hnf(vectors, 3) == hnf(list(reversed(vectors)), 3)


def test_det_and_inverse():
    m = ((2, 1), (1, 1))
    assert mat_det(m) == 1
    assert mat_mul([[int(x) for x in row] for row in mat_inv(m)], m) == \
        identity_mat(2)


@settings(max_examples=50, deadline=None)
@given(square(3))
def test_det_multiplicative(m):
    n = ((1, 2, 0), (0, 1, 1), (1, 0, 1))
    assert mat_det(mat_mul(m, n)) == mat_det(m) * mat_det(n)


def test_rational_rank():
    assert rational_rank([(1, 2), (2, 4)]) == 1
    assert rational_rank([(1, 0), (0, 1)]) == 2
    assert rational_rank([(0, 0)]) == 0


def test_solve_rational_inconsistent():
    assert solve_rational([(1, 1), (1, 1)], [0, 1]) is None


def test_solve_rational_with_nullspace():
    x, basis = solve_rational([(1, 1)], [2])
    assert x[0] + x[1] == 2
    assert len(basis) == 1
    assert basis[0][0] + basis[0][1] == 0


def test_smith_normal_form_diagonalizes():
    a = ((2, 4, 4), (-6, 6, 12), (10, 4, 16))
    divisors, u, v = smith_normal_form(a)
    d = mat_mul(mat_mul(u, a), v)
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i == j and i < len(divisors):
                assert x == divisors[i] > 0
            else:
                assert x == 0
    assert abs(mat_det(u)) == 1 and abs(mat_det(v)) == 1


def test_solve_integer():
    sol = solve_integer([(2, 0), (0, 3)], (4, 9))
    assert sol is not None
    x, kernel = sol
    assert x == (2, 3) and kernel == ()
    assert solve_integer([(2,)], (3,)) is None


def test_solve_integer_kernel():
    sol = solve_integer([(1, 1)], (3,))
    assert sol is not None
    x, kernel = sol
    assert x[0] + x[1] == 3
    assert len(kernel) == 1 and kernel[0][0] + kernel[0][1] == 0


@settings(max_examples=60, deadline=None)
@given(square(2), st.tuples(small_int, small_int))
def test_solve_integer_verified(m, rhs):
    sol = solve_integer(m, rhs)
    if sol is not None:
        x, _ = sol
        assert mat_vec(m, x) == rhs
    else:
        # over the rationals there must also be no *integral* solution;
        # check by brute force in a small box
        box = range(-40, 41)
        assert not any(mat_vec(m, (a, b)) == rhs for a in box for b in box
                       if abs(a) <= 8 and abs(b) <= 8)
