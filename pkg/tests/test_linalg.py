"""Matrix layer checks.  The intersection routine is validated against a
brute-force span enumeration on small fields."""

import random

from grshull import field_create, field_of_order
from grshull.linalg import Matrix

F3 = field_create(3)
F4 = field_of_order(4)


def span_set(M):
    """All vectors in the row space, as a set of tuples (small fields only)."""
    F = M.field
    vecs = {tuple([0] * M.ncols)}
    for row in M.rows:
        new = set()
        for v in vecs:
            for c in range(F.q):
                new.add(tuple(F.add(a, F.mul(c, b)) for a, b in zip(v, row)))
        vecs = new
    return vecs


def test_rref_known_matrix():
    M = Matrix(F3, [[1, 2, 0], [2, 1, 1], [1, 1, 1]])
    red, pivots = M.rref()
    assert pivots == (0, 1, 2)
    assert red == Matrix.identity(F3, 3)
    assert M.rank() == 3

    M2 = Matrix(F3, [[1, 2, 0], [2, 1, 0]])
    red2, pivots2 = M2.rref()
    assert pivots2 == (0,)
    assert red2.rows == [[1, 2, 0], [0, 0, 0]]


def test_nullspace_dimension_and_membership():
    rng = random.Random(11)
    for _ in range(30):
        nr = rng.randrange(1, 4)
        nc = rng.randrange(1, 6)
        M = Matrix(F3, [[rng.randrange(3) for _ in range(nc)] for _ in range(nr)])
        N = M.nullspace()
        assert N.nrows == nc - M.rank()
        for row in N.rows:
            assert all(v == 0 for v in M.matvec(row))
        assert N.rank() == N.nrows  # independent basis


def test_nullspace_of_empty_matrix_is_everything():
    M = Matrix.zero_rows(F3, 4)
    assert M.rank() == 0
    assert M.nullspace().row_space_equal(Matrix.identity(F3, 4))


def test_row_space_equal_under_scaling_and_permutation():
    g = F4.gen_pow(1).rep
    M = Matrix(F4, [[1, g, 0], [0, 1, 1]])
    scaled = Matrix(F4, [F4.row_scale([0, 1, 1], g), F4.row_scale([1, g, 0], g)])
    assert M.row_space_equal(scaled)
    assert not M.row_space_equal(Matrix(F4, [[1, 0, 0]]))
    assert not M.row_space_equal(Matrix(F3, [[1, 0, 0]]))  # different field


def test_row_space_contains():
    M = Matrix(F3, [[1, 0, 2], [0, 1, 1]])
    inside = Matrix(F3, [[1, 1, 0], [2, 0, 1]])
    outside = Matrix(F3, [[0, 0, 1]])
    assert M.row_space_contains(inside)
    assert not M.row_space_contains(outside)
    assert M.row_space_contains(Matrix.zero_rows(F3, 3))


def test_intersection_against_bruteforce():
    rng = random.Random(2026)
    for F in (field_create(2), F3, F4):
        for _ in range(25):
            nc = rng.randrange(2, 6)
            A = Matrix(F, [[rng.randrange(F.q) for _ in range(nc)] for _ in range(rng.randrange(0, 4))], nc)
            B = Matrix(F, [[rng.randrange(F.q) for _ in range(nc)] for _ in range(rng.randrange(0, 4))], nc)
            got = A.row_space_intersect(B)
            expect = span_set(A) & span_set(B)
            assert span_set(got) == expect
            # canonical: re-running and reordering input rows changes nothing
            assert A.row_space_intersect(B) == got
            A_perm = Matrix(F, list(reversed(A.rows)), nc)
            assert A_perm.row_space_intersect(B) == got


def test_intersection_edges():
    A = Matrix(F3, [[1, 0, 0], [0, 1, 0]])
    B = Matrix(F3, [[0, 0, 1]])
    assert A.row_space_intersect(B).nrows == 0
    assert A.row_space_intersect(A) == A.row_space_basis()


def test_product_and_transpose():
    A = Matrix(F3, [[1, 2], [0, 1]])
    B = Matrix(F3, [[1, 1], [2, 0]])
    assert (A * B).rows == [[2, 1], [2, 0]]
    assert A.transpose().rows == [[1, 0], [2, 1]]
    assert (A * Matrix.identity(F3, 2)) == A


def test_stack_augment():
    A = Matrix(F3, [[1, 2]])
    B = Matrix(F3, [[0, 1]])
    assert A.stack(B).rows == [[1, 2], [0, 1]]
    assert A.augment(B).rows == [[1, 2, 0, 1]]
    assert Matrix.zero_rows(F3, 2).stack(A) == A
