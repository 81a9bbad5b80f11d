import random
from fractions import Fraction

from simhom.exactlin import (
    Solver,
    SparseMatrix,
    dense_inv,
    dense_mul,
    image_basis,
    kernel_basis,
    lp_feasible,
    qstr,
    rank,
    solve,
    vec_is_zero,
)


F = Fraction


# d_1 of the boundary circle of one 2-simplex: vertices a,b,c; edges ab,ac,bc.
TRIANGLE_D1 = SparseMatrix.from_dense(
    [
        [-1, -1, 0],
        [1, 0, -1],
        [0, 1, 1],
    ]
)


def test_rank_examples():
    assert rank(TRIANGLE_D1) == 2
    assert rank(SparseMatrix.zero(3, 4)) == 0
    assert rank(SparseMatrix.identity(4)) == 4


def test_kernel_triangle_loop():
    basis = kernel_basis(TRIANGLE_D1)
    assert len(basis) == 1
    assert vec_is_zero(TRIANGLE_D1.apply(basis[0]))


def test_kernel_trivial_cases():
    assert kernel_basis(SparseMatrix.identity(3)) == []
    row = SparseMatrix.from_dense([[1, 1, 1]])
    assert len(kernel_basis(row)) == 2


def test_image_basis_dims():
    img = image_basis(TRIANGLE_D1)
    assert len(img) == 2
    assert len(image_basis(SparseMatrix.zero(2, 2))) == 0


def test_solve_identity_and_inconsistent():
    i3 = SparseMatrix.identity(3)
    b = (F(1), F(-2), F("5/3"))
    assert solve(i3, b) == b
    assert solve(SparseMatrix.zero(2, 2), (F(1), F(0))) is None
    # homogeneous always solvable
    assert solve(SparseMatrix.zero(2, 2), (F(0), F(0))) == (F(0), F(0))


def test_solver_reuse():
    s = Solver(TRIANGLE_D1)
    b = TRIANGLE_D1.apply((F(2), F(-1), F(3)))
    x = s.solve(b)
    assert x is not None
    assert TRIANGLE_D1.apply(x) == b
    assert s.solve((F(1), F(1), F(1))) is None  # not in the column space


def test_rank_nullity_random():
    rng = random.Random(20240811)
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = SparseMatrix.from_dense(
            [
                [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)]
                for _ in range(rows)
            ]
        )
        r = rank(m)
        ker = kernel_basis(m)
        assert r + len(ker) == cols
        for v in ker:
            assert vec_is_zero(m.apply(v))


def test_solve_random_consistency():
    rng = random.Random(7)
    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = SparseMatrix.from_dense(
            [[F(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(rows)]
        )
        x0 = tuple(F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(cols))
        b = m.apply(x0)
        x = solve(m, b)
        assert x is not None
        assert m.apply(x) == b


def test_matmul_transpose_roundtrip():
    a = SparseMatrix.from_dense([[1, 2], [0, F("1/2")]])
    b = SparseMatrix.from_dense([[3, 0], [1, -1]])
    prod = a @ b
    assert prod.to_dense() == [[F(5), F(-2)], [F("1/2"), F("-1/2")]]
    assert a.transpose().transpose() == a


def test_dense_inverse():
    a = ((F(2), F(1)), (F(1), F(1)))
    inv = dense_inv(a)
    assert dense_mul(a, inv) == ((F(1), F(0)), (F(0), F(1)))
    assert dense_inv(((F(1), F(2)), (F(2), F(4)))) is None


def test_qstr():
    assert qstr(F(3, 2)) == "3/2"
    assert qstr(F(-4, 2)) == "-2"
    assert qstr(F(0)) == "0"


def test_lp_trivial_box():
    # x >= 0 and x <= 1
    pt = lp_feasible([([1], ">=", 0), ([1], "<=", 1)], 1)
    assert pt is not None
    assert 0 <= pt[0] <= 1


def test_lp_infeasible():
    assert lp_feasible([([1], ">=", 1), ([1], "<=", 0)], 1) is None


def test_lp_barycentric_slice():
    # Delta^2 cap {t0 = t1}: t0+t1+t2 = 1, all >= 0, t0 - t1 = 0.
    cons = [
        ([1, 1, 1], "==", 1),
        ([1, -1, 0], "==", 0),
        ([1, 0, 0], ">=", 0),
        ([0, 1, 0], ">=", 0),
        ([0, 0, 1], ">=", 0),
    ]
    pt = lp_feasible(cons, 3)
    assert pt is not None
    assert sum(pt) == 1
    assert pt[0] == pt[1]
    assert all(c >= 0 for c in pt)
    # (1/2, 1/2, 0) is one admissible witness; any exact solution passes.


def test_lp_equalities_only_inconsistent():
    cons = [([1, 1], "==", 1), ([2, 2], "==", 3)]
    assert lp_feasible(cons, 2) is None


def test_lp_never_reports_false_infeasibility():
    # plant a known feasible point, then generate constraints it satisfies
    rng = random.Random(424242)
    for _ in range(40):
        nv = rng.randint(1, 5)
        x0 = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nv)]
        cons = []
        for _ in range(rng.randint(1, 7)):
            coeffs = [F(rng.randint(-3, 3)) for _ in range(nv)]
            val = sum(c * x for c, x in zip(coeffs, x0))
            kind = rng.choice(["<=", ">=", "=="])
            if kind == "<=":
                cons.append((coeffs, "<=", val + F(rng.randint(0, 2))))
            elif kind == ">=":
                cons.append((coeffs, ">=", val - F(rng.randint(0, 2))))
            else:
                cons.append((coeffs, "==", val))
        pt = lp_feasible(cons, nv)
        assert pt is not None
        for coeffs, op, rhs in cons:
            v = sum(c * x for c, x in zip(coeffs, pt))
            assert (v <= rhs) if op == "<=" else (v >= rhs) if op == ">=" else (v == rhs)


def test_exactness_roundtrip():
    # arithmetic introduces no rounding: scaling by q then 1/q reconstructs
    rng = random.Random(5150)
    m = SparseMatrix.from_dense(
        [[F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)] for _ in range(4)]
    )
    q = F(355, 113)
    assert m.scale(q).scale(1 / q) == m
    v = tuple(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5))
    forward = m.apply(v)
    assert m.scale(q).apply(v) == tuple(q * x for x in forward)


def test_lp_random_feasible_points_satisfy_all():
    rng = random.Random(99)
    for _ in range(25):
        nv = rng.randint(1, 4)
        cons = []
        for _ in range(rng.randint(1, 6)):
            coeffs = [F(rng.randint(-2, 2)) for _ in range(nv)]
            op = rng.choice(["<=", ">=", "=="])
            cons.append((coeffs, op, F(rng.randint(-2, 2))))
        pt = lp_feasible(cons, nv)
        if pt is None:
            continue
        for coeffs, op, rhs in cons:
            val = sum(c * x for c, x in zip(coeffs, pt))
            if op == "<=":
                assert val <= rhs
            elif op == ">=":
                assert val >= rhs
            else:
                assert val == rhs
