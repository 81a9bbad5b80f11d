import random
from fractions import Fraction

import pytest

from simhom import catalog
from simhom.chains import (
    Chain,
    boundary_of,
    build_chain_complex,
    build_relative,
    cone,
    induced_chain_map,
    sort_sign,
    subdivision_chain_map,
)
from simhom.complex import identity_map, validate
from simhom.errors import ConeNotDefined, NotSubcomplex
from simhom.exactlin import SparseMatrix

F = Fraction


def test_boundary_of_edge():
    x = validate([["a", "b"]], name="edge")
    cc = build_chain_complex(x)
    d1 = cc.boundary(1)
    # d[a,b] = [b] - [a]
    assert d1.to_dense() == [[F(-1)], [F(1)]]


def test_boundary_squared_zero_catalog():
    for name in catalog.COMPLEX_BUILDERS:
        cc = build_chain_complex(catalog.get_complex(name))
        for q in range(2, cc.dim + 1):
            assert (cc.boundary(q - 1) @ cc.boundary(q)).is_zero(), (name, q)


def test_coboundary_squared_zero_catalog():
    from simhom.chains import CochainComplex

    for name in ["octahedron", "torus", "genus2"]:
        cc = build_chain_complex(catalog.get_complex(name))
        cx = CochainComplex(cc)
        for q in range(cc.dim - 1):
            assert (cc.coboundary(q + 1) @ cc.coboundary(q)).is_zero(), (name, q)
            assert (cx.delta(q + 1) @ cx.delta(q)).is_zero(), (name, q)


def test_point_boundaries_trivial():
    cc = build_chain_complex(catalog.point())
    assert cc.boundary(0).rows == 0
    assert cc.boundary(1).cols == 0


def test_relative_disk_boundary_pair():
    disk = catalog.triangle2()
    circle = validate([["a", "b"], ["b", "c"], ["a", "c"]], name="circle")
    pair = build_relative(disk, circle)
    assert pair.n(2) == 1
    assert pair.n(1) == 0
    assert pair.n(0) == 0
    assert pair.boundary(2).is_zero()


def test_relative_empty_and_full():
    x = catalog.hexagon()
    empty = validate([], name="empty")
    pair = build_relative(x, empty)
    cc = build_chain_complex(x)
    for q in range(x.dim + 1):
        assert pair.n(q) == cc.n(q)
        assert pair.boundary(q) == cc.boundary(q)
    full = build_relative(x, x)
    assert all(full.n(q) == 0 for q in range(x.dim + 1))


def test_relative_rejects_non_subcomplex():
    x = catalog.hexagon()
    other = validate([["v0", "v2"]], name="chord")
    with pytest.raises(NotSubcomplex):
        build_relative(x, other)


def test_relative_short_exact_ranks():
    # 0 -> C(A) -> C(X) -> C(X,A) -> 0 degreewise
    x = catalog.octahedron()
    a = validate([["n", "e"], ["e", "s"], ["s", "w"], ["n", "w"]], name="equator")
    pair = build_relative(x, a)
    cca = build_chain_complex(a)
    ccx = build_chain_complex(x)
    for q in range(x.dim + 1):
        assert cca.n(q) + pair.n(q) == ccx.n(q)


def test_solve_homogeneous_boundary():
    # the fundamental-cycle candidate minus itself solves the homogeneous system
    from simhom.exactlin import solve

    cc = build_chain_complex(catalog.octahedron())
    d2 = cc.boundary(2)
    zero = tuple(F(0) for _ in range(d2.rows))
    assert solve(d2, zero) == tuple(F(0) for _ in range(d2.cols))


def test_sort_sign():
    assert sort_sign([0, 1, 2]) == 1
    assert sort_sign([1, 0, 2]) == -1
    assert sort_sign([2, 2]) == 0


def test_induced_identity_matrices():
    x = catalog.torus()
    f = identity_map(x)
    mats = induced_chain_map(f)
    for q in range(x.dim + 1):
        assert mats[q] == SparseMatrix.identity(x.n_simplices(q))


def test_induced_constant_collapses():
    x = catalog.hexagon()
    f = catalog.MAP_BUILDERS["hex_const_v0"]()
    mats = induced_chain_map(f)
    assert mats[1].is_zero()


def test_induced_wrap_is_chain_map():
    f = catalog.hex_wrap2()
    mats = induced_chain_map(f)
    ccx = build_chain_complex(f.domain)
    ccy = build_chain_complex(f.codomain)
    # each hexagon edge maps to a codomain edge with sign +-1
    for j in range(6):
        col = [mats[1].get(i, j) for i in range(3)]
        assert sorted(map(abs, col)) == [0, 0, 1]
    assert (mats[0] @ ccx.boundary(1)).entries == (ccy.boundary(1) @ mats[1]).entries


def test_chain_map_identity_on_catalog_maps():
    for name in ["hex_wrap2", "hex_wrap1", "oct_antipodal", "oct_rotate",
                 "torus_transpose", "torus_shift", "hex_reflect", "dodeca_wrap2"]:
        f = catalog.get_map(name)
        mats = induced_chain_map(f)
        ccx = build_chain_complex(f.domain)
        ccy = build_chain_complex(f.codomain)
        for q in range(1, f.domain.dim + 1):
            lhs = mats[q - 1] @ ccx.boundary(q)
            rhs = ccy.boundary(q) @ mats[q]
            assert lhs == rhs, (name, q)


def test_cone_of_vertex_is_signed_edge():
    x = validate([["a", "p"]], name="seg")
    cc = build_chain_complex(x)
    z = cc.chain_from_simplex((x.vertex_index["a"],))
    coned = cone("p", z, cc)
    # p.a = -[a,p] because p sorts after a
    assert coned.coeffs == (F(-1),)
    bd = boundary_of(coned, cc)
    # d(p.a) = a - p
    av, pv = x.vertex_index["a"], x.vertex_index["p"]
    assert bd.coeffs[av] == F(1) and bd.coeffs[pv] == F(-1)


def test_cone_of_zero_chain():
    cc = build_chain_complex(catalog.triangle2())
    z = cc.zero_chain(0)
    assert cone("a", z, cc).is_zero()


def test_cone_opposite_edge_gives_triangle():
    x = catalog.triangle2()
    cc = build_chain_complex(x)
    z = cc.chain_from_simplex(tuple(x.vertex_index[v] for v in ("b", "c")))
    coned = cone("a", z, cc)
    assert [abs(c) for c in coned.coeffs] == [F(1)]


def test_cone_identity_on_cone_chains():
    # d(p.z) = z - p.(dz) for chains in a genuine cone (the disk over "a")
    x = catalog.triangle2()
    cc = build_chain_complex(x)
    rng = random.Random(3)
    for _ in range(20):
        q = rng.choice([1])
        z = Chain(q, tuple(F(rng.randint(-2, 2)) for _ in range(cc.n(q))))
        lhs = boundary_of(cone("a", z, cc), cc)
        rhs_chain = cone("a", boundary_of(z, cc), cc)
        rhs = tuple(a - b for a, b in zip(z.coeffs, rhs_chain.coeffs))
        assert lhs.coeffs == rhs


def test_cone_degree_zero_rule():
    # d(p.z) = z - eps(z) p for 0-chains
    x = catalog.triangle2()
    cc = build_chain_complex(x)
    rng = random.Random(5)
    pv = x.vertex_index["a"]
    for _ in range(10):
        z = Chain(0, tuple(F(rng.randint(-2, 2)) for _ in range(3)))
        eps = sum(z.coeffs)
        lhs = boundary_of(cone("a", z, cc), cc)
        expected = list(z.coeffs)
        expected[pv] -= eps
        assert lhs.coeffs == tuple(expected)


def test_cone_not_defined():
    x = catalog.hexagon()
    cc = build_chain_complex(x)
    z = cc.chain_from_simplex(tuple(x.vertex_index[v] for v in ("v2", "v3")))
    with pytest.raises(ConeNotDefined):
        cone("v0", z, cc)


def test_subdivision_edge():
    x = validate([["a", "b"]], name="edge")
    sd_map = subdivision_chain_map(x)
    m1 = sd_map.matrix(1)
    col = [m1.get(i, 0) for i in range(m1.rows)]
    assert sorted(map(abs, col)) == [1, 1]
    # the two halves carry coherent signs: boundary collapses to b' - a'
    bd = sd_map.target_cc.boundary(1).apply(tuple(col))
    a_new = sd_map.subdivided.vertex_index["a"]
    b_new = sd_map.subdivided.vertex_index["b"]
    assert bd[a_new] == F(-1) and bd[b_new] == F(1)
    assert sum(map(abs, bd)) == 2  # barycenter cancels


def test_subdivision_vertex():
    x = catalog.point()
    sd_map = subdivision_chain_map(x)
    assert sd_map.matrix(0).to_dense() == [[F(1)]]


def test_subdivision_two_simplex_six_pieces():
    x = validate([["a", "b", "c"]], name="t")
    sd_map = subdivision_chain_map(x)
    m2 = sd_map.matrix(2)
    col = [m2.get(i, 0) for i in range(m2.rows)]
    assert sum(1 for c in col if c != 0) == 6
    assert all(abs(c) == 1 for c in col if c != 0)


def test_subdivision_is_chain_map():
    for name in ["hexagon", "octahedron", "torus7", "disk"]:
        x = catalog.get_complex(name)
        sd_map = subdivision_chain_map(x)
        for q in range(1, x.dim + 1):
            lhs = sd_map.target_cc.boundary(q) @ sd_map.matrix(q)
            rhs = sd_map.matrix(q - 1) @ sd_map.source_cc.boundary(q)
            assert lhs == rhs, (name, q)
