"""Homology and cohomology over Q with explicit bases.

A GradedSpace keeps, per degree, a list of representative cycles (or
cocycles) whose classes form a basis.  Representatives are the canonical
kernel-basis vectors that remain independent modulo the boundary image,
selected by one deterministic elimination, so identical inputs always
produce identical bases.  Classes are extracted by exact solving against
the column space [boundaries | representatives]; induced maps are computed
this way rather than by transposition shortcuts.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chains import (
    Chain,
    ChainComplex,
    RelativePair,
    build_chain_complex,
    build_relative,
    induced_chain_map,
)
from .complex import SimplicialComplex, SimplicialMap
from .errors import DegreeMismatch, HypothesisViolated
from .exactlin import (
    ONE,
    ZERO,
    Solver,
    SparseMatrix,
    image_basis,
    kernel_basis,
    pivot_columns,
    vec_dot,
)

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"


class GradedSpace:
    """Basis of H_* or H^* of a (relative) chain complex."""

    def __init__(self, kind, cc, dims, reps, boundaries):
        self.kind = kind
        self.cc = cc
        self.dims = dims  # degree -> Betti number
        self.reps = reps  # degree -> list of representative vectors
        self._boundaries = boundaries  # degree -> list of boundary vectors
        self._solvers = {}

    @property
    def dim(self):
        return self.cc.dim

    def betti(self, q: int) -> int:
        return self.dims.get(q, 0)

    def betti_vector(self):
        return tuple(self.betti(q) for q in range(max(self.dim + 1, 1)))

    def representatives(self, q: int):
        return self.reps.get(q, [])

    def _solver(self, q: int):
        if q not in self._solvers:
            cols = [list(b) for b in self._boundaries.get(q, [])] + [
                list(r) for r in self.reps.get(q, [])
            ]
            ncells = self.cc.n(q) if hasattr(self.cc, "n") else 0
            m = SparseMatrix.from_columns(cols, ncells)
            self._solvers[q] = (Solver(m), len(self._boundaries.get(q, [])))
        return self._solvers[q]

    def class_of(self, q: int, vec) -> tuple:
        """Coefficients of a cycle's class over the degree-q basis."""
        solver, nb = self._solver(q)
        sol = solver.solve(list(vec))
        if sol is None:
            raise ValueError(f"vector is not a {self.kind} cycle in degree {q}")
        return tuple(sol[nb:])

    def chain_of(self, q: int, coeffs) -> tuple:
        """A representative chain of the class with the given coefficients."""
        reps = self.reps.get(q, [])
        if len(coeffs) != len(reps):
            raise DegreeMismatch(f"expected {len(reps)} coefficients in degree {q}")
        n = self.cc.n(q)
        out = [ZERO] * n
        for c, r in zip(coeffs, reps):
            if c:
                for i, v in enumerate(r):
                    out[i] += c * v
        return tuple(out)


@dataclass(frozen=True)
class HClass:
    """A (co)homology class: degree plus coefficients over the basis."""

    space: GradedSpace
    degree: int
    coeffs: tuple

    def chain(self):
        return self.space.chain_of(self.degree, self.coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if self.space is not other.space or self.degree != other.degree:
            raise DegreeMismatch("classes live in different spaces or degrees")
        return HClass(
            self.space,
            self.degree,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def scale(self, c):
        c = Fraction(c)
        return HClass(self.space, self.degree, tuple(c * a for a in self.coeffs))

    def __sub__(self, other):
        return self + other.scale(-1)


def basis_class(space: GradedSpace, q: int, i: int) -> HClass:
    coeffs = [ZERO] * space.betti(q)
    coeffs[i] = ONE
    return HClass(space, q, tuple(coeffs))


def _homology_at(out_matrix, in_matrix):
    """Cycle reps modulo boundaries for one degree.

    ``out_matrix`` is the differential leaving the degree, ``in_matrix`` the
    one entering it.  Returns (betti, reps, boundary basis).
    """
    cycles = kernel_basis(out_matrix)
    bounds = image_basis(in_matrix)
    if not cycles:
        return 0, [], bounds
    ncells = out_matrix.cols
    cols = [list(b) for b in bounds] + [list(z) for z in cycles]
    m = SparseMatrix.from_columns(cols, ncells)
    nb = len(bounds)
    kept = [cycles[c - nb] for c in pivot_columns(m) if c >= nb]
    return len(kept), kept, bounds


def compute_homology(cc) -> GradedSpace:
    """Homology of a ChainComplex or RelativePair, with explicit bases."""
    dims, reps, bounds = {}, {}, {}
    for q in range(cc.dim + 1):
        b, r, bd = _homology_at(cc.boundary(q), cc.boundary(q + 1))
        dims[q], reps[q], bounds[q] = b, r, bd
    return GradedSpace(HOMOLOGY, cc, dims, reps, bounds)


def compute_cohomology(cc) -> GradedSpace:
    """Cohomology via the transposed differentials."""
    dims, reps, bounds = {}, {}, {}
    for q in range(cc.dim + 1):
        out = cc.boundary(q + 1).transpose()  # delta^q
        inc = cc.boundary(q).transpose()  # delta^{q-1}
        b, r, bd = _homology_at(out, inc)
        dims[q], reps[q], bounds[q] = b, r, bd
    return GradedSpace(COHOMOLOGY, cc, dims, reps, bounds)


class Space:
    """A complex bundled with its lazily computed (co)homology."""

    def __init__(self, x: SimplicialComplex):
        self.complex = x
        self.cc = build_chain_complex(x)
        self._homology = None
        self._cohomology = None

    @property
    def homology(self) -> GradedSpace:
        if self._homology is None:
            self._homology = compute_homology(self.cc)
        return self._homology

    @property
    def cohomology(self) -> GradedSpace:
        if self._cohomology is None:
            self._cohomology = compute_cohomology(self.cc)
        return self._cohomology

    @property
    def dim(self):
        return self.complex.dim

    def __repr__(self):
        return f"Space({self.complex.name!r})"


@dataclass
class GradedMap:
    """Per-degree matrices between graded spaces."""

    source: GradedSpace
    target: GradedSpace
    variance: str  # "covariant" | "contravariant"
    matrices: dict  # degree -> dense tuple-of-tuples (target dim x source dim)

    def matrix(self, q: int):
        bt = self.target.betti(q)
        bs = self.source.betti(q)
        return self.matrices.get(
            q, tuple(tuple(ZERO for _ in range(bs)) for _ in range(bt))
        )

    def apply(self, cls: HClass) -> HClass:
        from .exactlin import dense_vec

        if cls.space is not self.source:
            raise DegreeMismatch("class does not live in the map's source")
        return HClass(
            self.target, cls.degree, dense_vec(self.matrix(cls.degree), cls.coeffs)
        )

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        from .exactlin import dense_mul

        if other.target is not self.source:
            raise DegreeMismatch("graded maps are not composable")
        degrees = set(self.matrices) | set(other.matrices)
        mats = {
            q: dense_mul(self.matrix(q), other.matrix(q)) for q in sorted(degrees)
        }
        variance = (
            "covariant"
            if self.variance == other.variance
            else "contravariant"
        )
        return GradedMap(other.source, self.target, variance, mats)


def _push_classes(matrices, source: GradedSpace, target: GradedSpace) -> dict:
    out = {}
    max_q = max(source.dim, 0)
    for q in range(max_q + 1):
        bs = source.betti(q)
        bt = target.betti(q)
        cols = []
        for i in range(bs):
            vec = source.chain_of(q, tuple(ONE if k == i else ZERO for k in range(bs)))
            m = matrices.get(q)
            pushed = m.apply(vec) if m is not None else tuple([ZERO] * target.cc.n(q))
            cols.append(target.class_of(q, pushed))
        out[q] = tuple(
            tuple(cols[i][r] for i in range(bs)) for r in range(bt)
        )
    return out


def induced_map(f: SimplicialMap, source: GradedSpace, target: GradedSpace, variance=HOMOLOGY) -> GradedMap:
    """Induced map on homology (covariant) or cohomology (contravariant).

    For homology, source/target are the graded spaces of f's domain and
    codomain; for cohomology they are the codomain's and domain's.
    """
    chain = induced_chain_map(f)
    if variance in (HOMOLOGY, "covariant"):
        mats = _push_classes(chain, source, target)
        return GradedMap(source, target, "covariant", mats)
    # Contravariant: pull cochains back along the transposed chain map.
    pulled = {q: m.transpose() for q, m in chain.items()}
    mats = _push_classes(pulled, source, target)
    return GradedMap(source, target, "contravariant", mats)


def kronecker(alpha: HClass, sigma: HClass) -> Fraction:
    """Evaluation of a cohomology class on a homology class."""
    if alpha.space.kind != COHOMOLOGY or sigma.space.kind != HOMOLOGY:
        raise DegreeMismatch("kronecker expects (cohomology, homology)")
    if alpha.space.cc is not sigma.space.cc:
        raise DegreeMismatch("classes live on different complexes")
    if alpha.degree != sigma.degree:
        raise DegreeMismatch(
            f"degree mismatch: {alpha.degree} vs {sigma.degree}"
        )
    return vec_dot(alpha.chain(), sigma.chain())


def augmentation(sigma: HClass) -> Fraction:
    """Coefficient sum of a degree-0 homology class."""
    if sigma.degree != 0:
        raise DegreeMismatch("augmentation is defined in degree 0")
    return sum(sigma.chain(), ZERO)


# ---------------------------------------------------------------------------
# pair sequences and excision
# ---------------------------------------------------------------------------


@dataclass
class PairSequence:
    """The long exact homology sequence of a subcomplex pair."""

    ambient: Space
    sub: Space
    pair: GradedSpace
    i_star: GradedMap
    j_star: dict  # degree -> matrix H_q(X) -> H_q(X, A)
    connecting: dict  # degree -> matrix H_q(X, A) -> H_{q-1}(A)
    exact: bool
    details: list


def _inclusion_chain_matrices(sub: SimplicialComplex, amb: SimplicialComplex):
    out = {}
    for q in range(sub.dim + 1):
        ent = {}
        for j, s in enumerate(sub.basis(q)):
            target = tuple(sorted(amb.vertex_index[v] for v in sub.simplex_names(s)))
            ent[(amb.simplex_id(q, target), j)] = ONE
        out[q] = SparseMatrix(amb.n_simplices(q), sub.n_simplices(q), ent)
    return out


def long_exact_sequence(x: SimplicialComplex, a: SimplicialComplex) -> PairSequence:
    """Assemble i_*, j_*, and the zig-zag connecting map, then verify
    image = kernel at every node by exact rank identities."""
    pair_cc = build_relative(x, a)
    sx, sa = Space(x), Space(a)
    hx, ha = sx.homology, sa.homology
    hp = compute_homology(pair_cc)

    incl = _inclusion_chain_matrices(a, x)
    i_mats = _push_classes(incl, ha, hx)
    i_star = GradedMap(ha, hx, "covariant", i_mats)

    # j_*: project a cycle of X onto the quotient basis.
    pair_index = {
        q: {s: k for k, s in enumerate(pair_cc.basis(q))} for q in range(x.dim + 1)
    }
    j_mats = {}
    for q in range(x.dim + 1):
        cols = []
        for i in range(hx.betti(q)):
            vec = hx.chain_of(q, tuple(ONE if k == i else ZERO for k in range(hx.betti(q))))
            proj = [ZERO] * pair_cc.n(q)
            for idx, s in enumerate(x.basis(q)):
                if s in pair_index[q]:
                    proj[pair_index[q][s]] = vec[idx]
            cols.append(hp.class_of(q, tuple(proj)))
        j_mats[q] = tuple(
            tuple(cols[i][r] for i in range(hx.betti(q))) for r in range(hp.betti(q))
        )

    # Connecting map: lift a relative cycle, take its boundary, restrict to A.
    a_index = {
        q: {
            tuple(sorted(x.vertex_index[v] for v in a.simplex_names(s))): k
            for k, s in enumerate(a.basis(q))
        }
        for q in range(a.dim + 1)
    }
    d_mats = {}
    for q in range(x.dim + 1):
        cols = []
        for i in range(hp.betti(q)):
            rel = hp.chain_of(q, tuple(ONE if k == i else ZERO for k in range(hp.betti(q))))
            lift = [ZERO] * x.n_simplices(q)
            for idx, s in enumerate(pair_cc.basis(q)):
                lift[x.simplex_id(q, s)] = rel[idx]
            bd = sx.cc.boundary(q).apply(lift) if q >= 1 else ()
            restricted = [ZERO] * a.n_simplices(q - 1)
            for idx, s in enumerate(x.basis(q - 1)):
                if bd and bd[idx]:
                    if s not in a_index.get(q - 1, {}):
                        raise AssertionError("relative cycle boundary left A")
                    restricted[a_index[q - 1][s]] = bd[idx]
            cols.append(
                ha.class_of(q - 1, tuple(restricted)) if q >= 1 else ()
            )
        d_mats[q] = tuple(
            tuple(cols[i][r] for i in range(hp.betti(q)))
            for r in range(ha.betti(q - 1) if q >= 1 else 0)
        )

    exact, details = _check_exactness(ha, hx, hp, i_mats, j_mats, d_mats, x.dim)
    return PairSequence(sx, sa, hp, i_star, j_mats, d_mats, exact, details)


def _mat_rank(m) -> int:
    if not m or not m[0]:
        return 0
    from .exactlin import rank

    return rank(SparseMatrix.from_dense(m))


def _mat_mul_zero(a, b) -> bool:
    from .exactlin import dense_mul

    if not a or not b or not a[0] or not b[0]:
        return True
    prod = dense_mul(a, b)
    return all(all(v == 0 for v in row) for row in prod)


def _check_exactness(ha, hx, hp, i_mats, j_mats, d_mats, dim):
    details = []
    ok = True
    for q in range(dim + 1):
        # at H_q(X): im i = ker j
        bi = i_mats.get(q, ())
        bj = j_mats.get(q, ())
        comp_zero = _mat_mul_zero(bj, bi)
        r_im = _mat_rank(bi)
        nullity = hx.betti(q) - _mat_rank(bj)
        node_ok = comp_zero and r_im == nullity
        details.append(("H(X)", q, node_ok))
        ok = ok and node_ok
        # at H_q(X, A): im j = ker d
        bd = d_mats.get(q, ())
        comp_zero = _mat_mul_zero(bd, bj)
        r_im = _mat_rank(bj)
        nullity = hp.betti(q) - _mat_rank(bd)
        node_ok = comp_zero and r_im == nullity
        details.append(("H(X,A)", q, node_ok))
        ok = ok and node_ok
        # at H_{q-1}(A): im d = ker i
        if q >= 1:
            bi_prev = i_mats.get(q - 1, ())
            comp_zero = _mat_mul_zero(bi_prev, bd)
            r_im = _mat_rank(bd)
            nullity = ha.betti(q - 1) - _mat_rank(bi_prev)
            node_ok = comp_zero and r_im == nullity
            details.append(("H(A)", q - 1, node_ok))
            ok = ok and node_ok
    return ok, details


class _QuotientByBasis:
    """Chain complex with a prescribed basis inside an ambient complex.

    Faces outside the basis are dropped; this is the carrier used by the
    excised pair (X - U, A - U).
    """

    def __init__(self, ambient: SimplicialComplex, kept):
        self.ambient = ambient
        self.dim = ambient.dim
        self._basis = {q: tuple(kept.get(q, ())) for q in range(ambient.dim + 1)}
        self._index = {
            q: {s: k for k, s in enumerate(level)} for q, level in self._basis.items()
        }
        self._boundary = {}

    def basis(self, q):
        return self._basis.get(q, ())

    def n(self, q):
        return len(self.basis(q))

    def boundary(self, q):
        if q in self._boundary:
            return self._boundary[q]
        rows, cols = self.n(q - 1), self.n(q)
        ent = {}
        if q >= 1:
            lower = self._index.get(q - 1, {})
            for j, s in enumerate(self.basis(q)):
                for i in range(len(s)):
                    face = s[:i] + s[i + 1 :]
                    if face in lower:
                        key = (lower[face], j)
                        ent[key] = ent.get(key, ZERO) + (-ONE) ** i
        m = SparseMatrix(rows, cols, ent)
        self._boundary[q] = m
        return m


@dataclass
class ExcisionReport:
    isomorphism: bool
    dims_excised: tuple
    dims_pair: tuple
    details: list


def excision_check(x: SimplicialComplex, a: SimplicialComplex, u) -> ExcisionReport:
    """Verify H_*(X - U, A - U) -> H_*(X, A) is an isomorphism.

    ``u`` is a collection of simplices (tuples of vertex names) forming an
    open subset of A: every simplex of U must lie in A, and A - U must stay
    face-closed.  Raises HypothesisViolated otherwise.
    """
    u_idx = set()
    for s in u:
        t = tuple(sorted(x.vertex_index[v] for v in s))
        if not x.has_simplex(t):
            raise HypothesisViolated(f"U contains a non-simplex {s!r}")
        u_idx.add(t)

    a_simplices = {
        q: {
            tuple(sorted(x.vertex_index[v] for v in a.simplex_names(s)))
            for s in a.basis(q)
        }
        for q in range(a.dim + 1)
    }
    all_a = set().union(*a_simplices.values()) if a_simplices else set()
    if not u_idx <= all_a:
        raise HypothesisViolated("U is not contained in A")
    a_minus_u = all_a - u_idx
    for s in a_minus_u:
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            if face and face in u_idx:
                raise HypothesisViolated(
                    "A - U is not face-closed: U is not open inside A"
                )

    pair = build_relative(x, a)
    h_pair = compute_homology(pair)

    kept = {}
    for q in range(x.dim + 1):
        kept[q] = [
            s for s in x.basis(q) if s not in u_idx and s not in a_minus_u
        ]
    excised = _QuotientByBasis(x, kept)
    h_exc = compute_homology(excised)

    pair_index = {
        q: {s: k for k, s in enumerate(pair.basis(q))} for q in range(x.dim + 1)
    }
    details = []
    iso = True
    for q in range(x.dim + 1):
        be, bp = h_exc.betti(q), h_pair.betti(q)
        if be != bp:
            iso = False
            details.append((q, False))
            continue
        cols = []
        for i in range(be):
            vec = h_exc.chain_of(q, tuple(ONE if k == i else ZERO for k in range(be)))
            mapped = [ZERO] * pair.n(q)
            for idx, s in enumerate(excised.basis(q)):
                if vec[idx]:
                    mapped[pair_index[q][s]] = vec[idx]
            cols.append(h_pair.class_of(q, tuple(mapped)))
        mat = [[cols[i][r] for i in range(be)] for r in range(bp)]
        full = _mat_rank(mat) == bp
        iso = iso and full
        details.append((q, full))
    return ExcisionReport(
        isomorphism=iso,
        dims_excised=tuple(h_exc.betti(q) for q in range(x.dim + 1)),
        dims_pair=tuple(h_pair.betti(q) for q in range(x.dim + 1)),
        details=details,
    )
