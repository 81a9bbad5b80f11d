"""Cup, cap and cross products, and the tensor model of X x Y.

Chain-level conventions, fixed once and tested exactly:

* cup: Alexander-Whitney.  (a u b)(s) = a(front p-face of s) * b(back
  q-face of s) over the global vertex order.
* cap: a cocycle b of degree q caps a (p+q)-simplex s to b(back q-face) *
  (front p-face).  With the AW cup this makes (a u b, s) = (a, b n s) and
  (a u b) n s = a n (b n s) hold on the nose at chain level, and
  d(b n s) = b n ds + (-1)^p (db) n s with p the degree of the result.

Products of spaces are modeled algebraically: over Q the Kuenneth maps are
isomorphisms, so H(X x Y) is carried by formal tensors of basis classes.
The Koszul signs of the cross/cup/cap interplay follow the product laws:

* (a x b, s x t) = (-1)^{|t||a|} (a, s)(b, t)
* (a x b) u (c x d) = (-1)^{|b||c|} (a u c) x (b u d)
* (a x b) n (s x t) = (-1)^{|b||s|} (a n s) x (b n t)
* t_*(s x t) = (-1)^{|s||t|} t x s

The diagonal pullback on X x X is computed as cup, extended bilinearly.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chains import Chain
from .errors import DegreeMismatch
from .exactlin import ONE, ZERO
from .homology import (
    COHOMOLOGY,
    HOMOLOGY,
    GradedMap,
    GradedSpace,
    HClass,
    Space,
    basis_class,
    kronecker,
)

# ---------------------------------------------------------------------------
# chain-level cup and cap
# ---------------------------------------------------------------------------


def cup_cochain(cc, p: int, q: int, avec, bvec):
    """AW cup of a p-cochain and a q-cochain, as a (p+q)-cochain vector."""
    n = p + q
    out = [ZERO] * cc.n(n)
    if not out:
        return tuple(out)
    idx_p = cc.complex.index[p]
    idx_q = cc.complex.index[q]
    for m, s in enumerate(cc.basis(n)):
        a = avec[idx_p[s[: p + 1]]]
        if a == 0:
            continue
        b = bvec[idx_q[s[p:]]]
        if b:
            out[m] = a * b
    return tuple(out)


def cap_chain(cc, q: int, bvec, sigma_degree: int, svec):
    """Cap a q-cocycle against a chain of degree sigma_degree."""
    p = sigma_degree - q
    if p < 0:
        raise DegreeMismatch("cap would land in negative degree")
    out = [ZERO] * cc.n(p)
    idx_q = cc.complex.index[q]
    for m, s in enumerate(cc.basis(sigma_degree)):
        c = svec[m]
        if c == 0:
            continue
        b = bvec[idx_q[s[p:]]]
        if b:
            out[cc.complex.index[p][s[: p + 1]]] += c * b
    return tuple(out)


def unit_cocycle(space: Space) -> HClass:
    """The class of the constant-1 cocycle in degree 0."""
    ones = tuple([ONE] * space.cc.n(0))
    return HClass(space.cohomology, 0, space.cohomology.class_of(0, ones))


def cup(a: HClass, b: HClass, space: Space) -> HClass:
    """Cup product of cohomology classes on one complex."""
    if a.space is not space.cohomology or b.space is not space.cohomology:
        raise DegreeMismatch("cup expects cohomology classes of the given space")
    p, q = a.degree, b.degree
    prod = cup_cochain(space.cc, p, q, a.chain(), b.chain())
    return HClass(space.cohomology, p + q, space.cohomology.class_of(p + q, prod))


def cap(a: HClass, sigma: HClass, space: Space) -> HClass:
    """Cap product H^q x H_{p+q} -> H_p on one complex."""
    if a.space is not space.cohomology or sigma.space is not space.homology:
        raise DegreeMismatch("cap expects (cohomology, homology) on the given space")
    if a.degree > sigma.degree:
        raise DegreeMismatch("cap degree mismatch")
    p = sigma.degree - a.degree
    prod = cap_chain(space.cc, a.degree, a.chain(), sigma.degree, sigma.chain())
    return HClass(space.homology, p, space.homology.class_of(p, prod))


class RingStructure:
    """Memoized cup/cap structure constants of one space's basis classes."""

    def __init__(self, space: Space):
        self.space = space
        self._cup = {}
        self._cap = {}
        self._kron = {}

    def cup_basis(self, p, i, q, j):
        key = (p, i, q, j)
        if key not in self._cup:
            a = basis_class(self.space.cohomology, p, i)
            b = basis_class(self.space.cohomology, q, j)
            self._cup[key] = cup(a, b, self.space).coeffs
        return self._cup[key]

    def cap_basis(self, q, i, d, j):
        key = (q, i, d, j)
        if key not in self._cap:
            a = basis_class(self.space.cohomology, q, i)
            s = basis_class(self.space.homology, d, j)
            self._cap[key] = cap(a, s, self.space).coeffs
        return self._cap[key]

    def kron(self, q):
        """Kronecker matrix of the degree-q cohomology basis against homology."""
        if q not in self._kron:
            bc = self.space.cohomology.betti(q)
            bh = self.space.homology.betti(q)
            self._kron[q] = tuple(
                tuple(
                    kronecker(
                        basis_class(self.space.cohomology, q, i),
                        basis_class(self.space.homology, q, j),
                    )
                    for j in range(bh)
                )
                for i in range(bc)
            )
        return self._kron[q]


class ProductSpace:
    """Tensor model of X x Y over Q, with Koszul sign bookkeeping."""

    def __init__(self, x: Space, y: Space):
        self.x = x
        self.y = y
        self.rx = RingStructure(x)
        self.ry = RingStructure(y)
        self.dim = x.dim + y.dim

    def betti(self, n: int, kind=HOMOLOGY) -> int:
        gx = self.x.homology if kind == HOMOLOGY else self.x.cohomology
        gy = self.y.homology if kind == HOMOLOGY else self.y.cohomology
        return sum(
            gx.betti(p) * gy.betti(n - p) for p in range(0, n + 1)
        )

    def betti_vector(self, kind=HOMOLOGY):
        return tuple(self.betti(n, kind) for n in range(self.dim + 1))

    def zero(self, degree: int, kind) -> "TensorClass":
        return TensorClass(self, kind, degree, {})

    def __repr__(self):
        return f"ProductSpace({self.x.complex.name} x {self.y.complex.name})"


@dataclass
class TensorClass:
    """Formal sum of basis tensors b_i x c_j of one total degree."""

    product: ProductSpace
    kind: str
    degree: int
    terms: dict  # (p, i, j) -> Fraction, p the X-degree, q = degree - p

    def _clean(self):
        self.terms = {k: v for k, v in self.terms.items() if v != 0}
        return self

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.terms.values())

    def __add__(self, other: "TensorClass") -> "TensorClass":
        if (
            other.product is not self.product
            or other.kind != self.kind
            or other.degree != self.degree
        ):
            raise DegreeMismatch("tensor classes are not compatible")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, ZERO) + v
        return TensorClass(self.product, self.kind, self.degree, terms)._clean()

    def scale(self, c) -> "TensorClass":
        c = Fraction(c)
        return TensorClass(
            self.product,
            self.kind,
            self.degree,
            {k: c * v for k, v in self.terms.items()},
        )._clean()

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (
            isinstance(other, TensorClass)
            and other.product is self.product
            and other.kind == self.kind
            and other.degree == self.degree
            and self._nonzero() == other._nonzero()
        )

    def _nonzero(self):
        return {k: v for k, v in self.terms.items() if v != 0}


def _graded(space: Space, kind: str) -> GradedSpace:
    return space.homology if kind == HOMOLOGY else space.cohomology


def cross(a: HClass, b: HClass, prod: ProductSpace) -> TensorClass:
    """Cohomology external cross product a x b."""
    return _cross(a, b, prod, COHOMOLOGY)


def cross_h(s: HClass, t: HClass, prod: ProductSpace) -> TensorClass:
    """Homology external cross product s x t."""
    return _cross(s, t, prod, HOMOLOGY)


def _cross(a, b, prod, kind):
    if a.space is not _graded(prod.x, kind) or b.space is not _graded(prod.y, kind):
        raise DegreeMismatch("cross factors must live on the product's factors")
    p, q = a.degree, b.degree
    terms = {}
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb:
                terms[(p, i, j)] = ca * cb
    return TensorClass(prod, kind, p + q, terms)


def kronecker_product(alpha: TensorClass, sigma: TensorClass) -> Fraction:
    """(a x b, s x t) = (-1)^{|t||a|} (a, s)(b, t), extended bilinearly."""
    if alpha.kind != COHOMOLOGY or sigma.kind != HOMOLOGY:
        raise DegreeMismatch("kronecker_product expects (cohomology, homology)")
    prod = alpha.product
    if sigma.product is not prod:
        raise DegreeMismatch("classes live on different product spaces")
    total = ZERO
    kx = prod.rx.kron
    ky = prod.ry.kron
    for (p, i, j), va in alpha.terms.items():
        q = alpha.degree - p
        for (pp, k, l), vs in sigma.terms.items():
            qq = sigma.degree - pp
            if p != pp or q != qq:
                continue
            sign = (-ONE) ** (q * p)
            total += sign * va * vs * kx(p)[i][k] * ky(q)[j][l]
    return total


def cup_on_product(a: TensorClass, b: TensorClass) -> TensorClass:
    """Termwise cup with the multiplicativity sign (-1)^{|b_Y||c_X|}."""
    prod = a.product
    if b.product is not prod or a.kind != COHOMOLOGY or b.kind != COHOMOLOGY:
        raise DegreeMismatch("cup_on_product expects cohomology tensor classes")
    out = {}
    for (p1, i1, j1), v1 in a.terms.items():
        q1 = a.degree - p1
        for (p2, i2, j2), v2 in b.terms.items():
            q2 = b.degree - p2
            sign = (-ONE) ** (q1 * p2)
            cx = prod.rx.cup_basis(p1, i1, p2, i2)
            cy = prod.ry.cup_basis(q1, j1, q2, j2)
            coeff = sign * v1 * v2
            for i, vx in enumerate(cx):
                if vx == 0:
                    continue
                for j, vy in enumerate(cy):
                    if vy:
                        key = (p1 + p2, i, j)
                        out[key] = out.get(key, ZERO) + coeff * vx * vy
    return TensorClass(prod, COHOMOLOGY, a.degree + b.degree, out)._clean()


def cap_on_product(a: TensorClass, sigma: TensorClass) -> TensorClass:
    """Termwise cap with the multiplicativity sign (-1)^{|b_Y||s_X|}."""
    prod = a.product
    if sigma.product is not prod or a.kind != COHOMOLOGY or sigma.kind != HOMOLOGY:
        raise DegreeMismatch("cap_on_product expects (cohomology, homology)")
    out = {}
    for (p1, i1, j1), v1 in a.terms.items():
        q1 = a.degree - p1
        for (p2, k, l), v2 in sigma.terms.items():
            q2 = sigma.degree - p2
            if p1 > p2 or q1 > q2:
                continue
            sign = (-ONE) ** (q1 * p2)
            cx = prod.rx.cap_basis(p1, i1, p2, k)
            cy = prod.ry.cap_basis(q1, j1, q2, l)
            coeff = sign * v1 * v2
            for i, vx in enumerate(cx):
                if vx == 0:
                    continue
                for j, vy in enumerate(cy):
                    if vy:
                        key = (p2 - p1, i, j)
                        out[key] = out.get(key, ZERO) + coeff * vx * vy
    return TensorClass(prod, HOMOLOGY, sigma.degree - a.degree, out)._clean()


def product_map(f: GradedMap, g: GradedMap, source: ProductSpace, target: ProductSpace):
    """(f x g) applied termwise to tensor classes; no Koszul sign.

    For covariant maps this is (f x g)_*, for contravariant ones (f x g)^*;
    ``source`` and ``target`` are the product spaces the tensors live on.
    """

    def apply(t: TensorClass) -> TensorClass:
        if t.product is not source:
            raise DegreeMismatch("tensor class does not live on the source product")
        kind = t.kind
        out = {}
        for (p, i, j), v in t.terms.items():
            q = t.degree - p
            mx = f.matrix(p)
            my = g.matrix(q)
            for ii in range(len(mx)):
                vx = mx[ii][i]
                if vx == 0:
                    continue
                for jj in range(len(my)):
                    vy = my[jj][j]
                    if vy:
                        key = (p, ii, jj)
                        out[key] = out.get(key, ZERO) + v * vx * vy
        return TensorClass(target, kind, t.degree, out)._clean()

    return apply


def swap_pushforward(t: TensorClass, target: ProductSpace) -> TensorClass:
    """t_*(s x t) = (-1)^{|s||t|} t x s for the factor-swap map."""
    prod = t.product
    if target.x is not prod.y or target.y is not prod.x:
        raise DegreeMismatch("swap target must be the reversed product")
    out = {}
    for (p, i, j), v in t.terms.items():
        q = t.degree - p
        sign = (-ONE) ** (p * q)
        out[(q, j, i)] = out.get((q, j, i), ZERO) + sign * v
    return TensorClass(target, t.kind, t.degree, out)._clean()


def diagonal_pullback(t: TensorClass, space: Space) -> HClass:
    """Delta_X^* on X x X, computed as cup extended bilinearly."""
    prod = t.product
    if prod.x is not space or prod.y is not space:
        raise DegreeMismatch("diagonal pullback needs a tensor class on X x X")
    if t.kind != COHOMOLOGY:
        raise DegreeMismatch("diagonal pullback acts on cohomology tensors")
    b = space.cohomology.betti(t.degree)
    acc = [ZERO] * b
    for (p, i, j), v in t.terms.items():
        q = t.degree - p
        cupped = prod.rx.cup_basis(p, i, q, j)
        for k, c in enumerate(cupped):
            acc[k] += v * c
    return HClass(space.cohomology, t.degree, tuple(acc))


def product_space(x: Space, y: Space) -> ProductSpace:
    return ProductSpace(x, y)


def tensor_fundamental(prod: ProductSpace, zx: HClass, zy: HClass) -> TensorClass:
    """zeta_{X x Y} := zeta_X x zeta_Y in the tensor model."""
    return cross_h(zx, zy, prod)


def augmentation_product(prod: ProductSpace, t: TensorClass) -> Fraction:
    """Augmentation of a degree-0 homology tensor class."""
    from .homology import augmentation

    if t.kind != HOMOLOGY or t.degree != 0:
        raise DegreeMismatch("augmentation needs a degree-0 homology tensor")
    total = ZERO
    for (p, i, j), v in t.terms.items():
        ex = augmentation(basis_class(prod.x.homology, 0, i))
        ey = augmentation(basis_class(prod.y.homology, 0, j))
        total += v * ex * ey
    return total
