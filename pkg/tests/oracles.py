"""Independent brute-force oracles for freezing expected values.

Everything here recomputes from first principles with plain dense row
reduction over Fraction, sharing no code path with the package's sparse
elimination or basis bookkeeping.
"""

from fractions import Fraction
from itertools import combinations


def face_closure(maximal):
    """All faces of the given simplices, as sorted tuples, grouped by dim."""
    seen = set()
    for s in maximal:
        s = tuple(sorted(s))
        for r in range(1, len(s) + 1):
            for f in combinations(s, r):
                seen.add(f)
    by_dim = {}
    for f in seen:
        by_dim.setdefault(len(f) - 1, []).append(f)
    return {q: sorted(v) for q, v in by_dim.items()}


def dense_boundary(levels, q):
    """Boundary matrix C_q -> C_{q-1} as dense Fraction rows."""
    lower = levels.get(q - 1, [])
    upper = levels.get(q, [])
    index = {s: i for i, s in enumerate(lower)}
    mat = [[Fraction(0)] * len(upper) for _ in range(len(lower))]
    for j, s in enumerate(upper):
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            mat[index[face]][j] += Fraction((-1) ** i)
    return mat


def dense_rank(mat):
    """Textbook Gaussian elimination rank, no pivoting strategy."""
    mat = [row[:] for row in mat]
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == nrows:
            break
    return r


def oracle_betti(maximal):
    """Betti numbers over Q by rank-nullity on dense boundary matrices."""
    levels = face_closure(maximal)
    if not levels:
        return ()
    dim = max(levels)
    out = []
    for q in range(dim + 1):
        n_q = len(levels.get(q, []))
        rank_out = dense_rank(dense_boundary(levels, q)) if q >= 1 else 0
        rank_in = (
            dense_rank(dense_boundary(levels, q + 1)) if q + 1 <= dim else 0
        )
        out.append(n_q - rank_out - rank_in)
    return tuple(out)


def oracle_euler(maximal):
    levels = face_closure(maximal)
    return sum((-1) ** q * len(v) for q, v in levels.items())


def oracle_facet_incidences(maximal):
    """How many top simplices contain each codimension-1 face."""
    levels = face_closure(maximal)
    dim = max(levels)
    counts = {f: 0 for f in levels.get(dim - 1, [])}
    for top in levels[dim]:
        for i in range(len(top)):
            counts[top[:i] + top[i + 1 :]] += 1
    return counts
