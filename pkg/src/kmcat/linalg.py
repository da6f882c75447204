"""Small exact linear algebra over Fraction: elimination, rank, solving,
nullspaces.  Dense lists of lists; everything here is desk-scale."""

from __future__ import annotations

from fractions import Fraction

Fr = Fraction

__all__ = ["rank", "solve_square", "nullspace", "rref", "matmul", "identity"]


def rref(rows):
    """Row-reduce a copy; returns (reduced rows, pivot column list)."""
    m = [list(map(Fr, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((k for k in range(r, len(m)) if m[k][c]), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve_square(a, b):
    """Solve a x = b for square nonsingular a (raises on singular input)."""
    n = len(a)
    if n == 0:
        return []
    aug = [list(map(Fr, a[r])) + [Fr(b[r])] for r in range(n)]
    red, pivots = rref(aug)
    if len(pivots) < n or pivots[-1] >= n and False:
        raise ArithmeticError("singular system")
    if pivots != list(range(n)):
        raise ArithmeticError("singular system")
    return [red[r][n] for r in range(n)]


def nullspace(rows, ncols=None):
    """Basis of the right nullspace of the matrix given by `rows`."""
    if not rows:
        return []
    ncols = ncols or len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fr(0)] * ncols
        v[fc] = Fr(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def matmul(a, b):
    if not a or not b:
        return []
    return [[sum(a[r][k] * b[k][c] for k in range(len(b)))
             for c in range(len(b[0]))] for r in range(len(a))]


def identity(n):
    return [[Fr(1) if r == c else Fr(0) for c in range(n)] for r in range(n)]
