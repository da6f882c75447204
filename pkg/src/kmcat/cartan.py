"""Kac-Moody combinatorial data: generalized Cartan matrices, symmetrizers,
anchored weights, dominance order and the Weyl dimension oracle.

A weight is stored as a dominant (or just fixed) integer anchor plus an
offset in the root lattice: the weight is  anchor - sum_j offset[j] alpha_j.
Only weights with the same anchor are comparable.

Colors (the index set I) are 0-based throughout the library; human-facing
output in the CLI reports them 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Fr = Fraction

__all__ = [
    "CartanDatum",
    "Weight",
    "NotGCM",
    "NotSymmetrizable",
    "NotFiniteType",
    "AnchorMismatch",
    "RootEnumerationCap",
    "validate_gcm",
    "pairing",
    "dominance_leq",
    "weyl_dim",
    "positive_roots",
    "load_cartan_config",
]

ROOT_CAP = 10_000


class NotGCM(ValueError):
    """Matrix fails the generalized-Cartan-matrix axioms."""


class NotSymmetrizable(ValueError):
    """No positive symmetrizer exists."""


class NotFiniteType(ValueError):
    """Operation requires a positive-definite symmetrized matrix."""


class AnchorMismatch(ValueError):
    """Weights anchored at different base weights are incomparable."""


class RootEnumerationCap(RuntimeError):
    """Positive-root closure exceeded the safety cap."""


@dataclass(frozen=True)
class CartanDatum:
    """A symmetrizable GCM with its canonical coprime symmetrizer."""

    gcm: tuple  # tuple of tuples of int, a[i][j]
    sym: tuple  # positive ints d_i with d_i a_ij = d_j a_ji
    finite_type: bool

    @property
    def rank(self):
        return len(self.gcm)

    def a(self, i, j):
        return self.gcm[i][j]

    def d(self, i):
        return self.sym[i]

    def colors(self):
        return range(self.rank)


@dataclass(frozen=True)
class Weight:
    """anchor - sum_j offset[j] * alpha_j, offsets in the root lattice."""

    anchor: tuple
    offset: tuple

    def __post_init__(self):
        object.__setattr__(self, "anchor", tuple(int(k) for k in self.anchor))
        object.__setattr__(self, "offset", tuple(int(b) for b in self.offset))
        if len(self.anchor) != len(self.offset):
            raise ValueError("anchor and offset lengths differ")

    def shift(self, delta):
        """Weight moved by -sum delta[j] alpha_j (delta added to offset)."""
        return Weight(self.anchor, tuple(b + d for b, d in zip(self.offset, delta)))

    def depth(self):
        return sum(self.offset)


def validate_gcm(matrix):
    """Check the GCM axioms, find the canonical symmetrizer and classify.

    The symmetrizer is the unique positive integer solution of
    d_i a_ij = d_j a_ji with gcd 1 (chosen per connected component, which
    makes the global gcd 1 as well).  finite_type is decided by positive
    definiteness of the symmetrized matrix.
    """
    rows = [tuple(int(x) for x in row) for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotGCM("matrix is not square")
    for i in range(n):
        if rows[i][i] != 2:
            raise NotGCM(f"diagonal entry a[{i}][{i}] = {rows[i][i]} != 2")
        for j in range(n):
            if i != j:
                if rows[i][j] > 0:
                    raise NotGCM(f"positive off-diagonal entry a[{i}][{j}]")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise NotGCM(f"asymmetric zero pattern at ({i},{j})")

    sym = _symmetrizer(rows)
    finite = _positive_definite([[sym[i] * rows[i][j] for j in range(n)] for i in range(n)])
    return CartanDatum(tuple(rows), tuple(sym), finite)


def _symmetrizer(rows):
    """BFS ratio propagation; cycle inconsistency means not symmetrizable."""
    n = len(rows)
    ratio = [None] * n  # d_i as Fraction, per component scaled from a seed
    for start in range(n):
        if ratio[start] is not None:
            continue
        ratio[start] = Fr(1)
        stack = [start]
        component = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or rows[i][j] == 0:
                    continue
                # d_i a_ij = d_j a_ji  =>  d_j = d_i a_ij / a_ji
                want = ratio[i] * Fr(rows[i][j], rows[j][i])
                if want <= 0:
                    raise NotSymmetrizable("negative ratio in symmetrizer solve")
                if ratio[j] is None:
                    ratio[j] = want
                    component.append(j)
                    stack.append(j)
                elif ratio[j] != want:
                    raise NotSymmetrizable(
                        "inconsistent cycle products, no positive symmetrizer")
        # clear denominators within the component, then make it coprime
        denom_lcm = 1
        for i in component:
            denom_lcm = denom_lcm * ratio[i].denominator // gcd(denom_lcm, ratio[i].denominator)
        ints = {i: int(ratio[i] * denom_lcm) for i in component}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        for i in component:
            ratio[i] = Fr(ints[i] // g)
    return [int(r) for r in ratio]


def _positive_definite(b):
    """Sylvester's criterion with exact integer principal minors."""
    n = len(b)
    for k in range(1, n + 1):
        if _det([row[:k] for row in b[:k]]) <= 0:
            return False
    return True


def _det(m):
    m = [[Fr(x) for x in row] for row in m]
    n = len(m)
    det = Fr(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fr(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def pairing(datum, i, weight):
    """<h_i, weight> = anchor_i - sum_j offset_j a_ij, color i 0-based."""
    return weight.anchor[i] - sum(
        b * datum.a(i, j) for j, b in enumerate(weight.offset))


def dominance_leq(lam, mu):
    """lam <= mu iff mu - lam is a non-negative root combination."""
    if lam.anchor != mu.anchor:
        raise AnchorMismatch(f"anchors differ: {lam.anchor} vs {mu.anchor}")
    return all(a >= b for a, b in zip(lam.offset, mu.offset))


def positive_roots(datum):
    """Positive roots in simple-root coordinates, by reflection closure.

    Requires finite type (the closure would not terminate otherwise); the
    cap guards against misuse if finite_type is forced by a caller.
    """
    if not datum.finite_type:
        raise NotFiniteType("positive-root closure requires finite type")
    n = datum.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                pair = sum(datum.a(i, j) * beta[j] for j in range(n))
                refl = list(beta)
                refl[i] -= pair
                refl = tuple(refl)
                if all(c >= 0 for c in refl) and any(refl) and refl not in roots:
                    roots.add(refl)
                    new.append(refl)
                    if len(roots) > ROOT_CAP:
                        raise RootEnumerationCap(
                            f"more than {ROOT_CAP} positive roots")
        frontier = new
    return sorted(roots)


def weyl_dim(datum, anchor):
    """dim L(anchor) by the Weyl dimension formula, finite type only."""
    anchor = tuple(int(k) for k in anchor)
    if any(k < 0 for k in anchor):
        raise ValueError("anchor must be dominant")
    n = datum.rank
    rho = (1,) * n

    def form(weights, root):
        # (lambda, alpha) with (lambda, alpha_j) = d_j <h_j, lambda>
        return sum(Fr(root[j] * datum.d(j) * weights[j]) for j in range(n))

    dim = Fr(1)
    shifted = tuple(k + 1 for k in anchor)
    for root in positive_roots(datum):
        dim *= form(shifted, root) / form(rho, root)
    if dim.denominator != 1 or dim <= 0:
        raise ArithmeticError(f"Weyl formula gave non-integer {dim}")
    return int(dim)


def load_cartan_config(data):
    """Parse the JSON config structure (already deserialized) into a datum
    plus raw parameter maps.  File indices are 0-based; rational values are
    strings like "2/3".  Returns (datum, t_map, s_map)."""
    datum = validate_gcm(data["cartan_matrix"])
    t_map = {}
    for entry in data.get("t", []):
        t_map[(int(entry["i"]), int(entry["j"]))] = Fr(str(entry["value"]))
    s_map = {}
    for entry in data.get("s", []):
        key = (int(entry["i"]), int(entry["j"]), int(entry["p"]), int(entry["q"]))
        s_map[key] = Fr(str(entry["value"]))
    return datum, t_map, s_map
