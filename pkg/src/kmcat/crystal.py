"""Normal crystals: generation of highest-weight crystals by the path model,
axiom verification, Kashiwara tensor products, characters and DOT export.

Elements of generated crystals are piecewise-linear paths stored as the
sequence of displacement vectors of their maximal linear pieces; each
displacement is a rational multiple of the anchor plus a rational combination
of negative simple roots.  Root operators reflect the segment of the path
between critical points of the pairing function, which keeps everything
exact over the rationals.

Crystals built here are finite directed graphs with colored edges; a
truncated crystal additionally carries a frontier of elements whose strings
may continue past the depth bound, and those are excluded from the axiom
checks that would need the missing part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import CartanDatum, Weight, pairing, weyl_dim

Fr = Fraction

__all__ = [
    "Crystal",
    "DatumMismatch",
    "verify_normal_axioms",
    "highest_weight_crystal",
    "lowest_weight_crystal",
    "tensor",
    "character",
    "export_dot",
    "connected_components",
]


class DatumMismatch(ValueError):
    pass


@dataclass
class Crystal:
    """Finite colored graph with weights and string data.

    f_edges[i][k] is the index of the image of element k under the lowering
    operator of color i (absent when zero), e_edges its inverse.  eps[i][k]
    and phi[i][k] are the string statistics.  frontier lists indices whose
    data may be incomplete due to truncation.
    """

    datum: CartanDatum
    anchor: tuple
    weights: list  # Weight per element
    f_edges: dict  # color -> {src: dst}
    e_edges: dict  # color -> {src: dst}
    eps: dict      # color -> list of int
    phi: dict      # color -> list of int
    frontier: set = field(default_factory=set)
    labels: list = None  # optional printable payloads

    def __len__(self):
        return len(self.weights)

    def colors(self):
        return self.datum.colors()

    def is_truncated(self):
        return bool(self.frontier)


# ---------------------------------------------------------------------------
# Littelmann paths
# ---------------------------------------------------------------------------
# A direction is (c, beta): the vector c*anchor - sum_j beta[j] alpha_j.
# A path is a tuple of displacement vectors (directions scaled by durations),
# normalized so consecutive displacements are never positive multiples of
# each other and zero displacements are dropped.


def _dir_pairing(datum, anchor, d, i):
    c, beta = d
    return c * anchor[i] - sum(
        Fr(b) * datum.a(i, j) for j, b in enumerate(beta))


def _dir_add(d1, d2):
    return (d1[0] + d2[0], tuple(a + b for a, b in zip(d1[1], d2[1])))


def _dir_scale(d, t):
    return (d[0] * t, tuple(b * t for b in d[1]))


def _dir_reflect(datum, anchor, d, i):
    """s_i applied to the direction: v - <h_i, v> alpha_i."""
    c, beta = d
    p = _dir_pairing(datum, anchor, d, i)
    nb = list(beta)
    nb[i] += p
    return (c, tuple(nb))


def _dir_is_zero(d):
    return d[0] == 0 and not any(d[1])


def _parallel_same_sense(d1, d2):
    """True when d2 is a positive multiple of d1 (so the pieces merge)."""
    v1 = (d1[0],) + tuple(d1[1])
    v2 = (d2[0],) + tuple(d2[1])
    k1 = next((x for x in v1 if x), None)
    k2 = next((x for x in v2 if x), None)
    if k1 is None or k2 is None:
        return k1 is None and k2 is None
    if (k1 > 0) != (k2 > 0):
        return False
    return all(a * k2 == b * k1 for a, b in zip(v1, v2))


def _normalize_path(pieces):
    out = []
    for d in pieces:
        if _dir_is_zero(d):
            continue
        if out and _parallel_same_sense(out[-1], d):
            out[-1] = _dir_add(out[-1], d)
        else:
            out.append(d)
    return tuple(out)


def _path_endpoint(datum, anchor, path):
    total = (Fr(0), (Fr(0),) * datum.rank)
    for d in path:
        total = _dir_add(total, d)
    c, beta = total
    if c != 1 and path:
        raise AssertionError("path does not end at an anchor translate")
    offset = tuple(beta)
    assert all(b.denominator == 1 for b in offset), offset
    return Weight(anchor, tuple(int(b) for b in offset))


def _height_profile(datum, anchor, path, i):
    """Pairing of h_i along the path: list of (cumulative values at the
    breakpoints); entry 0 is the start (always 0)."""
    vals = [Fr(0)]
    for d in path:
        vals.append(vals[-1] + _dir_pairing(datum, anchor, d, i))
    return vals


def _root_f(datum, anchor, path, i):
    """Littelmann lowering operator; returns the new path or None."""
    vals = _height_profile(datum, anchor, path, i)
    m = min(vals)
    if vals[-1] - m < 1:
        return None
    # last breakpoint where the minimum is attained
    t0 = max(k for k, v in enumerate(vals) if v == m)
    # first point at height m + 1 after t0; may split a segment
    k = t0
    while vals[k + 1] < m + 1:
        k += 1
    pieces = list(path)
    if vals[k + 1] == m + 1:
        cut = k + 1
    else:
        frac = (m + 1 - vals[k]) / (vals[k + 1] - vals[k])
        head = _dir_scale(pieces[k], frac)
        tail = _dir_scale(pieces[k], 1 - frac)
        pieces[k:k + 1] = [head, tail]
        cut = k + 1
    reflected = [
        _dir_reflect(datum, anchor, d, i) if t0 <= idx < cut else d
        for idx, d in enumerate(pieces)
    ]
    return _normalize_path(reflected)


def _root_e(datum, anchor, path, i):
    vals = _height_profile(datum, anchor, path, i)
    m = min(vals)
    if m > -1:
        return None
    # first breakpoint at the minimum
    t1 = min(k for k, v in enumerate(vals) if v == m)
    # last point at height m + 1 before t1; may split a segment
    k = t1
    while vals[k - 1] < m + 1:
        k -= 1
    pieces = list(path)
    if vals[k - 1] == m + 1:
        cut = k - 1
    else:
        frac = (m + 1 - vals[k - 1]) / (vals[k] - vals[k - 1])
        head = _dir_scale(pieces[k - 1], frac)
        tail = _dir_scale(pieces[k - 1], 1 - frac)
        pieces[k - 1:k] = [head, tail]
        cut = k
        t1 += 1
    reflected = [
        _dir_reflect(datum, anchor, d, i) if cut <= idx < t1 else d
        for idx, d in enumerate(pieces)
    ]
    return _normalize_path(reflected)


def _string_stats(datum, anchor, path, i):
    vals = _height_profile(datum, anchor, path, i)
    m = min(vals)
    eps = -m
    phi = vals[-1] - m
    assert eps.denominator == 1 and phi.denominator == 1
    return int(eps), int(phi)


def highest_weight_crystal(datum, anchor, depth=None):
    """Generate B(anchor) by closing the straight-line path under the
    lowering operators.

    In finite type the generation terminates on its own and `depth` is
    ignored.  Otherwise `depth` bounds the offset size and elements at the
    bound form the frontier.
    """
    anchor = tuple(int(k) for k in anchor)
    if any(k < 0 for k in anchor):
        raise ValueError("anchor must be dominant")
    if not datum.finite_type and depth is None:
        raise ValueError("depth bound required outside finite type")
    limit = None if datum.finite_type else int(depth)

    start = _normalize_path([(Fr(1), (Fr(0),) * datum.rank)])
    paths = [start]
    index = {start: 0}
    f_edges = {i: {} for i in datum.colors()}
    e_edges = {i: {} for i in datum.colors()}
    cursor = 0
    while cursor < len(paths):
        path = paths[cursor]
        wt = _path_endpoint(datum, anchor, path)
        if limit is None or wt.depth() < limit:
            for i in datum.colors():
                img = _root_f(datum, anchor, path, i)
                if img is None:
                    continue
                k = index.get(img)
                if k is None:
                    k = len(paths)
                    paths.append(img)
                    index[img] = k
                f_edges[i][cursor] = k
                e_edges[i][k] = cursor
        cursor += 1

    weights = [_path_endpoint(datum, anchor, p) for p in paths]
    frontier = {k for k, w in enumerate(weights)
                if limit is not None and w.depth() >= limit}
    eps = {}
    phi = {}
    for i in datum.colors():
        eps[i] = [_string_stats(datum, anchor, p, i)[0] for p in paths]
        phi[i] = [_string_stats(datum, anchor, p, i)[1] for p in paths]

    crystal = Crystal(datum, anchor, weights, f_edges, e_edges, eps, phi,
                      frontier, labels=None)
    _check_e_closure(crystal)
    report = verify_normal_axioms(crystal)
    if not report["passed"]:
        raise AssertionError(f"generated crystal violates axioms: {report}")
    return crystal


def _check_e_closure(crystal):
    """Raising edges must stay inside the generated set (they do: raising
    moves toward the highest weight, away from the frontier)."""
    for i in crystal.colors():
        for src, dst in crystal.e_edges[i].items():
            if not (0 <= dst < len(crystal)):
                raise AssertionError("raising operator leaves the crystal")


def lowest_weight_crystal(datum, anchor, depth=None):
    """The lowest-weight crystal anchored at a antidominant anchor, realized
    as the dual of the highest-weight crystal at the negated anchor."""
    anchor = tuple(int(k) for k in anchor)
    if any(k > 0 for k in anchor):
        raise ValueError("anchor must be antidominant")
    base = highest_weight_crystal(datum, tuple(-k for k in anchor), depth)
    weights = [Weight(anchor, tuple(-b for b in w.offset)) for w in base.weights]
    f_edges = {i: dict(base.e_edges[i]) for i in datum.colors()}
    e_edges = {i: dict(base.f_edges[i]) for i in datum.colors()}
    eps = {i: list(base.phi[i]) for i in datum.colors()}
    phi = {i: list(base.eps[i]) for i in datum.colors()}
    return Crystal(datum, anchor, weights, f_edges, e_edges, eps, phi,
                   set(base.frontier), labels=None)


def verify_normal_axioms(crystal):
    """Exhaustive check of the four normal-crystal axioms on non-frontier
    elements.  Returns {"passed": bool, "violations": [...]}."""
    datum = crystal.datum
    bad = []
    interior = [k for k in range(len(crystal)) if k not in crystal.frontier]
    for i in crystal.colors():
        f_i, e_i = crystal.f_edges[i], crystal.e_edges[i]
        alpha = tuple(1 if j == i else 0 for j in range(datum.rank))
        for src, dst in e_i.items():
            want = crystal.weights[src].shift(tuple(-a for a in alpha))
            if crystal.weights[dst] != want:
                bad.append(("C1", i, src, "raising does not add the simple root"))
        for src, dst in f_i.items():
            if e_i.get(dst) != src:
                bad.append(("C2", i, src, "lowering not inverted by raising"))
        for src, dst in e_i.items():
            if f_i.get(dst) != src:
                bad.append(("C2", i, src, "raising not inverted by lowering"))
        for k in interior:
            # C3: strings terminate (walk up and down, no cycles)
            seen = set()
            cur = k
            while cur in e_i:
                cur = e_i[cur]
                if cur in seen or len(seen) > len(crystal):
                    bad.append(("C3", i, k, "raising string does not terminate"))
                    break
                seen.add(cur)
            up_steps = len(seen)
            seen = set()
            cur = k
            hit_frontier = False
            while cur in f_i:
                cur = f_i[cur]
                if cur in crystal.frontier:
                    hit_frontier = True
                if cur in seen or len(seen) > len(crystal):
                    bad.append(("C3", i, k, "lowering string does not terminate"))
                    break
                seen.add(cur)
            down_steps = len(seen)
            if up_steps != crystal.eps[i][k]:
                bad.append(("C3", i, k, "cached string length differs from walk"))
            if not hit_frontier and down_steps != crystal.phi[i][k]:
                bad.append(("C3", i, k, "cached string length differs from walk"))
            # C4
            if crystal.phi[i][k] - crystal.eps[i][k] != pairing(
                    datum, i, crystal.weights[k]):
                bad.append(("C4", i, k, "phi - eps != pairing"))
    return {"passed": not bad, "violations": bad}


def tensor(c1, c2):
    """Kashiwara tensor product.

    Convention: the lowering operator acts on the first factor when
    phi(b1) > eps(b2), on the second otherwise; raising acts on the first
    when phi(b1) >= eps(b2).  Characters multiply under this rule and the
    result is again normal (checked by the caller via the axioms if wanted).
    """
    if c1.datum != c2.datum:
        raise DatumMismatch("tensor factors over different Cartan data")
    datum = c1.datum
    anchor = tuple(a + b for a, b in zip(c1.anchor, c2.anchor))
    pairs = [(p, q) for p in range(len(c1)) for q in range(len(c2))]
    index = {pq: k for k, pq in enumerate(pairs)}
    weights = []
    for p, q in pairs:
        off = tuple(a + b for a, b in
                    zip(c1.weights[p].offset, c2.weights[q].offset))
        weights.append(Weight(anchor, off))
    f_edges = {i: {} for i in datum.colors()}
    e_edges = {i: {} for i in datum.colors()}
    eps = {i: [] for i in datum.colors()}
    phi = {i: [] for i in datum.colors()}
    for i in datum.colors():
        for k, (p, q) in enumerate(pairs):
            wt1_pair = pairing(datum, i, c1.weights[p])
            e1, f1 = c1.eps[i][p], c1.phi[i][p]
            e2, f2 = c2.eps[i][q], c2.phi[i][q]
            eps[i].append(max(e1, e2 - wt1_pair))
            phi[i].append(max(f2, f1 + pairing(datum, i, c2.weights[q])))
            if f1 > e2:
                dst = c1.f_edges[i].get(p)
                if dst is not None:
                    f_edges[i][k] = index[(dst, q)]
            else:
                dst = c2.f_edges[i].get(q)
                if dst is not None:
                    f_edges[i][k] = index[(p, dst)]
            if f1 >= e2:
                dst = c1.e_edges[i].get(p)
                if dst is not None:
                    e_edges[i][k] = index[(dst, q)]
            else:
                dst = c2.e_edges[i].get(q)
                if dst is not None:
                    e_edges[i][k] = index[(p, dst)]
    frontier = {index[(p, q)] for p, q in pairs
                if p in c1.frontier or q in c2.frontier}
    return Crystal(datum, anchor, weights, f_edges, e_edges, eps, phi,
                   frontier, labels=None)


def character(crystal):
    """Weight multiplicities as a dict Weight -> count."""
    out = {}
    for w in crystal.weights:
        out[w] = out.get(w, 0) + 1
    return out


def complete_character(crystal, depth=None):
    """Character restricted to offsets strictly below the truncation depth
    (all offsets when the crystal is complete)."""
    if not crystal.is_truncated():
        return character(crystal)
    bound = depth if depth is not None else min(
        crystal.weights[k].depth() for k in crystal.frontier)
    return {w: m for w, m in character(crystal).items() if w.depth() < bound}


def connected_components(crystal):
    """Component index sets under all colored edges, ignoring direction."""
    parent = list(range(len(crystal)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for i in crystal.colors():
        for src, dst in crystal.f_edges[i].items():
            union(src, dst)
    groups = {}
    for k in range(len(crystal)):
        groups.setdefault(find(k), []).append(k)
    return sorted(groups.values(), key=lambda g: (len(g), g), reverse=True)


def export_dot(crystal):
    """Deterministic DOT rendering; byte-stable for a fixed crystal."""
    lines = ["digraph crystal {"]
    for k, w in enumerate(crystal.weights):
        off = ",".join(str(b) for b in w.offset)
        mark = " frontier" if k in crystal.frontier else ""
        lines.append(f'  n{k} [label="{k}: wt-({off}){mark}"];')
    for i in sorted(crystal.colors()):
        for src in sorted(crystal.f_edges[i]):
            dst = crystal.f_edges[i][src]
            lines.append(f'  n{src} -> n{dst} [label="{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
