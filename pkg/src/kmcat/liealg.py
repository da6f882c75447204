"""Exact truncations of integrable highest- and lowest-weight modules, built
from the contravariant form, with raising/lowering matrices per weight space.

The construction pairs monomials in the lowering operators against each other
through the recursion <f_i x, y> = <x, e_i y> starting from <v, v> = 1, where
the raising action is computed with the commutation rule
[e_i, f_j] = delta_ij h_i and h_i acts by the weight pairing.  The chosen
basis of each weight space is a maximal set of monomials on which the form is
nondegenerate; everything else (including the radical) is expressed through
its pairings against that set.  This module is the independent oracle used by
the crystal and cyclotomic checks and never consults them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .cartan import CartanDatum, Weight, pairing
from .linalg import nullspace, rank, solve_square

Fr = Fraction

__all__ = [
    "IntegrableModule",
    "build_highest_weight",
    "build_lowest_weight",
    "verify_serre",
    "commutator_check",
    "divided_power_span_check",
    "tensor_character_check",
    "IncompleteDepth",
]


class IncompleteDepth(ValueError):
    """No weight is complete at the requested truncation depth."""


@dataclass
class IntegrableModule:
    """Weight-graded truncation with exact raising/lowering matrices.

    dims: offset tuple -> dimension.  lower[i][beta] maps the beta space to
    beta + e_i (one more lowering step); raise_[i][beta] maps beta to
    beta - e_i.  Offsets are counted from the anchor; for lowest-weight
    modules the sign convention is mirrored (`direction` = -1) and `offset`
    in weights is the negated counter.
    """

    datum: CartanDatum
    anchor: tuple
    depth: int
    direction: int  # +1 highest-weight, -1 lowest-weight
    dims: dict
    lower: dict
    raise_: dict
    support_exhausted: bool

    def weight_of(self, beta):
        off = beta if self.direction > 0 else tuple(-b for b in beta)
        return Weight(self.anchor, off)

    def character(self):
        return {self.weight_of(b): d for b, d in self.dims.items() if d}

    def total_dim(self):
        return sum(self.dims.values())


def _contents(n, rank_):
    """All offset vectors with |beta| = n."""
    if rank_ == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _contents(n - first, rank_ - 1):
            yield (first,) + rest


def _words_of_content(beta):
    """All color sequences using color j exactly beta[j] times."""
    colors = []
    for j, b in enumerate(beta):
        colors.extend([j] * b)
    seen = set()
    out = []

    def rec(remaining, acc):
        if not remaining:
            key = tuple(acc)
            if key not in seen:
                seen.add(key)
                out.append(key)
            return
        used = set()
        for k, c in enumerate(remaining):
            if c in used:
                continue
            used.add(c)
            rec(remaining[:k] + remaining[k + 1:], acc + [c])

    rec(colors, [])
    return out


class _ShapovalovWorkspace:
    """Highest-weight side: words (j_1, ..., j_m) denote f_{j_1}...f_{j_m} v,
    with the rightmost letter acting first."""

    def __init__(self, datum, anchor, depth):
        self.datum = datum
        self.anchor = tuple(int(k) for k in anchor)
        self.depth = depth
        self._raise_cache = {}
        self._pair_cache = {}

    def word_weight(self, word):
        beta = [0] * self.datum.rank
        for c in word:
            beta[c] += 1
        return Weight(self.anchor, tuple(beta))

    def raise_word(self, i, word):
        """e_i applied to the word vector, as {shorter word: coeff}."""
        key = (i, word)
        cached = self._raise_cache.get(key)
        if cached is not None:
            return cached
        if not word:
            out = {}
        else:
            j, rest = word[0], word[1:]
            out = {}
            for w, c in self.raise_word(i, rest).items():
                nk = (j,) + w
                out[nk] = out.get(nk, 0) + c
            if i == j:
                h = pairing(self.datum, i, self.word_weight(rest))
                if h:
                    out[rest] = out.get(rest, 0) + Fr(h)
            out = {w: c for w, c in out.items() if c}
        self._raise_cache[key] = out
        return out

    def pair(self, word, vec):
        """<word vector, vec> with vec a {word: coeff} combination."""
        if not word:
            return vec.get((), Fr(0))
        i, rest = word[0], word[1:]
        total = Fr(0)
        for w, c in vec.items():
            if not c:
                continue
            key = (i, w)
            raised = self._raise_cache.get(key)
            if raised is None:
                raised = self.raise_word(i, w)
            for w2, c2 in raised.items():
                total += c * c2 * self._pair_single(rest, w2)
        return total

    def _pair_single(self, word, other):
        key = (word, other)
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        val = self.pair(word, {other: Fr(1)})
        self._pair_cache[key] = val
        return val


def build_highest_weight(datum, anchor, depth):
    """Truncated irreducible highest-weight module with exact matrices."""
    ws = _ShapovalovWorkspace(datum, anchor, depth)
    words = {}   # beta -> list of words
    basis = {}   # beta -> list of basis words (pivot columns of the form)
    gram = {}    # beta -> Gram matrix on basis words
    dims = {}
    for level in range(depth + 1):
        for beta in _contents(level, datum.rank):
            wl = _words_of_content(beta)
            words[beta] = wl
            g = [[ws._pair_single(u, v) for v in wl] for u in wl]
            piv = _pivot_columns(g)
            basis[beta] = [wl[k] for k in piv]
            gram[beta] = [[g[r][c] for c in piv] for r in piv]
            dims[beta] = len(piv)

    coords_cache = {}

    def coords(beta, vec):
        """Coordinates of a {word: coeff} vector in the basis classes,
        solving against the Gram matrix restricted to basis words."""
        bw = basis[beta]
        if not bw:
            return [Fr(0)] * 0
        rhs = [ws.pair(u, vec) for u in bw]
        return solve_square(gram[beta], rhs)

    lower = {i: {} for i in datum.colors()}
    raise_ = {i: {} for i in datum.colors()}
    for beta in words:
        for i in datum.colors():
            target = list(beta)
            target[i] += 1
            target = tuple(target)
            if target in words and basis[beta]:
                cols = []
                for u in basis[beta]:
                    cols.append(coords(target, {(i,) + u: Fr(1)}))
                if basis[target]:
                    lower[i][beta] = _transpose(cols)
            shrunk = list(beta)
            shrunk[i] -= 1
            shrunk = tuple(shrunk)
            if all(b >= 0 for b in shrunk) and basis[beta]:
                cols = []
                for u in basis[beta]:
                    cols.append(coords(shrunk, ws.raise_word(i, u)))
                if basis[shrunk]:
                    raise_[i][beta] = _transpose(cols)

    # support is exhausted when the deepest level is entirely zero
    top = [dims[b] for b in _contents(depth, datum.rank)]
    exhausted = depth > 0 and not any(top)
    module = IntegrableModule(datum, anchor, depth, +1, dims, lower, raise_,
                              exhausted)
    _check_gram_and_radical(ws, words, basis, gram)
    return module


def _check_gram_and_radical(ws, words, basis, gram):
    """Construction-time sanity: the contravariant form is symmetric on every
    weight space and its radical is stable under all lowering operators."""
    datum = ws.datum
    for beta, wl in words.items():
        g = [[ws._pair_single(u, v) for v in wl] for u in wl]
        for r in range(len(wl)):
            for c in range(r):
                if g[r][c] != g[c][r]:
                    raise AssertionError("contravariant form is not symmetric")
        for rad in nullspace(g, len(wl)):
            for i in datum.colors():
                target = list(beta)
                target[i] += 1
                target = tuple(target)
                if target not in words:
                    continue
                image = {}
                for c, word in zip(rad, wl):
                    if c:
                        image[(i,) + word] = image.get((i,) + word, 0) + c
                for probe in words[target]:
                    if ws.pair(probe, image):
                        raise AssertionError(
                            "form radical is not stable under lowering")


def _pivot_columns(g):
    """Column indices forming a maximal invertible minor (symmetric input)."""
    if not g:
        return []
    m = len(g)
    rows = [list(r) for r in g]
    piv = []
    used_rows = set()
    for c in range(m):
        sel = None
        for r in range(m):
            if r not in used_rows and rows[r][c]:
                sel = r
                break
        if sel is None:
            continue
        piv.append(c)
        used_rows.add(sel)
        base = rows[sel]
        f0 = base[c]
        for r in range(m):
            if r != sel and rows[r][c]:
                f = rows[r][c] / f0
                rows[r] = [x - f * y for x, y in zip(rows[r], base)]
    return piv


def _transpose(cols):
    if not cols:
        return []
    return [[cols[c][r] for c in range(len(cols))] for r in range(len(cols[0]))]


def build_lowest_weight(datum, anchor, depth):
    """Mirror construction: anchor has all pairings <= 0, raising operators
    generate, offsets increase by simple roots."""
    anchor = tuple(int(k) for k in anchor)
    if any(k > 0 for k in anchor):
        raise ValueError("anchor must be antidominant")
    mirror = build_highest_weight(datum, tuple(-k for k in anchor), depth)
    # In the mirror, lowering becomes raising; weights are negated offsets.
    return IntegrableModule(
        datum, anchor, depth, -1, dict(mirror.dims),
        lower=mirror.raise_, raise_=mirror.lower,
        support_exhausted=mirror.support_exhausted)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _mat_mul(a, b):
    if not a or not b:
        return []
    return [[sum(a[r][k] * b[k][c] for k in range(len(b)))
             for c in range(len(b[0]))] for r in range(len(a))]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def _is_zero(a):
    return all(not x for row in a for x in row)


def _zero_matrix(r, c):
    return [[Fr(0)] * c for _ in range(r)]


def _get_block(module, op_dict, i, beta):
    """Matrix of operator i out of weight space beta, zero block if absent."""
    datum = module.datum
    if op_dict is module.lower:
        tgt = tuple(b + (1 if j == i else 0) for j, b in enumerate(beta))
    else:
        tgt = tuple(b - (1 if j == i else 0) for j, b in enumerate(beta))
    src_dim = module.dims.get(beta, 0)
    tgt_dim = module.dims.get(tgt, 0) if all(b >= 0 for b in tgt) else 0
    blk = op_dict[i].get(beta)
    if blk is None or not src_dim or not tgt_dim:
        return _zero_matrix(tgt_dim, src_dim), tgt
    return blk, tgt


def commutator_check(module):
    """[E_i, F_j] = delta_ij <h_i, weight> id on interior weight spaces."""
    datum = module.datum
    checked = 0
    failures = []
    for beta, dim in module.dims.items():
        if not dim or sum(beta) >= module.depth:
            continue
        for i in datum.colors():
            for j in datum.colors():
                f_j, beta_fj = _get_block(module, module.lower, j, beta)
                e_i_after, _ = _get_block(module, module.raise_, i, beta_fj)
                e_i, beta_ei = _get_block(module, module.raise_, i, beta)
                f_j_after, _ = _get_block(module, module.lower, j, beta_ei)
                lhs = _mat_sub(_mat_mul(e_i_after, f_j) if f_j and e_i_after
                               else _zero_matrix(dim, dim),
                               _mat_mul(f_j_after, e_i) if e_i and f_j_after
                               else _zero_matrix(dim, dim))
                want = _zero_matrix(dim, dim)
                if i == j:
                    h = pairing(datum, i, module.weight_of(beta))
                    for k in range(dim):
                        want[k][k] = Fr(h)
                if lhs != want:
                    failures.append((beta, i, j))
                checked += 1
    return {"passed": not failures, "checked": checked, "failures": failures}


def verify_serre(module):
    """(ad E_i)^{1 - a_ij}(E_j) = 0 and the lowering mirror, exactly, on
    weight spaces whose whole commutator ladder stays within the truncation.
    Spaces touching the boundary are counted as untested."""
    datum = module.datum
    results = {"passed": True, "checked": 0, "untested": 0, "failures": []}
    for i in datum.colors():
        for j in datum.colors():
            if i == j:
                continue
            order = 1 - datum.a(i, j)
            for ops, direction in ((module.raise_, -1), (module.lower, +1)):
                for beta, dim in module.dims.items():
                    if not dim:
                        continue
                    # Raising ladders only move toward the anchor, so they
                    # always stay inside the truncation (missing spaces are
                    # genuinely zero).  Lowering ladders leave it when the
                    # final level would pass the depth bound.
                    if direction > 0 and sum(beta) + order + 1 > module.depth:
                        results["untested"] += 1
                        continue
                    blk = _ad_power_block(module, ops, i, j, order, beta)
                    if blk is None:
                        results["untested"] += 1
                        continue
                    if not _is_zero(blk):
                        results["passed"] = False
                        results["failures"].append((i, j, beta, direction))
                    results["checked"] += 1
    return results


def _op_block(module, ops, i, beta):
    blk, tgt = _get_block(module, ops, i, beta)
    return blk, tgt


def _ad_power_block(module, ops, i, j, order, beta):
    """Matrix of (ad X_i)^order (X_j) out of weight space beta."""
    # expand (ad x)^m (y) = sum_k (-1)^k C(m,k) x^{m-k} y x^k
    from math import comb

    dim = module.dims.get(beta, 0)
    total = None
    for k in range(order + 1):
        sign = (-1) ** k
        coeff = comb(order, k)
        cur = _identity_block(dim)
        b = beta
        ok = True
        for _ in range(k):
            blk, b = _op_block(module, ops, i, b)
            cur = _mat_mul(blk, cur)
        blk, b = _op_block(module, ops, j, b)
        cur = _mat_mul(blk, cur)
        for _ in range(order - k):
            blk, b = _op_block(module, ops, i, b)
            cur = _mat_mul(blk, cur)
        if not cur:
            cur = _zero_matrix(0, dim)
        term = _mat_scale(cur, Fr(sign * coeff))
        total = term if total is None else _mat_add_ragged(total, term)
    return total


def _mat_add_ragged(a, b):
    if not a:
        return b
    if not b:
        return a
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _identity_block(n):
    return [[Fr(1) if r == c else Fr(0) for c in range(n)] for r in range(n)]


def divided_power_span_check(module):
    """Each weight space within depth is spanned by divided-power monomials
    applied to the generating vector (lowering side for highest weight)."""
    datum = module.datum
    results = {"passed": True, "checked": 0, "failures": []}
    ops = module.lower if module.direction > 0 else module.raise_

    def monomial_vectors(beta):
        """Vectors F_{i_m}^{(r_m)} ... F_{i_1}^{(r_1)} v for all divided
        compositions of beta, as coordinate columns in the beta space."""
        out = []

        def rec(cur_beta, vec):
            if sum(cur_beta) == sum(beta):
                if cur_beta == beta:
                    out.append(vec)
                return
            for i in datum.colors():
                if cur_beta[i] >= beta[i]:
                    continue
                for r in range(1, beta[i] - cur_beta[i] + 1):
                    nxt = list(cur_beta)
                    nxt[i] += r
                    nxt = tuple(nxt)
                    if any(a > b for a, b in zip(nxt, beta)):
                        continue
                    cur = vec
                    b = cur_beta
                    good = True
                    for _ in range(r):
                        blk, b = _op_block(module, ops, i, b)
                        if not blk:
                            good = False
                            break
                        cur = [sum(blk[rr][cc] * cur[cc]
                                   for cc in range(len(cur)))
                               for rr in range(len(blk))]
                    if not good or not cur:
                        continue
                    fact = Fr(1)
                    for s in range(2, r + 1):
                        fact *= s
                    cur = [x / fact for x in cur]
                    rec(nxt, cur)

        start = (0,) * datum.rank
        if module.dims.get(start, 0):
            rec(start, [Fr(1)])
        return out

    for beta, dim in module.dims.items():
        if not dim:
            continue
        vecs = monomial_vectors(beta)
        if rank([list(v) for v in vecs]) != dim:
            results["passed"] = False
            results["failures"].append(beta)
        results["checked"] += 1
    return results


def tensor_character_check(datum, anchor_low, anchor_high, depth):
    """Character-level check that the lowest (x) highest tensor product has
    the expected multiplicities.

    Compares the convolution of the two module characters with the character
    of the tensor of the corresponding crystals, on every weight where both
    sides are provably complete, and (in finite type, when both supports are
    exhausted) decomposes the tensor character into irreducible characters
    with non-negative multiplicities.
    """
    from . import crystal as crys

    low = build_lowest_weight(datum, anchor_low, depth)
    high = build_highest_weight(datum, anchor_high, depth)
    anchor = tuple(a + b for a, b in zip(anchor_low, anchor_high))

    conv = {}
    for bl, dl in low.dims.items():
        if not dl:
            continue
        for bh, dh in high.dims.items():
            if not dh:
                continue
            off = tuple(h - l for l, h in zip(bl, bh))
            conv[off] = conv.get(off, 0) + dl * dh

    complete = set()
    for off in conv:
        if _offset_complete(off, low, high):
            complete.add(off)
    if not complete:
        raise IncompleteDepth("no complete weights at this depth")

    c_low = crys.lowest_weight_crystal(
        datum, anchor_low, None if datum.finite_type else depth)
    c_high = crys.highest_weight_crystal(
        datum, anchor_high, None if datum.finite_type else depth)
    tens = crys.tensor(c_low, c_high)
    tens_char = {}
    for w, m in crys.character(tens).items():
        tens_char[w.offset] = tens_char.get(w.offset, 0) + m

    mismatches = []
    for off in sorted(complete):
        if conv.get(off, 0) != tens_char.get(off, 0):
            mismatches.append((off, conv.get(off, 0), tens_char.get(off, 0)))

    decomposition = None
    if (datum.finite_type and low.support_exhausted
            and high.support_exhausted):
        decomposition = _weyl_decompose(datum, anchor, dict(conv))

    return {
        "passed": not mismatches and (decomposition is None
                                      or decomposition["passed"]),
        "complete_weights": len(complete),
        "mismatches": mismatches,
        "decomposition": decomposition,
    }


def _offset_complete(off, low, high):
    """All splittings off = bh - bl with bl, bh >= 0 lie within both
    truncations, taking exhausted supports into account."""
    rank_ = len(off)
    bound_l = low.depth if not low.support_exhausted else None
    bound_h = high.depth if not high.support_exhausted else None
    if bound_l is not None and bound_h is not None:
        return False  # neither side exhausted: unbounded splittings remain
    # iterate over the exhausted side's actual support
    if bound_l is None:
        support = [b for b, d in low.dims.items() if d]
        for bl in support:
            bh = tuple(o + l for o, l in zip(off, bl))
            if any(x < 0 for x in bh):
                continue
            if bound_h is not None and sum(bh) > bound_h:
                return False
        return True
    support = [b for b, d in high.dims.items() if d]
    for bh in support:
        bl = tuple(h - o for o, h in zip(off, bh))
        if any(x < 0 for x in bl):
            continue
        if sum(bl) > bound_l:
            return False
    return True


def _weyl_decompose(datum, anchor, char_by_offset):
    """Greedy decomposition into irreducible finite-type characters; the
    summand characters come from the crystal construction."""
    from . import crystal as crys

    remaining = {k: v for k, v in char_by_offset.items() if v}
    summands = []
    passed = True
    while remaining:
        # the highest remaining weight: smallest offset in dominance order
        off = min(remaining, key=lambda o: (sum(o), o))
        mult = remaining[off]
        lam = Weight(anchor, off)
        pairings = [pairing(datum, i, lam) for i in datum.colors()]
        if mult < 0 or any(p < 0 for p in pairings):
            passed = False
            break
        comp = crys.highest_weight_crystal(datum, tuple(pairings))
        summands.append({"highest_offset": off, "pairings": tuple(pairings),
                         "mult": mult, "dim": len(comp)})
        for w, m in crys.character(comp).items():
            key = tuple(a + b for a, b in zip(off, w.offset))
            s = remaining.get(key, 0) - mult * m
            if s:
                remaining[key] = s
            else:
                remaining.pop(key, None)
    return {"passed": passed, "summands": summands}
