"""Cyclotomic quotients of the quiver Hecke algebra on n strands.

The quotient is by the two-sided ideal generated by the anchor-many dots on
the first (rightmost) strand:  x_1^{<h_{i_1}, anchor>} e(i)  over all color
words i.  No closed-form basis is assumed; instead the ideal is saturated
inside the span of basis monomials with dot degree at most a cap D, the cap
increasing along a schedule until

  * the surviving monomials all sit far enough below the cap that one more
    generator multiplication cannot escape it,
  * the quotient dimension agrees for two consecutive caps, and
  * every dot acts nilpotently on the computed quotient.

Failing that, the instance is reported as CapExceeded and no dimension is
ever published for it.  The reported quotient carries an exact multiplication
table, its content-block decomposition, graded dimensions for homogeneous
parameters, and a split-semisimple simple count per block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .cartan import Weight, pairing
from .klr import KLRElement, get_engine, term_degree, word_after, _lexmin, _id_tuple
from .linalg import nullspace, rref

Fr = Fraction

__all__ = [
    "CycloAlgebra",
    "CapExceeded",
    "NotDominant",
    "NonSplit",
    "cyclo_build",
    "cyclo_dims",
    "count_simples",
    "theorem_t_check",
    "default_schedule",
]


class CapExceeded(RuntimeError):
    """Saturation did not certify a stable quotient within the schedule."""


class NotDominant(ValueError):
    pass


class NonSplit(RuntimeError):
    """The rational numbers do not split a semisimple block quotient."""


def content_of(word, rank):
    beta = [0] * rank
    for c in word:
        beta[c] += 1
    return tuple(beta)


def _primitive(vec, piv):
    """Scale a vector to primitive integer form with positive pivot."""
    from math import gcd

    denom = 1
    for c in vec.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    numer = 0
    for c in vec.values():
        numer = gcd(numer, abs(c.numerator) * (denom // c.denominator))
    scale = Fr(denom, numer)
    if vec[piv] < 0:
        scale = -scale
    return {k: c * scale for k, c in vec.items()}


@dataclass
class CycloAlgebra:
    """Finite-dimensional quotient with an exact multiplication table.

    basis: list of monomial keys (w, a, i); table[r][c]: coordinates of
    basis[r] * basis[c]; right_word/left_word per element; degrees when the
    parameters are homogeneous; content_blocks maps a content vector to the
    list of basis indices in its block.
    """

    params: object
    anchor: tuple
    n: int
    cap: int
    basis: list
    table: list
    content_blocks: dict
    degrees: list = None
    _reduce: object = field(default=None, repr=False)

    def dim(self):
        return len(self.basis)

    def identity_coords(self):
        out = [Fr(0)] * self.dim()
        eng = get_engine(self.params, self.n)
        for word in iproduct(self.params.datum.colors(), repeat=self.n):
            vec = self._reduce({(_id_tuple(self.n), (0,) * self.n, word): Fr(1)})
            for k, c in vec.items():
                out[k] += c
        return out


def default_schedule(params, anchor, n):
    k_max = max([1] + [k for k in anchor])
    base = max(1, n) * max(1, k_max)
    return (base, 2 * base, 3 * base)


def _degree_margin(params):
    """Upper bound on the dot-degree growth of a single generator
    multiplication of a normal-form monomial."""
    datum = params.datum
    worst = 1
    for i in datum.colors():
        for j in datum.colors():
            if i != j:
                worst = max(worst, -datum.a(i, j) - datum.a(j, i))
    return worst


class _Saturation:
    """Echelonized span of the ideal within the dot-degree window.

    Monomials within the window are ranked once (by dot degree, then
    exponents, then permutation and word) and vectors are kept as primitive
    integer {rank: int} dicts; row operations are fraction-free
    cross-multiplications with content stripping, so no rational gcd churn
    happens in the inner loop.  The echelon is fully reduced and, for
    homogeneous parameters, automatically sharded by (words, degree).
    """

    def __init__(self, params, n, cap):
        self.params = params
        self.n = n
        self.cap = cap
        self.eng = get_engine(params, n)
        monos = _all_monomials(params, n, cap)
        monos.sort(key=lambda m: (sum(m[1]), m[1], m[0], m[2]))
        self.mon_of_rank = monos
        self.rank_of = {m: k for k, m in enumerate(monos)}
        self.rows = {}     # pivot rank -> primitive integer row, pivot > 0
        self.occurs = {}   # rank -> set of pivots whose rows contain it

    def to_ranked(self, vec):
        """Convert a monomial-keyed Fraction vector to a primitive integer
        ranked vector; None when it leaves the window."""
        out = {}
        rank_of = self.rank_of
        for key, c in vec.items():
            r = rank_of.get(key)
            if r is None:
                return None
            out[r] = c
        return _int_primitive(out) if out else {}

    def reduce(self, vec):
        """Fraction-free reduction until the leading rank has no pivot row.

        Input and output are integer vectors; content is stripped every few
        steps to keep entries small.  Returns (vector, pivot or None)."""
        vec = dict(vec)
        rows = self.rows
        steps = 0
        while vec:
            piv = max(vec)
            row = rows.get(piv)
            if row is None:
                return _int_primitive(vec), piv
            a, b = row[piv], vec.pop(piv)
            if a != 1:
                for k in vec:
                    vec[k] *= a
            for k, c in row.items():
                if k == piv:
                    continue
                s = vec.get(k, 0) - b * c
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
            steps += 1
            if steps % 8 == 0 and vec:
                vec = _int_primitive(vec)
        return vec, None

    def reduce_full(self, vec):
        """Full reduction of a Fraction vector modulo the span; returns the
        residue as {rank: Fraction} supported on non-pivot ranks.

        Exactness matters here (coordinates, not just membership), so the
        elimination tracks an overall rational scale."""
        vec = {k: Fr(c) for k, c in vec.items()}
        rows = self.rows
        out = {}
        while vec:
            piv = max(vec)
            row = rows.get(piv)
            if row is None:
                out[piv] = vec.pop(piv)
                continue
            f = vec.pop(piv) / row[piv]
            for k, c in row.items():
                if k == piv:
                    continue
                s = vec.get(k, 0) - f * c
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return out

    def insert(self, vec):
        """Reduce, store, and back-substitute; the echelon stays fully
        reduced with primitive integer rows.  Returns (was_new, row)."""
        vec, piv = self.reduce(vec)
        if piv is None:
            return False, None
        if vec[piv] < 0:
            vec = {k: -c for k, c in vec.items()}
        self._store(piv, vec)
        for q in list(self.occurs.get(piv, ())):
            if q == piv:
                continue
            row = self.rows[q]
            a, b = vec[piv], row[piv]
            new_row = {}
            for k, c in row.items():
                new_row[k] = c * a
            for k, c in vec.items():
                s = new_row.get(k, 0) - b * c
                if s:
                    new_row[k] = s
                else:
                    new_row.pop(k, None)
            self._unindex(q, row)
            new_row = _int_primitive(new_row)
            if new_row[q] < 0:
                new_row = {k: -c for k, c in new_row.items()}
            self._store(q, new_row)
        return True, vec

    def _store(self, piv, row):
        self.rows[piv] = row
        occurs = self.occurs
        for k in row:
            bucket = occurs.get(k)
            if bucket is None:
                occurs[k] = {piv}
            else:
                bucket.add(piv)

    def _unindex(self, piv, row):
        occurs = self.occurs
        for k in row:
            bucket = occurs.get(k)
            if bucket is not None:
                bucket.discard(piv)

    def saturate(self, generators):
        """Close the span under one-generator products on both sides,
        discarding any product that leaves the dot-degree window.  The
        worklist is processed lowest pivot first."""
        import heapq

        n = self.n
        heap = []
        counter = 0
        for g in generators:
            rg = self.to_ranked(g)
            if rg:
                heapq.heappush(heap, (max(rg), counter, rg))
                counter += 1
        gen_moves = []
        for m in range(n):
            gen_moves.append(("lx", m))
            gen_moves.append(("rx", m))
        for k in range(n - 1):
            gen_moves.append(("lpsi", k))
            gen_moves.append(("rpsi", k))

        while heap:
            _, _, vec = heapq.heappop(heap)
            fresh, stored = self.insert(vec)
            if not fresh:
                continue
            plain = {self.mon_of_rank[r]: Fr(c) for r, c in stored.items()}
            for kind, idx in gen_moves:
                prod = self._apply(kind, idx, plain)
                if not prod:
                    continue
                ranked = self.to_ranked(prod)
                if ranked is None:
                    continue
                red, piv = self.reduce(ranked)
                if piv is not None:
                    heapq.heappush(heap, (piv, counter, red))
                    counter += 1

    def _apply(self, kind, idx, vec):
        eng = self.eng
        if kind == "lx":
            return eng.lmul_x(idx, vec)
        if kind == "rx":
            return eng.rmul_x(idx, vec)
        if kind == "lpsi":
            return eng.lmul_psi(idx, vec)
        return eng.rmul_psi(idx, vec)

    def quotient_monomials(self):
        return [m for r, m in enumerate(self.mon_of_rank) if r not in self.rows]


def _int_primitive(vec):
    """Scale a rational/integer vector to primitive integer form."""
    from math import gcd

    denom = 1
    for c in vec.values():
        d = getattr(c, "denominator", 1)
        if d != 1:
            denom = denom * d // gcd(denom, d)
    g = 0
    for c in vec.values():
        num = c.numerator if isinstance(c, Fraction) else c
        d = getattr(c, "denominator", 1)
        g = gcd(g, abs(num) * (denom // d))
        if g == 1 and denom == 1:
            break
    if denom == 1 and g in (0, 1):
        return {k: int(c) for k, c in vec.items()}
    out = {}
    for k, c in vec.items():
        num = c.numerator if isinstance(c, Fraction) else c
        d = getattr(c, "denominator", 1)
        out[k] = num * (denom // d) // g
    return out


def _all_monomials(params, n, cap):
    out = []
    datum = params.datum
    from .polysym import Perm

    perms = [tuple(p.word) for p in Perm.all(n)]
    for i in iproduct(datum.colors(), repeat=n):
        for w in perms:
            for a in _exps_up_to(cap, n):
                out.append((w, tuple(a), tuple(i)))
    return out


def _exps_up_to(total, n):
    if n == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _exps_up_to(total - first, n - 1):
            yield (first,) + rest


def _ideal_generators(params, anchor, n):
    """x_1^{k_{i_1}} e(i) over all words, as raw vectors."""
    out = []
    for i in iproduct(params.datum.colors(), repeat=n):
        k = anchor[i[0]]
        a = [0] * n
        a[0] = k
        out.append({(_id_tuple(n), tuple(a), tuple(i)): Fr(1)})
    return out


_BUILD_CACHE = {}


def cyclo_build(params, anchor, n, schedule=None):
    """Build the cyclotomic quotient at the given anchor on n strands.

    Returns a CycloAlgebra (memoized per input).  Raises NotDominant for a
    bad anchor and CapExceeded if the schedule ends before the quotient
    stabilizes; an unstable intermediate dimension is never exposed.
    """
    key = (params, tuple(anchor), n, tuple(schedule) if schedule else None)
    cached = _BUILD_CACHE.get(key)
    if cached is not None:
        return cached
    alg = _cyclo_build_uncached(params, anchor, n, schedule)
    _BUILD_CACHE[key] = alg
    return alg


def _cyclo_build_uncached(params, anchor, n, schedule=None):
    anchor = tuple(int(k) for k in anchor)
    datum = params.datum
    if len(anchor) != datum.rank or any(k < 0 for k in anchor):
        raise NotDominant(f"anchor {anchor} is not dominant")
    if n == 0:
        alg = CycloAlgebra(params, anchor, 0, 0, [((), (), ())],
                           [[[Fr(1)]]], {(0,) * datum.rank: [0]},
                           degrees=[0] if params.homogeneous else None)
        alg._reduce = lambda vec: {0: sum(vec.values(), Fr(0))}
        return alg

    margin = _degree_margin(params)
    schedule = tuple(schedule) if schedule else default_schedule(params, anchor, n)
    prev_dims = None
    for cap in schedule:
        sat = _Saturation(params, n, cap)
        sat.saturate(_ideal_generators(params, anchor, n))
        survivors = sat.quotient_monomials()
        # closure: one more multiplication must not escape the window
        if any(sum(a) > cap - margin for (_, a, _) in survivors):
            prev_dims = None
            continue
        dims = _dims_by_content(params, survivors)
        if prev_dims is not None and dims == prev_dims:
            alg = _assemble(params, anchor, n, cap, sat, survivors)
            if _dots_nilpotent(alg):
                return alg
        prev_dims = dims
    raise CapExceeded(
        f"no stable nilpotent quotient within caps {schedule} "
        f"(anchor {anchor}, n={n})")


def _dims_by_content(params, survivors):
    rank = params.datum.rank
    out = {}
    for (w, a, i) in survivors:
        beta = content_of(i, rank)
        out[beta] = out.get(beta, 0) + 1
    return out


def _assemble(params, anchor, n, cap, sat, survivors):
    datum = params.datum
    basis = sorted(survivors, key=lambda m: sat.rank_of[m])
    index = {m: k for k, m in enumerate(basis)}
    dim = len(basis)
    eng = sat.eng

    def reduce_vec(vec):
        ranked = sat.to_ranked(vec)
        assert ranked is not None, "basis product escaped the window"
        residue = sat.reduce_full(ranked)
        out = {}
        for r, c in residue.items():
            out[index[sat.mon_of_rank[r]]] = c
        return out

    # generator action matrices on the right: columns are basis elements
    right_actions = {}
    moves = [("rx", m) for m in range(n)] + [("rpsi", k) for k in range(n - 1)]
    for kind, idx in moves:
        cols = []
        for m in basis:
            prod = sat._apply(kind, idx, {m: Fr(1)})
            cols.append(reduce_vec(prod) if prod else {})
        right_actions[(kind, idx)] = cols

    def apply_right(coords, kind, idx):
        cols = right_actions[(kind, idx)]
        out = {}
        for r, c in coords.items():
            for k, v in cols[r].items():
                s = out.get(k, 0) + c * v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    table = []
    for r, mr in enumerate(basis):
        row = []
        for c, mc in enumerate(basis):
            w, a, i = mc
            coords = {r: Fr(1)}
            # right-multiply by the generator word of mc: crossings, dots, e(i)
            for letter in _lexmin(w):
                coords = apply_right(coords, "rpsi", letter)
            for slot, power in enumerate(a):
                for _ in range(power):
                    coords = apply_right(coords, "rx", slot)
            coords = {k: v for k, v in coords.items() if basis[k][2] == i}
            vec = [Fr(0)] * dim
            for k, v in coords.items():
                vec[k] = v
            row.append(vec)
        table.append(row)

    blocks = {}
    for k, (w, a, i) in enumerate(basis):
        blocks.setdefault(content_of(i, datum.rank), []).append(k)

    degrees = None
    if params.homogeneous:
        degrees = [term_degree(params, w, a, i) for (w, a, i) in basis]

    alg = CycloAlgebra(params, anchor, n, cap, basis, table, blocks, degrees)
    alg._reduce = reduce_vec
    _check_table(alg)
    return alg


def _check_table(alg):
    """Associativity spot checks and content-block orthogonality."""
    dim = alg.dim()
    rank = alg.params.datum.rank
    for r in range(dim):
        for c in range(dim):
            br = content_of(alg.basis[r][2], rank)
            bc = content_of(alg.basis[c][2], rank)
            if br != bc and any(alg.table[r][c]):
                raise AssertionError("product crosses content blocks")


def _dots_nilpotent(alg):
    """Every dot must be nilpotent as a multiplication operator."""
    n = alg.n
    dim = alg.dim()
    if not dim:
        return True
    eng = get_engine(alg.params, n)
    for m in range(n):
        # matrix of right multiplication by x_{m+1} (block-diagonal per word)
        cols = []
        for key in alg.basis:
            prod = eng.rmul_x(m, {key: Fr(1)})
            cols.append(alg._reduce(prod))
        # nilpotency: iterate vectors until all vanish or dim exceeded
        mat = cols
        alive = {k: {r: v for r, v in col.items() if v} for k, col in enumerate(mat)}
        for _ in range(dim + 1):
            if not any(alive.values()):
                break
            nxt = {}
            for k, col in alive.items():
                acc = {}
                for r, v in col.items():
                    for rr, vv in mat[r].items():
                        s = acc.get(rr, 0) + v * vv
                        if s:
                            acc[rr] = s
                        else:
                            acc.pop(rr, None)
                nxt[k] = acc
            alive = nxt
        else:
            pass
        if any(alive.values()):
            return False
    return True


def cyclo_dims(alg):
    """Per-content dimensions, with graded dimensions when available.

    Returns {content: {"dim": int, "graded": {degree: count} or None}}.
    """
    out = {}
    for beta, idxs in sorted(alg.content_blocks.items()):
        graded = None
        if alg.degrees is not None:
            graded = {}
            for k in idxs:
                graded[alg.degrees[k]] = graded.get(alg.degrees[k], 0) + 1
            graded = dict(sorted(graded.items()))
        out[beta] = {"dim": len(idxs), "graded": graded}
    return out


def _block_matrices(alg, beta):
    idxs = alg.content_blocks.get(beta, [])
    m = len(idxs)
    pos = {g: k for k, g in enumerate(idxs)}
    mats = []
    for g in idxs:
        mat = [[Fr(0)] * m for _ in range(m)]
        for c, gc in enumerate(idxs):
            col = alg.table[g][gc]
            for r, gr in enumerate(idxs):
                mat[r][c] = col[gr]
        mats.append(mat)
    return idxs, mats


def count_simples(alg, beta):
    """Number of simple modules of the content block over a splitting field.

    Computes the Jacobson radical as the radical of the trace form of the
    regular representation (characteristic zero), then the dimension of the
    center of the semisimple quotient.  If the center is not split over the
    rationals the count would require a field extension and NonSplit is
    raised instead of guessing.
    """
    beta = tuple(beta)
    idxs = alg.content_blocks.get(beta)
    if not idxs:
        return 0
    idxs, left_mults = _block_matrices(alg, beta)
    m = len(idxs)
    # trace form T[a][b] = tr(L_a L_b)
    tform = [[sum(left_mults[a][r][k] * left_mults[b][k][r]
                  for r in range(m) for k in range(m))
              for b in range(m)] for a in range(m)]
    rad = nullspace(tform, m)
    red, pivots = rref(rad) if rad else ([], [])
    rad_dim = len(pivots)
    ss_dim = m - rad_dim

    # semisimple quotient on the complement coordinates
    comp = [c for c in range(m) if c not in pivots]
    rad_rows = red

    def project(vec):
        v = list(vec)
        for row, pc in zip(rad_rows, pivots):
            f = v[pc]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return [v[c] for c in comp]

    def block_mul(u, v):
        out = [Fr(0)] * m
        for a in range(m):
            if not u[a]:
                continue
            for b in range(m):
                if v[b]:
                    coeff = u[a] * v[b]
                    col = left_mults[a]
                    for r in range(m):
                        out[r] += coeff * col[r][b]
        return out

    def lift(coords):
        v = [Fr(0)] * m
        for k, c in enumerate(comp):
            v[c] = coords[k]
        return v

    # structure of the quotient: represent elements by complement coords
    basis_q = [lift([Fr(1) if k == t else Fr(0) for k in range(ss_dim)])
               for t in range(ss_dim)]
    mult_q = [[project(block_mul(basis_q[a], basis_q[b]))
               for b in range(ss_dim)] for a in range(ss_dim)]

    # center: [z, b] = 0 for all quotient basis elements b
    rows = []
    for b in range(ss_dim):
        for coord in range(ss_dim):
            rows.append([mult_q[a][b][coord] - mult_q[b][a][coord]
                         for a in range(ss_dim)])
    center = nullspace(rows, ss_dim) if rows else []
    z_dim = len(center) if center else (1 if ss_dim else 0)

    if ss_dim and not _center_splits(center, mult_q, ss_dim):
        raise NonSplit(
            f"block {beta}: center of dim {z_dim} does not split over Q")
    return z_dim


def _center_splits(center_basis, mult_q, ss_dim):
    """Simultaneous rational diagonalization of the center.

    Returns True when refining by rational eigenvalues of each center
    generator splits the center into one-dimensional pieces.
    """
    z = len(center_basis)
    if z <= 1:
        return True

    def mul_center(u, v):
        out = [Fr(0)] * ss_dim
        for a in range(ss_dim):
            if not u[a]:
                continue
            for b in range(ss_dim):
                if v[b]:
                    coeff = u[a] * v[b]
                    for r in range(ss_dim):
                        out[r] += coeff * mult_q[a][b][r]
        return out

    # express products of center elements back in center coordinates
    from .linalg import rref as _rref

    cmat, cpiv = _rref(center_basis)

    def center_coords(vec):
        v = list(vec)
        out = [Fr(0)] * z
        for k, (row, pc) in enumerate(zip(cmat, cpiv)):
            f = v[pc]
            out[k] = f
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        if any(v):
            raise AssertionError("center product left the center")
        return out

    ops = []
    for g in range(z):
        cols = [center_coords(mul_center(center_basis[g], center_basis[b]))
                for b in range(z)]
        ops.append([[cols[c][r] for c in range(z)] for r in range(z)])

    spaces = [[_unit(z, k) for k in range(z)]]
    for op in ops:
        refined = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
                continue
            pieces = _split_by_rational_eigenvalues(op, space)
            if pieces is None:
                return False
            refined.extend(pieces)
        spaces = refined
    return len(spaces) == z


def _unit(n, k):
    return [Fr(1) if j == k else Fr(0) for j in range(n)]


def _split_by_rational_eigenvalues(op, space):
    """Split a subspace (list of coordinate vectors) into eigenspaces of the
    operator using only rational eigenvalues; None when they do not fill it."""
    d = len(space)
    images = []
    for v in space:
        img = [sum(op[r][c] * v[c] for c in range(len(v))) for r in range(len(v))]
        images.append(img)
    # restrict: solve img = space * coeffs
    from .linalg import rref as _rref

    smat, spiv = _rref(space)

    def in_coords(vec):
        v = list(vec)
        out = [Fr(0)] * d
        for k, (row, pc) in enumerate(zip(smat, spiv)):
            f = v[pc]
            out[k] = f
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        if any(v):
            raise AssertionError("operator does not preserve the subspace")
        return out

    small = [[Fr(0)] * d for _ in range(d)]
    for c, img in enumerate(images):
        col = in_coords(img)
        for r in range(d):
            small[r][c] = col[r]

    eigs = _rational_eigenvalues(small)
    pieces = []
    covered = 0
    for lam in eigs:
        shifted = [[small[r][c] - (lam if r == c else 0) for c in range(d)]
                   for r in range(d)]
        kern = nullspace(shifted, d)
        if not kern:
            continue
        covered += len(kern)
        pieces.append([
            [sum(k[j] * space[j][t] for j in range(d))
             for t in range(len(space[0]))]
            for k in kern])
    if covered != d:
        return None
    return pieces


def _rational_eigenvalues(mat):
    """Rational roots of the characteristic polynomial (desk-scale sizes)."""
    d = len(mat)
    if d == 0:
        return []
    # characteristic polynomial by Faddeev-LeVerrier (exact over Q)
    from .linalg import matmul, identity

    coeffs = [Fr(1)]  # leading
    m = identity(d)
    a = mat
    mk = [row[:] for row in a]
    for k in range(1, d + 1):
        tr = sum(mk[j][j] for j in range(d))
        c = -tr / k
        coeffs.append(c)
        if k < d:
            mk = matmul(a, [[mk[r][cc] + (c if r == cc else 0)
                             for cc in range(d)] for r in range(d)])
    # clear denominators to an integer polynomial
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    lead, trail = ints[0], ints[-1]
    roots = set()
    if trail == 0:
        roots.add(Fr(0))
        while ints[-1] == 0 and len(ints) > 1:
            ints = ints[:-1]
        trail = ints[-1]
    for p in _divisors(abs(trail)):
        for q in _divisors(abs(lead)):
            for num in (p, -p):
                cand = Fr(num, q)
                if _poly_eval(ints, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _poly_eval(coeffs, x):
    acc = Fr(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def theorem_t_check(params, anchor, n_max, schedule=None, depth_pad=0):
    """Compare the simple count of every content block against the crystal.

    For each content beta with |beta| <= n_max the number of simples of the
    beta-block of the quotient on |beta| strands must equal the number of
    crystal elements of weight anchor - beta in the highest-weight crystal.
    Inconclusive outcomes (CapExceeded, NonSplit) are recorded as such and
    never counted as a pass.
    """
    from . import crystal as crys

    datum = params.datum
    anchor = tuple(int(k) for k in anchor)
    depth = None if datum.finite_type else n_max + depth_pad
    bkappa = crys.highest_weight_crystal(datum, anchor, depth)
    crystal_counts = {}
    for w in bkappa.weights:
        crystal_counts[w.offset] = crystal_counts.get(w.offset, 0) + 1

    rows = []
    passed = True
    inconclusive = False
    for n in range(n_max + 1):
        try:
            alg = cyclo_build(params, anchor, n, schedule)
        except CapExceeded as exc:
            for beta in _contents(n, datum.rank):
                rows.append({"content": beta, "status": "inconclusive",
                             "reason": f"CapExceeded: {exc}"})
            inconclusive = True
            continue
        for beta in _contents(n, datum.rank):
            want = crystal_counts.get(beta, 0)
            try:
                got = count_simples(alg, beta)
            except NonSplit as exc:
                rows.append({"content": beta, "status": "inconclusive",
                             "reason": f"NonSplit: {exc}"})
                inconclusive = True
                continue
            ok = got == want
            if not ok:
                passed = False
            rows.append({"content": beta, "simples": got,
                         "crystal": want,
                         "status": "pass" if ok else "fail"})
    return {"passed": passed and not inconclusive,
            "inconclusive": inconclusive, "rows": rows}


def _contents(n, rank):
    if rank == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _contents(n - first, rank - 1):
            yield (first,) + rest
