"""The nil Hecke algebra NH_n: normal forms on the T_w basis with left
polynomial coefficients, the Demazure action on Pol_n, the matrix-algebra
picture over symmetric polynomials, and the rank-one idempotent.

An element is a finite sum  sum_w p_w(X) T_w  stored as {Perm: Poly}.  The
defining commutation is  T_i f = s_i(f) T_i + demazure(i, f)  and the
nil-Coxeter rule  T_v T_w = T_{vw} when lengths add, else 0.
"""

from __future__ import annotations

from fractions import Fraction

from .polysym import (
    InternalInconsistency,
    Perm,
    Poly,
    act_perm,
    demazure,
    nh_act_word,
    schubert_b,
    staircase_monomial,
    sym_decompose,
)

Fr = Fraction

__all__ = [
    "NHElement",
    "SizeMismatch",
    "nh_mul",
    "nh_act",
    "pi",
    "nh_to_matrix",
    "decompose_identity",
    "truncation_identity_check",
]

DEFAULT_N_CAP = 5


class SizeMismatch(ValueError):
    """Operands live in algebras with different numbers of strands."""


class NHElement:
    """Element of NH_n in normal form: {Perm w: left coefficient in Pol_n}."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        clean = {}
        if coords:
            for w, p in coords.items():
                if not isinstance(p, Poly):
                    p = Poly.const(n, p)
                if p:
                    clean[w] = p
        self.coords = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {Perm.identity(n): Poly.one(n)})

    @classmethod
    def poly(cls, p):
        return cls(p.n, {Perm.identity(p.n): p})

    @classmethod
    def x(cls, i, n):
        return cls.poly(Poly.x(i, n))

    @classmethod
    def t(cls, i, n):
        """Generator T_i, 1-based i."""
        return cls(n, {Perm.s(i, n): Poly.one(n)})

    @classmethod
    def t_word(cls, w, n=None):
        """T_w for a permutation (any reduced word gives the same element)."""
        n = n or w.n
        return cls(n, {w: Poly.one(n)})

    def __add__(self, other):
        self._check(other)
        coords = dict(self.coords)
        for w, p in other.coords.items():
            s = coords.get(w, Poly.zero(self.n)) + p
            if s:
                coords[w] = s
            else:
                coords.pop(w, None)
        return NHElement(self.n, coords)

    def __neg__(self):
        return NHElement(self.n, {w: -p for w, p in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = NHElement.poly(
                other if isinstance(other, Poly) else Poly.const(self.n, other))
        return nh_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NHElement(self.n, {w: p * other for w, p in self.coords.items()})
        if isinstance(other, Poly):
            return NHElement(self.n, {w: other * p for w, p in self.coords.items()})
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, NHElement) and self.n == other.n
                and self.coords == other.coords)

    def __bool__(self):
        return bool(self.coords)

    def _check(self, other):
        if not isinstance(other, NHElement) or other.n != self.n:
            raise SizeMismatch("NH elements with different strand counts")

    def __repr__(self):
        if not self.coords:
            return "0"
        bits = []
        for w in sorted(self.coords, key=lambda w: (w.length(), w.word)):
            word = "".join(f"T{i}" for i in w.reduced_word()) or "1"
            bits.append(f"({self.coords[w]})*{word}")
        return " + ".join(bits)


def _t_times_poly(w, q):
    """T_w * q as sum_u r_u T_u, by recursion on the canonical word of w."""
    if w.is_identity():
        return {w: q}
    word = w.reduced_word()
    c, rest = word[0], word[1:]
    n = w.n
    sub = Perm.s(c, n).inverse() * w  # s_c * w, one letter shorter
    inner = _t_times_poly(sub, q)
    out = {}
    sc = Perm.s(c, n)
    for u, r in inner.items():
        # T_c * (r T_u) = s_c(r) T_c T_u + demazure(c, r) T_u
        head = act_perm(sc, r)
        if head:
            cu = sc * u
            if cu.length() == u.length() + 1:
                prev = out.get(cu, Poly.zero(n)) + head
                if prev:
                    out[cu] = prev
                else:
                    out.pop(cu, None)
        tail = demazure(c, r)
        if tail:
            prev = out.get(u, Poly.zero(n)) + tail
            if prev:
                out[u] = prev
            else:
                out.pop(u, None)
    return out


def nh_mul(a, b):
    """Product in normal form via commutation and the nil-Coxeter rule."""
    a._check(b)
    n = a.n
    out = {}
    for w, p in a.coords.items():
        for v, q in b.coords.items():
            # (p T_w)(q T_v) = p * (T_w q) * T_v
            for u, r in _t_times_poly(w, q).items():
                uv = u * v
                if uv.length() != u.length() + v.length():
                    continue
                contrib = p * r
                if not contrib:
                    continue
                prev = out.get(uv, Poly.zero(n)) + contrib
                if prev:
                    out[uv] = prev
                else:
                    out.pop(uv, None)
    return NHElement(n, out)


def nh_act(a, f):
    """Action on Pol_n: T_w by composed Demazure operators, then the left
    coefficient multiplies."""
    if f.n != a.n:
        raise SizeMismatch("polynomial has wrong variable count")
    out = Poly.zero(a.n)
    for w, p in a.coords.items():
        out = out + p * nh_act_word(w.reduced_word(), f)
    return out


def pi(n):
    """The rank-one idempotent (-1)^{l(w_n)} X_1^{n-1}...X_{n-1} T_{w_n}."""
    w0 = Perm.longest(n)
    sign = -1 if w0.length() % 2 else 1
    return NHElement(n, {w0: staircase_monomial(n) * sign})


def nh_to_matrix(a):
    """Matrix of nh_act(a, -) on the b_w basis, entries in Sym_n.

    Rows and columns are indexed by Perm.all(n): length, then one-line form,
    identity first.  Entries are returned as a sparse dict
    (row, col) -> Poly; every entry is checked to be symmetric.
    """
    n = a.n
    perms = Perm.all(n)
    index = {w: k for k, w in enumerate(perms)}
    out = {}
    for col, w in enumerate(perms):
        image = nh_act(a, schubert_b(w, n))
        if not image:
            continue
        for v, c in sym_decompose(image, n).items():
            if not c.is_symmetric():
                raise InternalInconsistency(
                    f"matrix entry at ({index[v]},{col}) is not symmetric")
            out[(index[v], col)] = c
    return out


def matrix_mul(m1, m2, n):
    out = {}
    by_row = {}
    for (r, c), p in m2.items():
        by_row.setdefault(r, []).append((c, p))
    for (r, k), p in m1.items():
        for c, q in by_row.get(k, ()):
            s = out.get((r, c), Poly.zero(n)) + p * q
            if s:
                out[(r, c)] = s
            else:
                out.pop((r, c), None)
    return out


def decompose_identity(n, cap=DEFAULT_N_CAP):
    """Orthogonal idempotents summing to 1, one per permutation, found by
    pulling the diagonal matrix units back through nh_to_matrix.

    Each idempotent is degree-zero, so it is a combination of x^a T_w with
    |a| = l(w); the pullback is a linear solve in those coordinates.
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds cap {cap} (n! blow-up)")
    if n == 1:
        return [NHElement.one(1)]
    perms = Perm.all(n)
    # unknown basis: (w, a) with |a| = l(w)
    unknowns = []
    for w in perms:
        for a in _exps_of_total(w.length(), n):
            unknowns.append((w, a))
    # column images: for each unknown u and each basis b_v, the coordinates
    # of nh_act(u, b_v) over monomials; assemble one big linear system per
    # target matrix unit.
    images = []  # per unknown: dict (col v index, monomial) -> coeff
    for w, a in unknowns:
        elt = NHElement(n, {w: Poly.monomial(a)})
        col = {}
        for vi, v in enumerate(perms):
            img = nh_act(elt, schubert_b(v, n))
            for e, c in img.terms.items():
                col[(vi, e)] = c
        images.append(col)
    echelon = {}
    order = {}

    def keyfun(k):
        if k not in order:
            order[k] = len(order)
        return order[k]

    rows = []
    for idx, col in enumerate(images):
        row = dict(col)
        combo = {idx: Fr(1)}
        while row:
            piv = max(row, key=keyfun)
            if piv in echelon:
                prow, pcombo = echelon[piv]
                f = row[piv] / prow[piv]
                _sub_scaled(row, prow, f)
                _sub_scaled(combo, pcombo, f)
            else:
                echelon[piv] = (row, combo)
                break
        rows.append(None)

    out = []
    for vi, v in enumerate(perms):
        # target: b_v -> b_v, all other columns to zero
        target = {(vi, e): c for e, c in schubert_b(v, n).terms.items()}
        combo = {}
        row = dict(target)
        while row:
            piv = max(row, key=keyfun)
            if piv not in echelon:
                raise InternalInconsistency(
                    "matrix unit not in the image of the degree-zero part")
            prow, pcombo = echelon[piv]
            f = row[piv] / prow[piv]
            _sub_scaled(row, prow, f)
            for j, c in pcombo.items():
                s = combo.get(j, 0) + f * c
                if s:
                    combo[j] = s
                else:
                    combo.pop(j, None)
        coords = {}
        for j, c in combo.items():
            w, a = unknowns[j]
            p = coords.get(w, Poly.zero(n)) + Poly.monomial(a, c)
            if p:
                coords[w] = p
            else:
                coords.pop(w, None)
        out.append(NHElement(n, coords))
    return out


def _sub_scaled(target, source, factor):
    for k, c in source.items():
        s = target.get(k, 0) - factor * c
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def _exps_of_total(total, n):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _exps_of_total(total - first, n - 1):
            yield (first,) + rest


def truncation_identity_check(n, f_coeffs):
    """Check the two identities behind the divided-power vanishing bound.

    `f_coeffs` are the coefficients (c_0, ..., c_{n-1}) of a monic degree-n
    polynomial f(t) = t^n + c_{n-1} t^{n-1} + ... + c_0.  Works in NH_{n+1}:

      (-1)^{l(w)} pi_{n+1} f(X_1) X_2^{n-1}...X_n T_w  ==  pi_{n+1}
      T_w X_1^m X_2^{n-1}...X_n T_w  ==  0   for m < n,   w the longest elt.
    """
    m = n + 1
    w0 = Perm.longest(m)
    sign = -1 if w0.length() % 2 else 1
    t_w0 = NHElement.t_word(w0, m)
    tail = Poly.one(m)
    for k in range(2, m):
        tail = tail * Poly.x(k, m) ** (n + 1 - k)

    x1 = Poly.x(1, m)
    f_of_x1 = x1 ** n
    for d, c in enumerate(f_coeffs):
        f_of_x1 = f_of_x1 + Poly.const(m, c) * x1 ** d

    lhs = sign * (pi(m) * NHElement.poly(f_of_x1 * tail) * t_w0)
    if lhs != pi(m):
        return False
    for power in range(n):
        probe = t_w0 * NHElement.poly(x1 ** power * tail) * t_w0
        if probe:
            return False
    return True
