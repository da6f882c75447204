"""Exact multivariate polynomials, the symmetric group, Demazure operators
and the Schubert-type basis of the polynomial ring over its invariants.

Everything here is over the rationals (`fractions.Fraction`), with sparse
dict-of-monomials storage.  Variables are written X_1, ..., X_n; exponent
vectors are Python tuples indexed from 0, so `exps[k]` is the exponent of
X_{k+1}.

The Demazure operator follows the convention

    demazure(i, f) = (s_i(f) - f) / (X_i - X_{i+1}),

which gives demazure(1, X_1) = -1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

Exps = tuple  # exponent vector, length n
Fr = Fraction

__all__ = [
    "Poly",
    "Perm",
    "demazure",
    "act_perm",
    "schubert_b",
    "sym_decompose",
    "elementary_sym",
    "complete_sym",
    "monomial_sym",
    "partitions_max_parts",
    "staircase_monomial",
]


def _grlex_key(exps):
    return (sum(exps), tuple(-e for e in exps))


class Poly:
    """Sparse polynomial in n variables with Fraction coefficients.

    Immutable by convention: no method mutates `terms` after construction.
    Zero coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = Fr(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: Fr(c)})

    @classmethod
    def one(cls, n):
        return cls.const(n, 1)

    @classmethod
    def x(cls, i, n):
        """The variable X_i, 1-based: x(1, n) is X_1."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): Fr(1)})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): Fr(coeff)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(self.n, terms)

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fr(other)
            if not c:
                return Poly.zero(self.n)
            return Poly(self.n, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly(self.n, terms)

    __rmul__ = __mul__

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return Poly.const(self.n, other)

    # -- queries -----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_parts(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Poly(self.n, t) for d, t in sorted(parts.items())}

    def constant_term(self):
        return self.terms.get((0,) * self.n, Fr(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def is_symmetric(self):
        n = self.n
        for k in range(1, n):
            if act_perm(Perm.s(k, n), self) != self:
                return False
        return True

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"X{k + 1}" + (f"^{p}" if p > 1 else "")
                for k, p in enumerate(e)
                if p
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _inversions(word):
    n = len(word)
    return sum(1 for p in range(n) for q in range(p + 1, n) if word[p] > word[q])


@lru_cache(maxsize=None)
def _lexmin_word(word):
    """Lexicographically smallest reduced word, as a tuple of 0-based
    crossing indices.  Recursively peels the smallest left descent."""
    w = list(word)
    n = len(w)
    inv = {v: p for p, v in enumerate(w)}
    for c in range(n - 1):
        if inv[c] > inv[c + 1]:
            sw = list(w)
            p, q = inv[c], inv[c + 1]
            sw[p], sw[q] = sw[q], sw[p]
            return (c,) + _lexmin_word(tuple(sw))
    return ()


class Perm:
    """Permutation of {1..n}, stored as a 0-based one-line tuple.

    `self.word[p]` is the (0-based) image of position p.  Length and the
    canonical (lex-smallest) reduced expression are cached per one-line form.
    """

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(word)
        if sorted(word) != list(range(len(word))):
            raise ValueError(f"not a permutation of 0..{len(word) - 1}: {word}")
        self.word = word

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def s(cls, k, n):
        """Simple transposition s_k (1-based), swapping k and k+1."""
        w = list(range(n))
        w[k - 1], w[k] = w[k], w[k - 1]
        return cls(w)

    @classmethod
    def longest(cls, n):
        return cls(range(n - 1, -1, -1))

    @classmethod
    def all(cls, n):
        """All of S_n ordered by (length, one-line form), identity first."""
        return sorted((cls(p) for p in permutations(range(n))),
                      key=lambda w: (w.length(), w.word))

    @property
    def n(self):
        return len(self.word)

    def length(self):
        return _inversions(self.word)

    def reduced_word(self):
        """Canonical reduced expression as 1-based crossing indices."""
        return tuple(c + 1 for c in _lexmin_word(self.word))

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Perm(tuple(self.word[other.word[p]] for p in range(self.n)))

    def inverse(self):
        inv = [0] * self.n
        for p, v in enumerate(self.word):
            inv[v] = p
        return Perm(inv)

    def __call__(self, p):
        """Image of 1-based position p, 1-based."""
        return self.word[p - 1] + 1

    def __eq__(self, other):
        return isinstance(other, Perm) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def is_identity(self):
        return all(v == p for p, v in enumerate(self.word))

    def __repr__(self):
        return "Perm" + str(tuple(v + 1 for v in self.word))


def act_perm(w, f):
    """Variable substitution X_p -> X_{w(p)}.

    Satisfies act_perm(v * w, f) == act_perm(v, act_perm(w, f)).
    """
    if isinstance(f, Poly) and w.n != f.n:
        raise ValueError("size mismatch")
    terms = {}
    for e, c in f.terms.items():
        ne = [0] * f.n
        for p, exp in enumerate(e):
            ne[w.word[p]] = exp
        ne = tuple(ne)
        s = terms.get(ne, 0) + c
        if s:
            terms[ne] = s
        else:
            del terms[ne]
    return Poly(f.n, terms)


def demazure(i, f):
    """(s_i(f) - f) / (X_i - X_{i+1}), 1-based i.  The division is exact."""
    n = f.n
    if not 1 <= i < n:
        raise ValueError(f"crossing index {i} out of range 1..{n - 1}")
    num = act_perm(Perm.s(i, n), f) - f
    return _divide_by_var_difference(num, i - 1, i)


def _divide_by_var_difference(num, a, b):
    """Exact division of `num` by (X_{a+1} - X_{b+1}), 0-based a < b.

    Peels leading terms in an order where X_{a+1} dominates; `num` must be
    antisymmetric under swapping the two variables for exactness, which is
    guaranteed for Demazure numerators.
    """
    n = num.n
    quot = {}
    terms = dict(num.terms)
    while terms:
        e = max(terms, key=lambda t: (t[a], _grlex_key(t)))
        c = terms[e]
        if e[a] == 0:
            raise ArithmeticError("inexact division in Demazure operator")
        q = list(e)
        q[a] -= 1
        q = tuple(q)
        quot[q] = quot.get(q, 0) + c
        # subtract c * (X_a - X_b) * X^q from the remainder
        for var, sign in ((a, 1), (b, -1)):
            m = list(q)
            m[var] += 1
            m = tuple(m)
            s = terms.get(m, 0) - sign * c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
    return Poly(n, quot)


def nh_act_word(word, f):
    """Compose Demazure operators along a 1-based word, rightmost first."""
    for i in reversed(word):
        f = demazure(i, f)
    return f


def staircase_monomial(n):
    """X_1^{n-1} X_2^{n-2} ... X_{n-1}."""
    return Poly.monomial(tuple(n - 1 - k for k in range(n)))


def schubert_b(w, n):
    """Basis element b_w = (-1)^{l(w)} T_w . (X_1^{n-1}...X_{n-1}).

    b over the identity is the staircase monomial and b over the longest
    element is 1.
    """
    f = nh_act_word(w.reduced_word(), staircase_monomial(n))
    return f if w.length() % 2 == 0 else -f


# ---------------------------------------------------------------------------
# symmetric polynomials and the free-module decomposition
# ---------------------------------------------------------------------------


def elementary_sym(r, n):
    """Elementary symmetric polynomial e_r in n variables (e_0 = 1)."""
    if r < 0 or r > n:
        return Poly.zero(n)
    from itertools import combinations

    terms = {}
    for subset in combinations(range(n), r):
        e = [0] * n
        for k in subset:
            e[k] = 1
        terms[tuple(e)] = Fr(1)
    return Poly(n, terms)


def complete_sym(r, n):
    """Complete homogeneous symmetric polynomial h_r in n variables."""
    if r < 0:
        return Poly.zero(n)
    terms = {}
    for e in _compositions(r, n):
        terms[e] = Fr(1)
    return Poly(n, terms)


def _compositions(total, n):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


def partitions_max_parts(total, parts):
    """Partitions of `total` into at most `parts` parts, weakly decreasing."""
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == parts:
            return
        for p in range(min(rem, maxpart), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(total, total, [])
    return out


def monomial_sym(lam, n):
    """Monomial symmetric polynomial m_lambda in n variables."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    exps = set(permutations(lam))
    return Poly(n, {e: Fr(1) for e in exps})


@lru_cache(maxsize=None)
def _decompose_solver(n, degree):
    """Row-reduced system expressing homogeneous degree-d polynomials in the
    basis { m_lambda * b_w }.  Returns (columns, echelon) where columns is the
    list of (w, lambda) unknowns and echelon maps pivot monomial -> (row,
    column index of the unknown solved there).
    """
    perms = Perm.all(n)
    columns = []
    vectors = []
    for w in perms:
        bw = schubert_b(w, n)
        g = degree - bw.degree()
        if g < 0:
            continue
        for lam in partitions_max_parts(g, n) if g else [()]:
            prod = monomial_sym(lam, n) * bw if g else bw
            columns.append((w, lam))
            vectors.append(prod.terms)
    # Gaussian elimination on the transpose: build echelon rows over the
    # monomial index, tracking the expression of each pivot row in unknowns.
    echelon = {}
    for idx, vec in enumerate(vectors):
        row = dict(vec)
        combo = {idx: Fr(1)}
        while row:
            piv = max(row, key=_grlex_key)
            if piv in echelon:
                prow, pcombo = echelon[piv]
                factor = row[piv] / prow[piv]
                for e, c in prow.items():
                    s = row.get(e, 0) - factor * c
                    if s:
                        row[e] = s
                    else:
                        row.pop(e, None)
                for j, c in pcombo.items():
                    s = combo.get(j, 0) - factor * c
                    if s:
                        combo[j] = s
                    else:
                        combo.pop(j, None)
            else:
                echelon[piv] = (row, combo)
                break
    return columns, echelon


class InternalInconsistency(Exception):
    """A structural fact the algebra guarantees failed to hold."""


def sym_decompose(f, n):
    """Write f in Pol_n as sum of c_w b_w with symmetric coefficients.

    Returns a dict Perm -> Poly.  The decomposition exists and is unique
    because Pol_n is free over Sym_n on the b_w; a failed solve therefore
    raises InternalInconsistency.
    """
    if f.n != n:
        raise ValueError("variable count mismatch")
    out = {}
    for degree, part in f.homogeneous_parts().items():
        columns, echelon = _decompose_solver(n, degree)
        coeffs = _reduce_against(part.terms, echelon)
        if coeffs is None:
            raise InternalInconsistency(
                f"degree-{degree} component not in the span of the b_w basis")
        for j, c in coeffs.items():
            w, lam = columns[j]
            contrib = (monomial_sym(lam, n) if lam else Poly.one(n)) * c
            out[w] = out.get(w, Poly.zero(n)) + contrib
    return {w: p for w, p in out.items() if p}


def _reduce_against(vec, echelon):
    row = dict(vec)
    combo = {}
    while row:
        piv = max(row, key=_grlex_key)
        if piv not in echelon:
            return None
        prow, pcombo = echelon[piv]
        factor = row[piv] / prow[piv]
        for e, c in prow.items():
            s = row.get(e, 0) - factor * c
            if s:
                row[e] = s
            else:
                row.pop(e, None)
        for j, c in pcombo.items():
            s = combo.get(j, 0) + factor * c
            if s:
                combo[j] = s
            else:
                combo.pop(j, None)
    return combo
