"""The algebra SQSym in the monomial family ``M_{k, lam}``.

``M_{k, lam}`` is the sum of ``x_0^k x_{i_1}^{a_1} x_{-i_1}^{b_1} ... x_{i_r}^{a_r} x_{-i_r}^{b_r}``
over ``1 <= i_1 < ... < i_r``, where ``lam = ((a_1, b_1), ..., (a_r, b_r))`` is a
bicomposition (no column equal to ``(0, 0)``).  Coefficients are exact
``Fraction``s throughout.
"""

import itertools
from collections import Counter
from fractions import Fraction
from math import comb, prod
from typing import NamedTuple

from ._guard import InvalidInput


def check_bicomposition(lam):
    cols = tuple((int(a), int(b)) for a, b in lam)
    for a, b in cols:
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise InvalidInput(f"invalid bicomposition column {(a, b)}")
    return cols


class MonomialIndex(NamedTuple):
    k: int
    lam: tuple

    @classmethod
    def of(cls, k, lam=()):
        if k < 0:
            raise InvalidInput(f"zero multiplicity must be nonnegative, got {k}")
        return cls(int(k), check_bicomposition(lam))

    @property
    def degree(self):
        return self.k + sum(a + b for a, b in self.lam)


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


class SqsExpr:
    """A finite rational combination of ``M_{k, lam}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = {}
        for key, c in dict(terms or {}).items():
            key = key if isinstance(key, MonomialIndex) else MonomialIndex.of(*key)
            acc[key] = acc.get(key, 0) + _frac(c)
        self.terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, k, lam=(), coef=1):
        return cls({MonomialIndex.of(k, lam): coef})

    @classmethod
    def one(cls):
        return cls.monomial(0)

    def items(self):
        return sorted(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SqsExpr):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        from .io import render_expr

        return f"SqsExpr({render_expr(self)})"

    def coeff(self, k, lam=()):
        return self.terms.get(MonomialIndex.of(k, lam), Fraction(0))

    def degrees(self):
        return {m.degree for m in self.terms}

    def __add__(self, other):
        if not isinstance(other, SqsExpr):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SqsExpr(out)

    def __neg__(self):
        return SqsExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _frac(c)
        return SqsExpr({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SqsExpr):
            return NotImplemented
        return product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


class TPoly:
    """A polynomial in ``t`` with ``SqsExpr`` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(e): x for e, x in dict(coeffs or {}).items() if x}
        if any(e < 0 for e in self.coeffs):
            raise InvalidInput("t-exponents must be nonnegative")

    @classmethod
    def constant(cls, expr):
        return cls({0: expr})

    def coeff(self, e):
        return self.coeffs.get(e, SqsExpr())

    def degrees(self):
        return sorted(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        from .io import render_tpoly

        return f"TPoly({render_tpoly(self)})"

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, x in other.coeffs.items():
            out[e] = out[e] + x if e in out else x
        return TPoly(out)

    def __neg__(self):
        return TPoly({e: -x for e, x in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TPoly({e: x.scale(other) for e, x in self.coeffs.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        return product(self, other)

    def n_terms(self):
        return sum(len(x) for x in self.coeffs.values())


# ---------------------------------------------------------------- products


def _add_cols(c1, c2):
    return (c1[0] + c2[0], c1[1] + c2[1])


def quasi_shuffle(l1, l2):
    """Quasi-shuffle (stuffle) of two bicompositions, as a ``Counter``."""
    l1, l2 = tuple(l1), tuple(l2)
    return Counter(_qsh(l1, l2))


_qsh_cache = {}


def _qsh(l1, l2):
    key = (l1, l2)
    if key in _qsh_cache:
        return _qsh_cache[key]
    if not l1:
        out = [l2]
    elif not l2:
        out = [l1]
    else:
        out = [(l1[0],) + w for w in _qsh(l1[1:], l2)]
        out += [(l2[0],) + w for w in _qsh(l1, l2[1:])]
        out += [(_add_cols(l1[0], l2[0]),) + w for w in _qsh(l1[1:], l2[1:])]
    _qsh_cache[key] = out
    return out


def _product_expr(f, g):
    out = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            k = m1.k + m2.k
            for lam, mult in quasi_shuffle(m1.lam, m2.lam).items():
                key = MonomialIndex(k, lam)
                out[key] = out.get(key, 0) + c1 * c2 * mult
    return SqsExpr(out)


def product(f, g):
    """Product in SQSym (or SQSym[t], with t-exponents adding)."""
    if isinstance(f, TPoly) and isinstance(g, TPoly):
        out = {}
        for e1, x1 in f.coeffs.items():
            for e2, x2 in g.coeffs.items():
                p = _product_expr(x1, x2)
                out[e1 + e2] = out[e1 + e2] + p if e1 + e2 in out else p
        return TPoly(out)
    if isinstance(f, SqsExpr) and isinstance(g, SqsExpr):
        return _product_expr(f, g)
    raise TypeError("product needs two SqsExpr or two TPoly")


def coproduct(m):
    """Split ``k = k1 + k2`` and deconcatenate the columns of ``lam``."""
    m = m if isinstance(m, MonomialIndex) else MonomialIndex.of(*m)
    out = []
    for k1 in range(m.k + 1):
        for cut in range(len(m.lam) + 1):
            out.append((MonomialIndex(k1, m.lam[:cut]), MonomialIndex(m.k - k1, m.lam[cut:])))
    return out


def coproduct_expr(f):
    """Coproduct of an expression, as ``{(left, right): coef}``."""
    out = Counter()
    for m, c in f.terms.items():
        for pair in coproduct(m):
            out[pair] += c
    return {p: c for p, c in out.items() if c}


# ---------------------------------------------------------------- dimension


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def dimension(deg):
    """Number of ``(k, lam)`` with ``k + |lam| = deg``."""
    return sum(prod(c + 1 for c in comp) for k in range(deg + 1) for comp in compositions(deg - k))


def monomial_indices(deg):
    """Every ``MonomialIndex`` of the given degree, sorted."""
    out = []
    for k in range(deg + 1):
        for comp in compositions(deg - k):
            for cols in itertools.product(*[[(a, c - a) for a in range(c + 1)] for c in comp]):
                out.append(MonomialIndex(k, cols))
    return sorted(out)


def dimension_series(n):
    """First ``n + 1`` coefficients of ``(1 - t) / (1 - 4t + 2t^2)``."""
    a = []
    for i in range(n + 1):
        v = (1 if i == 0 else 0) - (1 if i == 1 else 0)
        if i >= 1:
            v += 4 * a[i - 1]
        if i >= 2:
            v -= 2 * a[i - 2]
        a.append(v)
    return a


# --------------------------------------------- truncation and R_i operators


def _var_index(i, n):
    return i + n


def truncate_expand(f, n):
    """Expand ``f`` in the variables ``x_{-n} .. x_n``.

    Keys are exponent vectors of length ``2n + 1`` (position ``j + n`` holds
    the exponent of ``x_j``).
    """
    out = Counter()
    width = 2 * n + 1
    for m, c in f.terms.items():
        r = len(m.lam)
        for idx in itertools.combinations(range(1, n + 1), r):
            vec = [0] * width
            vec[n] = m.k
            for i, (a, b) in zip(idx, m.lam):
                vec[n + i] += a
                vec[n - i] += b
            out[tuple(vec)] += c
    return {k: v for k, v in out.items() if v}


def multiply_truncated(p, q):
    out = Counter()
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            out[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
    return {k: v for k, v in out.items() if v}


def r_operator_truncated(poly, i, n):
    """Apply ``R_i`` to a truncated polynomial in ``x_{-n} .. x_n``.

    ``x_{±i}`` are set to 0 and ``x_{±j}`` becomes ``x_{±(j-1)}`` for ``j > i``;
    the result lives in ``x_{-(n-1)} .. x_{n-1}``.
    """
    if not 1 <= i <= n:
        raise InvalidInput(f"R_{i} needs 1 <= i <= {n}")
    out = Counter()
    for vec, c in poly.items():
        if vec[n + i] or vec[n - i]:
            continue
        new = [0] * (2 * n - 1)
        new[n - 1] = vec[n]
        for j in range(1, n + 1):
            if j == i:
                continue
            jj = j if j < i else j - 1
            new[n - 1 + jj] = vec[n + j]
            new[n - 1 - jj] = vec[n - j]
        out[tuple(new)] += c
    return {k: v for k, v in out.items() if v}


def r_operator(f, i, n):
    poly = f if isinstance(f, dict) else truncate_expand(f, n)
    return r_operator_truncated(poly, i, n)


# ------------------------------------------------------------ signed symmetry


def orbit_representative(m):
    cols = sorted((max(a, b), min(a, b)) for a, b in m.lam)
    return MonomialIndex(m.k, tuple(cols))


def orbit(m):
    """All indices reachable by permuting columns and flipping any of them."""
    out = set()
    for perm in set(itertools.permutations(m.lam)):
        for flips in itertools.product((False, True), repeat=len(perm)):
            out.add(MonomialIndex(m.k, tuple((b, a) if f else (a, b) for f, (a, b) in zip(flips, perm))))
    return out


def is_signed_symmetric(f):
    done = set()
    for m, c in f.terms.items():
        rep = orbit_representative(m)
        if rep in done:
            continue
        done.add(rep)
        if any(f.terms.get(o, 0) != c for o in orbit(m)):
            return False
    return True


def specialize(f, m):
    """Value of ``f`` at ``x_i = 1`` for ``|i| <= m`` and 0 elsewhere."""
    return sum((c * comb(m, len(idx.lam)) for idx, c in f.terms.items()), Fraction(0))
