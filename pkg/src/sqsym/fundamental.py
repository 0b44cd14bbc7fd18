"""The fundamental family ``F_S^eps``: enumerators of labeled signed chains.

``F_S^eps`` (with ``S ⊆ {0..d-1}`` and ``eps ∈ {±}^d``) is the sum of
``x_{eps_1 i_1} ... x_{eps_d i_d}`` over ``0 <= i_1 <= ... <= i_d`` with
``i_j < i_{j+1}`` for ``j ∈ S``, ``j >= 1``.  The edge joining the two halves
of the chain is strict exactly when ``0 ∈ S``, i.e. then ``i_1 >= 1``.
"""

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from ._guard import InvalidInput
from .algebra import MonomialIndex, SqsExpr
from .graphs import check_signed_permutation, parse_sign, sign_char


@dataclass(frozen=True, order=True)
class FundamentalIndex:
    d: int
    strict: frozenset
    signs: tuple

    def __post_init__(self):
        strict = frozenset(int(s) for s in self.strict)
        signs = tuple(parse_sign(s) for s in self.signs)
        if len(signs) != self.d:
            raise InvalidInput(f"F index needs {self.d} signs, got {len(signs)}")
        if any(not 0 <= s < self.d for s in strict):
            raise InvalidInput(f"strict set {sorted(strict)} not within 0..{self.d - 1}")
        object.__setattr__(self, "strict", strict)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def of(cls, strict, signs):
        if isinstance(signs, str):
            signs = tuple(signs)
        return cls(len(signs), frozenset(strict), tuple(signs))

    def __str__(self):
        s = ",".join(str(x) for x in sorted(self.strict))
        eps = "".join(sign_char(x) for x in self.signs)
        return f"F[d={self.d}; S={{{s}}}; eps={eps}]"

    def sort_key(self):
        return (self.d, sorted(self.strict), self.signs)

    def runs(self):
        """Maximal weak runs of positions ``1..d`` in the upper half."""
        out, cur = [], []
        for j in range(1, self.d + 1):
            cur.append(j)
            if j in self.strict or j == self.d:
                out.append(cur)
                cur = []
        return out


_F_TEXT = re.compile(r"^\s*F\[\s*d\s*=\s*(\d+)\s*;\s*S\s*=\s*\{([\d,\s]*)\}\s*;\s*eps\s*=\s*([+\-]*)\s*\]\s*$")


def parse_findex(text):
    m = _F_TEXT.match(text)
    if not m:
        raise InvalidInput(f"cannot parse fundamental index {text!r}")
    d = int(m.group(1))
    strict = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
    return FundamentalIndex(d, frozenset(strict), tuple(m.group(3)))


# ------------------------------------------------------------------ expansion


def _chain_sequences(fi):
    """Non-decreasing ``i_1..i_d`` obeying the strict edges whose nonzero
    values are exactly ``{1..r}``: every step increases by 0 or 1."""
    steps = []
    for j in range(fi.d):
        steps.append((1,) if j in fi.strict else (0, 1))
    for inc in itertools.product(*steps):
        seq, cur = [], 0
        for x in inc:
            cur += x
            seq.append(cur)
        yield seq


@lru_cache(maxsize=None)
def f_to_monomial(fi):
    terms = {}
    for seq in _chain_sequences(fi):
        k = seq.count(0)
        r = seq[-1] if seq else 0
        cols = [[0, 0] for _ in range(r)]
        for val, s in zip(seq, fi.signs):
            if val:
                cols[val - 1][0 if s > 0 else 1] += 1
        terms[MonomialIndex(k, tuple(map(tuple, cols)))] = 1
    return SqsExpr(terms)


def expand_combination(comb):
    """Monomial expansion of ``{FundamentalIndex: coef}``."""
    out = SqsExpr()
    for fi, c in comb.items():
        out = out + f_to_monomial(fi).scale(c)
    return out


# ------------------------------------------------------------ minimal chains


def is_minimal(fi):
    for j in range(1, fi.d):
        if j not in fi.strict and fi.signs[j - 1] > 0 and fi.signs[j] < 0:
            return False
    if 0 not in fi.strict and fi.d:
        first = fi.runs()[0]
        if any(fi.signs[j - 1] < 0 for j in first):
            return False
    return True


def minimal_indices(d):
    out = []
    for signs in itertools.product((1, -1), repeat=d):
        for r in range(d + 1):
            for strict in itertools.combinations(range(d), r):
                fi = FundamentalIndex(d, frozenset(strict), signs)
                if is_minimal(fi):
                    out.append(fi)
    return sorted(out, key=FundamentalIndex.sort_key)


def to_monomial_index(fi):
    """The ``(k, lam)`` attached to a minimal chain."""
    if not is_minimal(fi):
        raise InvalidInput(f"{fi} is not minimal")
    runs = fi.runs()
    k = 0
    if fi.d and 0 not in fi.strict:
        k = len(runs[0])
        runs = runs[1:]
    cols = []
    for run in runs:
        plus = sum(1 for j in run if fi.signs[j - 1] > 0)
        cols.append((plus, len(run) - plus))
    return MonomialIndex(k, tuple(cols))


def from_monomial_index(m):
    m = m if isinstance(m, MonomialIndex) else MonomialIndex.of(*m)
    signs, strict = [], set()
    if m.k:
        signs += [1] * m.k
        if m.lam:
            strict.add(m.k)
    elif m.lam:
        strict.add(0)
    for idx, (a, b) in enumerate(m.lam):
        signs += [-1] * b + [1] * a
        if idx < len(m.lam) - 1:
            strict.add(len(signs))
    return FundamentalIndex(len(signs), frozenset(strict), tuple(signs))


def minimal_bijection(x):
    """``FundamentalIndex`` (minimal) <-> ``MonomialIndex``."""
    if isinstance(x, FundamentalIndex):
        return to_monomial_index(x)
    return from_monomial_index(x)


def leading_exponents(fi):
    """Leading monomial of ``F`` for ``x_0 > x_1 > x_{-1} > x_2 > x_{-2} > ...``,
    as the exponent vector in that variable order."""
    best = None
    for m in f_to_monomial(fi).terms:
        vec = [m.k] + [x for col in m.lam for x in col]
        vec += [0] * (1 + 2 * fi.d - len(vec))
        vec = tuple(vec)
        if best is None or vec > best:
            best = vec
    return best


# ---------------------------------------------------------------- rewriting


def _with(fi, strict=None, signs=None):
    return FundamentalIndex(fi.d, fi.strict if strict is None else frozenset(strict), fi.signs if signs is None else tuple(signs))


def rewrite_step(fi):
    """One application of the chain relation, or ``None`` when ``fi`` is minimal.

    A weak ``(+ below, - above)`` pair satisfies
    ``[+-, weak] = [+-, strict] + [-+, weak] - [-+, strict]``; across the
    middle edge the same diagonal argument gives
    ``[-, weak] = [+, weak] - [+, strict] + [-, strict]`` for the first sign.
    """
    if fi.d and 0 not in fi.strict and fi.signs[0] < 0:
        flipped = (1,) + fi.signs[1:]
        s0 = fi.strict | {0}
        return [(_with(fi, signs=flipped), 1), (_with(fi, strict=s0, signs=flipped), -1), (_with(fi, strict=s0), 1)]
    for j in range(1, fi.d):
        if j not in fi.strict and fi.signs[j - 1] > 0 and fi.signs[j] < 0:
            sw = list(fi.signs)
            sw[j - 1], sw[j] = sw[j], sw[j - 1]
            sj = fi.strict | {j}
            return [(_with(fi, strict=sj), 1), (_with(fi, signs=sw), 1), (_with(fi, strict=sj, signs=sw), -1)]
    return None


@lru_cache(maxsize=None)
def _reduce(fi):
    step = rewrite_step(fi)
    if step is None:
        return ((fi, 1),)
    acc = Counter()
    for sub, c in step:
        for m, cm in _reduce(sub):
            acc[m] += c * cm
    return tuple((m, c) for m, c in sorted(acc.items(), key=lambda t: t[0].sort_key()) if c)


def reduce_to_minimal(fi):
    """``fi`` as an integer combination of minimal chains."""
    return dict(_reduce(fi))


# ---------------------------------------------------- descents and products


def des_signed_perm(pi):
    word = (0,) + tuple(pi)
    return frozenset(i for i in range(len(pi)) if word[i] > word[i + 1])


def descent_representative(strict, d):
    """A signed permutation of size ``d`` whose descent set is ``strict``.

    Increasing runs between descents receive consecutive blocks of values,
    the first run the largest block; all values are negative iff ``0`` is a
    descent.
    """
    strict = frozenset(strict)
    if any(not 0 <= s < d for s in strict):
        raise InvalidInput(f"descent set {sorted(strict)} not within 0..{d - 1}")
    cuts = [0] + sorted(s for s in strict if s > 0) + [d]
    runs = [cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)]
    values = list(range(-d, 0)) if 0 in strict else list(range(1, d + 1))
    pi, hi = [], d
    for length in runs:
        pi.extend(values[hi - length : hi])
        hi -= length
    pi = tuple(pi)
    assert des_signed_perm(pi) == strict
    return pi


def shift_word(pi, d):
    return tuple(p + d if p > 0 else p - d for p in pi)


def shuffles(w1, w2):
    """Shuffles of two equal-length-pair words ``(letters, signs)``."""
    n1, n2 = len(w1[0]), len(w2[0])
    for pos in itertools.combinations(range(n1 + n2), n1):
        pos = set(pos)
        i1 = i2 = 0
        letters, signs = [], []
        for p in range(n1 + n2):
            if p in pos:
                letters.append(w1[0][i1])
                signs.append(w1[1][i1])
                i1 += 1
            else:
                letters.append(w2[0][i2])
                signs.append(w2[1][i2])
                i2 += 1
        yield tuple(letters), tuple(signs)


class FProduct(NamedTuple):
    terms: Counter
    pi: tuple
    pi2: tuple


def f_product(f1, f2, pi=None, pi2=None):
    """Product of two fundamental elements as a multiset of fundamental indices.

    The multiset depends on the chosen descent representatives, which are
    returned alongside it.
    """
    pi = descent_representative(f1.strict, f1.d) if pi is None else check_signed_permutation(pi, f1.d)
    pi2 = descent_representative(f2.strict, f2.d) if pi2 is None else check_signed_permutation(pi2, f2.d)
    if des_signed_perm(pi) != f1.strict or des_signed_perm(pi2) != f2.strict:
        raise InvalidInput("representatives must have the factors' descent sets")
    terms = Counter()
    for tau, delta in shuffles((pi, f1.signs), (shift_word(pi2, f1.d), f2.signs)):
        terms[FundamentalIndex(len(tau), des_signed_perm(tau), delta)] += 1
    return FProduct(terms, pi, pi2)
