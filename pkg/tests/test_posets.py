import itertools

import pytest

from helpers import all_directed_graphs, all_signed_posets
from sqsym import InvalidInput
from sqsym.algebra import SqsExpr
from sqsym.fundamental import FundamentalIndex, f_to_monomial
from sqsym.graphs import (
    DirectedSignedGraph,
    arc,
    coloring_stats,
    extroverted,
    full_word,
    introverted,
    is_acyclic,
    signed_permutations,
)
from sqsym.posets import (
    Labeling,
    SignedPoset,
    chain_strict_set,
    dual_natural_labeling,
    gamma_enumerator,
    linear_extensions,
    natural_labeling,
    poset_from_orientation,
)


def M(k, *cols):
    return SqsExpr.monomial(k, cols)


def P(d, *pairs):
    return SignedPoset(d, frozenset(pairs))


def test_closure_and_mirror():
    p = P(2, (1, 2))
    assert p.relation == {(1, 2), (-2, -1)}
    q = P(2, (-2, -1), (-1, 1), (1, 2))
    assert (-2, 2) in q.relation and q.covers() == {(-2, -1), (-1, 1), (1, 2)}
    with pytest.raises(InvalidInput):
        P(1, (1, -1), (-1, 1))


def test_labeling_validation():
    with pytest.raises(InvalidInput):
        Labeling(((1, 1), (-1, 1)))
    with pytest.raises(InvalidInput):
        # w(2) < w(1) but not w(-1) < w(-2)
        Labeling(((-2, -2), (-1, 2), (1, 1), (2, -1)))


def test_linear_extension_examples():
    assert linear_extensions(P(2, (-2, -1), (-1, 1), (1, 2))) == [(1, 2)]
    assert len(linear_extensions(P(2))) == 8
    assert linear_extensions(P(2, (1, 2))) == sorted([(1, 2), (-1, 2), (2, -1), (-2, -1)])


def test_gamma_examples():
    chain = P(1, (-1, 1))
    assert gamma_enumerator(chain, natural_labeling(chain)) == M(1) + M(0, (1, 0))
    assert gamma_enumerator(chain, dual_natural_labeling(chain)) == M(0, (1, 0))
    free = P(1)
    assert gamma_enumerator(free, natural_labeling(free)) == M(1) + M(0, (1, 0)) + M(0, (0, 1))


def test_gamma_accepts_explicit_strict_pairs():
    chain = P(1, (-1, 1))
    assert gamma_enumerator(chain, {(-1, 1)}) == M(0, (1, 0))
    with pytest.raises(InvalidInput):
        gamma_enumerator(chain, {(1, -1)})


def test_poset_from_orientation_examples():
    g = DirectedSignedGraph.from_records(2, [arc(1, 2)])
    assert poset_from_orientation(g).relation == {(2, 1), (-1, -2)}
    g = DirectedSignedGraph.from_records(2, [introverted(1, 2)])
    assert poset_from_orientation(g).relation == {(1, -2), (2, -1)}
    g = DirectedSignedGraph.from_records(1, [extroverted(1, 1)])
    assert poset_from_orientation(g).relation == {(-1, 1)}
    cyc = DirectedSignedGraph.from_records(3, [arc(1, 2), arc(2, 3), arc(3, 1)])
    with pytest.raises(InvalidInput, match="not acyclic"):
        poset_from_orientation(cyc)


# ------------------------------------------------------------------ properties


def _chain_gamma(pi, w):
    return gamma_enumerator(SignedPoset.from_permutation(pi), w)


@pytest.mark.parametrize("d", [1, 2])
def test_s1_decomposition_small(d):
    for p in all_signed_posets(d):
        for w in (natural_labeling(p), dual_natural_labeling(p)):
            total = SqsExpr()
            for pi in linear_extensions(p):
                total = total + _chain_gamma(pi, w)
            assert gamma_enumerator(p, w) == total


def test_s2_chain_matches_fundamental():
    for d in (1, 2, 3):
        for pi in signed_permutations(d):
            chain = SignedPoset.from_permutation(pi)
            for w in (natural_labeling(chain), dual_natural_labeling(chain), Labeling.from_word(full_word(pi[::-1]))):
                strict = chain_strict_set(pi, w)
                fi = FundamentalIndex(d, strict, tuple(1 if x > 0 else -1 for x in pi))
                assert gamma_enumerator(chain, w) == f_to_monomial(fi)


def test_s3_compatible_equals_strict_partition():
    for d in (1, 2):
        n = d + 2
        for g in all_directed_graphs(d, 3):
            if not is_acyclic(g):
                continue
            p = poset_from_orientation(g)
            for kappa in itertools.product(range(-n, n + 1), repeat=d):
                s = coloring_stats(g, kappa)
                compatible = s.proper and s.asc == 0
                f = {i: kappa[i - 1] for i in range(1, d + 1)}
                f.update({-i: -kappa[i - 1] for i in range(1, d + 1)})
                strict = all(f[x] < f[y] for x, y in p.relation)
                assert compatible == strict, (g, kappa)


def test_s4_central_symmetry_of_partitions():
    from sqsym._enum import canonical_colorings
    from sqsym.posets import partition_mask

    arr, _, _ = canonical_colorings(2)
    for p in all_signed_posets(2):
        mask = partition_mask(p, natural_labeling(p), arr)
        for row in arr[mask]:
            f = {i + 1: int(v) for i, v in enumerate(row)}
            f.update({-x: -v for x, v in list(f.items())})
            assert all(f[-x] == -f[x] for x in f)
            assert all(f[x] <= f[y] for x, y in p.relation)
