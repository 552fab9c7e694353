import hypothesis.strategies as st
import pytest
from hypothesis import given

from stratisets.corpus import small_posets
from stratisets.errors import MalformedDiagram
from stratisets.poset import (Chain, enumerate_chains, last_vertex_stratum,
                              nerve, poset_from_cover, strip_repeats)

POSETS = small_posets()


def test_cover_closure_is_reflexive_and_transitive():
    P = poset_from_cover(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
    assert P.le('a', 'a')
    assert P.le('a', 'c')
    assert not P.le('c', 'a')


def test_cover_with_unknown_element_rejected():
    with pytest.raises(MalformedDiagram):
        poset_from_cover(['a'], [('a', 'z')])


def test_cycle_rejected():
    from stratisets.errors import CycleDetected
    with pytest.raises(CycleDetected):
        poset_from_cover(['a', 'b'], [('a', 'b'), ('b', 'a')])


@given(st.sampled_from(POSETS), st.integers(min_value=1, max_value=4))
def test_strict_chains_are_weak_chains(named, length):
    _, P = named
    strict = {c.word for c in enumerate_chains(P, length, strict=True)}
    weak = {c.word for c in enumerate_chains(P, length)}
    assert strict <= weak
    for w in weak:
        assert all(P.le(w[i], w[i + 1]) for i in range(len(w) - 1))
    for w in strict:
        assert all(a != b for a, b in zip(w, w[1:]))


@given(st.sampled_from(POSETS))
def test_weak_chain_count_oracle(named):
    # weak chains of length k = strict chains of length j times the
    # number of surjections preserving order, i.e. C(k-1, j-1) placements
    from math import comb
    _, P = named
    for k in range(1, 5):
        strict = [len(list(enumerate_chains(P, j, strict=True)))
                  for j in range(1, k + 1)]
        expected = sum(strict[j - 1] * comb(k - 1, j - 1)
                       for j in range(1, k + 1))
        assert len(list(enumerate_chains(P, k))) == expected


def test_nerve_of_chain3_f_vector():
    P = dict(POSETS)["chain3"]
    assert nerve(P, 3).f_vector() == (3, 3, 1)


def test_nerve_of_antichain_is_discrete():
    P = dict(POSETS)["antichain3"]
    assert nerve(P, 2).f_vector() == (3,)


@given(st.sampled_from(POSETS), st.data())
def test_nerve_simplices_are_weak_chains(named, data):
    _, P = named
    N = nerve(P, 2)
    n = data.draw(st.integers(min_value=0, max_value=2))
    for w in N.levels[n]:
        assert len(w) == n + 1
        assert all(P.le(w[i], w[i + 1]) for i in range(n))


def test_last_vertex_stratum():
    assert last_vertex_stratum(Chain(('a', 'a', 'b'))) == 'b'


def test_strip_repeats():
    assert strip_repeats(('a', 'a', 'b', 'b', 'b', 'c')) == ('a', 'b', 'c')
    assert strip_repeats(('a',)) == ('a',)
