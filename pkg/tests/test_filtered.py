import hypothesis.strategies as st
import pytest
from hypothesis import given

from stratisets.corpus import small_posets, strict_words, weak_words
from stratisets.errors import (BadIndexSet, BoundTooLow, HypothesisFails,
                               NotMonotone)
from stratisets.filtered import (anodyne_certificate, filtered_boundary,
                                 filtered_hom, filtered_horn, filtered_nerve,
                                 filtered_simplex, generalized_horn,
                                 horn_vertex_sets, is_admissible_horn,
                                 map_space, phi_part, replay_certificate,
                                 simplex_type, tensor)

POSETS = small_posets()
CHAIN2 = dict(POSETS)["chain2"]


def test_filtered_simplex_words():
    X = filtered_simplex(CHAIN2, ('a', 'a', 'b'))
    assert X.word_of(2, (0, 1, 2)) == ('a', 'a', 'b')
    assert X.word_of(0, (2,)) == ('b',)


def test_non_monotone_word_rejected():
    with pytest.raises(NotMonotone):
        filtered_simplex(CHAIN2, ('b', 'a'))


def test_filtered_boundary_and_horn_f_vectors():
    assert filtered_boundary(CHAIN2, ('a', 'a', 'b')).space.f_vector() \
        == (3, 3)
    assert filtered_horn(CHAIN2, ('a', 'a', 'b'), 1).space.f_vector() \
        == (3, 2)


@given(st.sampled_from(POSETS), st.data())
def test_simplex_type_strips_repeats(named, data):
    _, P = named
    words = weak_words(P, 3)
    word = data.draw(st.sampled_from(words))
    X = filtered_simplex(P, word)
    n = len(word) - 1
    t = simplex_type(X, n, tuple(range(n + 1)))
    assert all(a != b for a, b in zip(t, t[1:]))
    assert set(t) == set(word)


def test_tensor_interval_with_filtered_edge():
    from stratisets.engine import standard_simplex
    X = tensor(standard_simplex(1, 2), filtered_simplex(CHAIN2, ('a', 'b'),
                                                        2))
    assert X.space.f_vector() == (4, 5, 2)
    # both squares carry the word stretched over the shuffle
    for x in X.space.nondegenerate(2):
        assert X.word_of(2, x) in {('a', 'a', 'b'), ('a', 'b', 'b')}


def test_phi_part_of_nerve():
    N = filtered_nerve(CHAIN2, 2)
    part, incl = phi_part(N, ('a', 'b'))
    assert part.space.f_vector() == (2, 1)
    incl.validate_filtered()
    empty, _ = phi_part(filtered_simplex(CHAIN2, ('a',), 2), ('a', 'b'))
    assert all(not l for l in empty.space.levels)


@given(st.sampled_from(POSETS), st.data())
def test_phi_parts_cover_everything(named, data):
    # every simplex lies in the part of its own type
    _, P = named
    word = data.draw(st.sampled_from(weak_words(P, 3)))
    X = filtered_boundary(P, word) if len(word) > 1 else \
        filtered_simplex(P, word)
    covered = [set() for _ in range(X.dim_bound + 1)]
    for phi in strict_words(P, 3):
        part, _ = phi_part(X, phi)
        for n in range(X.dim_bound + 1):
            covered[n] |= part.space.levels[n]
    for n in range(X.dim_bound + 1):
        assert covered[n] == set(X.space.levels[n])


def test_filtered_hom_is_word_preserving():
    X = filtered_simplex(CHAIN2, ('a', 'b'), 2)
    for f in filtered_hom(X, filtered_nerve(CHAIN2, 2)):
        f.validate_filtered()
    assert len(filtered_hom(X, X)) == 1


def test_map_space_of_terminal_object():
    N = filtered_nerve(CHAIN2, 2)
    M = map_space(('a', 'b'), N, 1)
    # one filtered map from each tensor shape into the nerve
    assert all(len(M.levels[n]) == 1 for n in range(2))


def test_map_space_bound_check():
    with pytest.raises(BoundTooLow):
        map_space(('a', 'b'), filtered_simplex(CHAIN2, ('a', 'b'), 2), 5)


def test_admissibility():
    assert is_admissible_horn(('a', 'a', 'b'), 0)
    assert is_admissible_horn(('a', 'a', 'b'), 1)
    assert not is_admissible_horn(('a', 'a', 'b'), 2)


def test_generalized_horn_vertex_sets():
    # a subset survives iff it misses some vertex outside S
    word = ('a', 'a', 'b')
    S = frozenset({1})
    present = horn_vertex_sets(word, S)
    assert frozenset({0, 1}) in present and frozenset({1, 2}) in present
    assert frozenset({0, 2}) not in present
    assert frozenset({0, 1, 2}) not in present


def test_generalized_horn_is_union_of_faces():
    H = generalized_horn(CHAIN2, ('a', 'a', 'b'), frozenset({1}))
    assert H.space.f_vector() == (3, 2)


def test_index_set_validation():
    with pytest.raises(BadIndexSet):
        generalized_horn(CHAIN2, ('a', 'b'), frozenset({5}))
    with pytest.raises(BadIndexSet):
        anodyne_certificate(('a', 'b'), frozenset())


def test_one_step_certificate():
    cert = anodyne_certificate(('a', 'a', 'b'), frozenset({0}))
    assert len(cert.steps) == 1
    assert replay_certificate(cert)


def test_hypothesis_failure_reported():
    # no index in S has an equal neighbour outside S
    with pytest.raises(HypothesisFails):
        anodyne_certificate(('a', 'b'), frozenset({0}))


@given(st.integers(min_value=2, max_value=5), st.data())
def test_certificates_replay_exhaustively(n, data):
    # over a two-element chain every hypothesis-satisfying pair certifies
    values = data.draw(st.lists(st.sampled_from(['a', 'b']), min_size=n,
                                max_size=n))
    word = tuple(sorted(values))
    bits = data.draw(st.integers(min_value=1, max_value=2 ** n - 1))
    S = frozenset(i for i in range(n) if bits >> i & 1)
    try:
        cert = anodyne_certificate(word, S)
    except (HypothesisFails, BadIndexSet):
        return
    assert replay_certificate(cert)
    assert cert.word == word and cert.index_set == S


def test_replay_rejects_tampered_certificate():
    from stratisets.filtered import AnodyneCertificate
    cert = anodyne_certificate(('a', 'a', 'b'), frozenset({0}))
    (mu, k) = cert.steps[0]
    bad = AnodyneCertificate(cert.word, cert.index_set,
                             ((mu, (k + 1) % (len(mu))),))
    assert not replay_certificate(bad)


def test_doubled_simplex_euler():
    # gluing two n-simplices along the boundary gives a sphere
    from stratisets.corpus import doubled_simplex
    D = doubled_simplex(CHAIN2, ('a', 'a', 'b'), 3)
    assert D.space.euler_characteristic() == 2
