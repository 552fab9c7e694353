import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given, settings

from stratisets.corpus import corpus, small_posets, strict_words
from stratisets.engine import standard_simplex
from stratisets.errors import (BasepointOutsideSubcomplex,
                               LabelingViolation)
from stratisets.filtered import filtered_boundary, filtered_simplex
from stratisets.labeled_cw import (PLabeledCW, functor_L, functor_V,
                                   stratified_pi0,
                                   stratified_pi1_presentation,
                                   subcomplex_leq_p, subcomplex_phi,
                                   triangulate_cells, truncate_label,
                                   vertical_cw_of_sdp,
                                   vertical_cw_of_sdp_simplex)
from stratisets.subdivision import sd, sd_p

POSETS = small_posets()
CHAIN2 = dict(POSETS)["chain2"]

SMALL_CORPUS = [(p, o, X) for (p, o, X) in corpus(dim_bound=2)
                if sum(len(l) for l in X.space.levels) <= 25]


def _abelianization_rank(pres):
    """Smith-normal-form oracle: rank of H_1 of the presentation."""
    if not pres.generators:
        return 0
    index = {g: i for i, g in enumerate(pres.generators)}
    rows = []
    for rel in pres.relators:
        row = [0] * len(pres.generators)
        for (g, e) in rel:
            row[index[g]] += e
        rows.append(row)
    if not rows:
        return len(pres.generators)
    M = sympy.Matrix(rows)
    return len(pres.generators) - M.rank()


def test_interval_model_cells():
    v = vertical_cw_of_sdp_simplex(CHAIN2, ('a', 'b'))
    dims = sorted(d for (d, _) in v.cells.values())
    assert dims == [0, 0, 0, 1, 1]
    assert functor_L(v).euler_sum() == 1


def test_simplex_model_counts_match_unfiltered_subdivision():
    for word in [('a',), ('a', 'b'), ('a', 'a', 'b')]:
        v = vertical_cw_of_sdp_simplex(CHAIN2, word)
        n = len(word) - 1
        model = sd(standard_simplex(n, max(n, 1))).space
        for k in range(n + 1):
            got = sum(1 for (d, _) in v.cells.values() if d == k)
            assert got == len(model.nondegenerate(k))


def test_labels_are_strict_chains():
    v = vertical_cw_of_sdp_simplex(CHAIN2, ('a', 'a', 'b'))
    for (_, label) in v.cells.values():
        assert all(x != y for x, y in zip(label, label[1:]))


@given(st.sampled_from(SMALL_CORPUS))
@settings(max_examples=12)
def test_labeling_condition_over_corpus(item):
    _, _, X = item
    functor_L(vertical_cw_of_sdp(X)).validate()


def test_labeling_violation_detected():
    # incident cell with an unrelated label must be rejected
    cells = {'v': (0, ('b',)), 'e': (1, ('a',))}
    incidence = {'v': frozenset(), 'e': frozenset({'v'})}
    attach = {'e': (('v', 'v'), ('v', 'v'))}
    with pytest.raises(LabelingViolation):
        PLabeledCW(cells, incidence, attach).validate()


@given(st.sampled_from(SMALL_CORPUS))
@settings(max_examples=12)
def test_round_trip_is_identity_on_cells_and_labels(item):
    _, _, X = item
    v = vertical_cw_of_sdp(X)
    k = functor_L(v)
    v2 = functor_V(k, v.base)
    assert v2.cells == v.cells
    assert v2.incidence == v.incidence
    assert v2.attach == v.attach
    k2 = functor_L(v2)
    assert (k2.cells, k2.incidence, k2.attach) == \
        (k.cells, k.incidence, k.attach)


@given(st.sampled_from(SMALL_CORPUS))
@settings(max_examples=10)
def test_euler_sum_matches_euler_characteristic(item):
    _, _, X = item
    v = vertical_cw_of_sdp(X)
    assert functor_L(v).euler_sum() == X.space.euler_characteristic()


@given(st.sampled_from(SMALL_CORPUS))
@settings(max_examples=8)
def test_triangulation_witness_is_isomorphism(item):
    _, _, X = item
    filtered, witness = triangulate_cells(vertical_cw_of_sdp(X))
    witness.validate_filtered()


def test_truncate_label():
    assert truncate_label(('a', 'b', 'c'), 'b') == ('a', 'b')


def test_subcomplexes_of_interval_model():
    k = functor_L(vertical_cw_of_sdp(filtered_simplex(CHAIN2, ('a', 'b'),
                                                      2)))
    sub_a = subcomplex_phi(k, ('a',))
    assert all(label == ('a',) for (_, label) in sub_a.cells.values())
    low = subcomplex_leq_p(k, 'a')
    low.validate()
    assert set(low.cells) <= set(k.cells)


def test_pi0_of_simplex_is_one():
    for word in strict_words(CHAIN2, 3):
        X = filtered_simplex(CHAIN2, word, 2)
        count, reps = stratified_pi0(X, word)
        assert count == 1 and len(reps) == 1


def test_pi0_counts_coproduct_components():
    from stratisets.engine import SimplicialMap, coproduct
    from stratisets.filtered import FilteredSimplicialSet
    pt = filtered_simplex(CHAIN2, ('a',), 2)
    space, _ = coproduct([pt.space, pt.space])
    comps = {n: {(k, x): pt.word_of(n, x) for (k, x) in space.levels[n]}
             for n in range(3)}
    two = FilteredSimplicialSet(CHAIN2, space,
                                SimplicialMap(space, pt.structure.target,
                                              comps))
    count, _ = stratified_pi0(two, ('a',))
    assert count == 2


@given(st.sampled_from(SMALL_CORPUS), st.data())
@settings(max_examples=8)
def test_pi0_invariant_under_subdivision(item, data):
    _, _, X = item
    phi = data.draw(st.sampled_from(strict_words(X.base, 2)))
    before, _ = stratified_pi0(X, phi)
    after, _ = stratified_pi0(sd_p(X).filtered, phi)
    assert before == after


def test_pi1_of_boundary_circle_has_rank_one():
    X = filtered_boundary(CHAIN2, ('a', 'a', 'a'), 2)
    k = functor_L(vertical_cw_of_sdp(X))
    base = subcomplex_phi(k, ('a',)).cells_of_dim(0)[0]
    pres = stratified_pi1_presentation(X, ('a',), base)
    assert _abelianization_rank(pres) == 1


def test_pi1_of_filled_simplex_is_trivial():
    X = filtered_simplex(CHAIN2, ('a', 'a', 'a'), 2)
    k = functor_L(vertical_cw_of_sdp(X))
    base = subcomplex_phi(k, ('a',)).cells_of_dim(0)[0]
    pres = stratified_pi1_presentation(X, ('a',), base)
    assert _abelianization_rank(pres) == 0


def test_pi1_rejects_outside_basepoint():
    X = filtered_simplex(CHAIN2, ('a',), 2)
    with pytest.raises(BasepointOutsideSubcomplex):
        stratified_pi1_presentation(X, ('a',), 'nonsense')
