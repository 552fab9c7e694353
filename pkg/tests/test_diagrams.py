import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from stratisets.corpus import corpus, small_posets, strict_words
from stratisets.diagrams import (Diagram, check_C_D_adjunction,
                                 check_lemma_2_15, check_prop_2_12,
                                 check_sdp_exp_adjunction, diagram_hom,
                                 functor_C, functor_D, functor_exp_P_filtered,
                                 functor_Sd_P, is_subchain, pair_category,
                                 rp_category, strict_chains)
from stratisets.errors import BoundTooLow, MalformedDiagram
from stratisets.filtered import (filtered_boundary, filtered_nerve,
                                 filtered_simplex, phi_part)
from stratisets.poset import poset_from_cover

POSETS = small_posets()
CHAIN2 = dict(POSETS)["chain2"]
CHAIN3 = dict(POSETS)["chain3"]

SMALL_CORPUS = [(p, o, X) for (p, o, X) in corpus(dim_bound=2)
                if sum(len(l) for l in X.space.levels) <= 25]


def test_chain_category_objects():
    cat = rp_category(CHAIN3)
    assert set(cat.objects) == set(strict_chains(CHAIN3))
    # arrows point from a chain to its subchains
    assert (('a', 'b'), ('a',)) in cat.arrows()


def test_pair_category_has_nested_pairs():
    cat = pair_category(CHAIN2, 2)
    for (phi, psi) in cat.objects:
        assert is_subchain(psi, phi)


def test_subchain_relation():
    assert is_subchain(('a', 'c'), ('a', 'b', 'c'))
    assert not is_subchain(('a', 'c'), ('a', 'b'))
    assert is_subchain((), ('a',))


def test_functor_D_of_nerve_values_are_points():
    D = functor_D(filtered_nerve(CHAIN2, 2), 2)
    D.validate()
    for phi, V in D.values.items():
        assert len(V.nondegenerate(0)) == 1


def test_functor_D_missing_identity_rejected():
    D = functor_D(filtered_simplex(CHAIN2, ('a', 'b'), 2), 2)
    broken = {k: v for k, v in D.restrictions.items() if k[0] != k[1]}
    with pytest.raises(MalformedDiagram):
        Diagram(D.base, D.level_bound, D.values, broken)


def test_functor_Sd_P_of_nerve_interval():
    F = functor_Sd_P(filtered_nerve(CHAIN2, 2))
    assert F.values[('a', 'b')].f_vector() == (1,)
    assert F.values[('a',)].f_vector() == (2, 1)
    assert F.values[('b',)].f_vector() == (2, 1)


def test_sd_p_diagram_values_formula_for_nerve():
    # over {0<1} the value at the full chain is the single barycentre
    # chain, matching the membership condition "the chain starts above φ"
    P = poset_from_cover([0, 1], [(0, 1)])
    F = functor_Sd_P(filtered_nerve(P, 2))
    for phi in [(0,), (1,), (0, 1)]:
        V = F.values[phi]
        got = {v for v in V.levels[0]}
        assert all(len(v) >= 1 for v in got)
    assert len(F.values[(0, 1)].nondegenerate(0)) == 1


@given(st.sampled_from(SMALL_CORPUS))
@settings(max_examples=12)
def test_sd_p_diagram_restrictions_are_injective(item):
    _, _, X = item
    F = functor_Sd_P(X)
    for f in F.restrictions.values():
        for n in range(F.level_bound + 1):
            vals = list(f.components[n].values())
            assert len(set(vals)) == len(vals)


def test_functor_C_realizes_subdivision_of_nerve():
    F = functor_Sd_P(filtered_nerve(CHAIN2, 2))
    C = functor_C(F)
    assert C.filtered.space.f_vector() == (4, 3)


@given(st.sampled_from(SMALL_CORPUS))
@settings(max_examples=10)
def test_realization_comparison_over_corpus(item):
    _, _, X = item
    w = check_prop_2_12(X)
    w.validate_filtered()


@given(st.sampled_from(SMALL_CORPUS), st.data())
@settings(max_examples=10)
def test_part_factorization_over_corpus(item, data):
    _, _, X = item
    phi = data.draw(st.sampled_from(strict_words(X.base, 3)))
    w = check_lemma_2_15(X, phi)
    w.validate_filtered()


def test_diagram_hom_counts_identity():
    F = functor_D(filtered_simplex(CHAIN2, ('a', 'b'), 2), 2)
    eta = diagram_hom(F, F)
    assert len(eta) >= 1


def test_exp_P_of_terminal_diagram_is_nerve():
    F = functor_D(filtered_nerve(CHAIN2, 2), 2)
    E = functor_exp_P_filtered(F)
    N = filtered_nerve(CHAIN2, 2)
    assert tuple(len(l) for l in E.space.levels) == \
        tuple(len(l) for l in N.space.levels)


def test_sdp_exp_adjunction_small():
    X = filtered_simplex(CHAIN2, ('a', 'b'), 2)
    F = functor_D(X, 2)
    assert check_sdp_exp_adjunction(X, F)


def test_c_d_adjunction_small():
    X = filtered_simplex(CHAIN2, ('a', 'b'), 2)
    F = functor_D(filtered_nerve(CHAIN2, 2), 2)
    assert check_C_D_adjunction(F, X)


def test_c_d_adjunction_requires_matching_bounds():
    X = filtered_simplex(CHAIN2, ('a', 'b'), 2)
    F = functor_D(filtered_nerve(CHAIN2, 1), 1)
    with pytest.raises(BoundTooLow):
        check_C_D_adjunction(F, X)


def test_colimit_of_parts_reconstructs_object():
    # gluing the parts along intersections gives back the object
    X = filtered_boundary(CHAIN2, ('a', 'a', 'b'), 2)
    words = strict_words(CHAIN2, 3)
    objects, arrows = {}, []
    for phi in words:
        part, incl = phi_part(X, phi)
        objects[phi] = part.space
    union = [set() for _ in range(3)]
    for phi, sp in objects.items():
        for n in range(3):
            union[n] |= sp.levels[n]
    for n in range(3):
        assert union[n] == set(X.space.levels[n])
