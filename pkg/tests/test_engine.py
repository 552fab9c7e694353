from math import comb

import hypothesis.strategies as st
import pytest
from hypothesis import given

from stratisets.engine import (SimplicialMap, apply_degeneracy_word,
                               apply_vertex_word, boundary, classifying_map,
                               colimit, compose, coproduct, ez_decompose,
                               face_through_word, hom_enumerate, horn,
                               identity_map, insert_degeneracy,
                               is_isomorphism, product, pullback, pushout,
                               quotient, raise_bound, standard_simplex,
                               sub_simplicial_set)

# small shapes reused across tests
D2 = standard_simplex(2)
B2 = boundary(2)


def test_standard_simplex_f_vectors():
    assert standard_simplex(0).f_vector() == (1,)
    assert standard_simplex(1).f_vector() == (2, 1)
    assert D2.f_vector() == (3, 3, 1)


def test_boundary_and_horn():
    assert B2.f_vector() == (3, 3)
    assert horn(2, 1).f_vector() == (3, 2)


def test_validation_catches_broken_identity():
    bad = dict(D2.face)
    table = dict(bad[(2, 0)])
    table[(0, 1, 2)] = (0, 2)  # wrong face
    bad[(2, 0)] = table
    from stratisets.engine import SimplicialSet
    from stratisets.errors import MalformedDiagram
    with pytest.raises(MalformedDiagram):
        SimplicialSet(2, D2.levels, bad, D2.deg)


@given(st.data())
def test_ez_decomposition_round_trip(data):
    X = raise_bound(D2, 5)
    level = data.draw(st.integers(min_value=0, max_value=5))
    x = data.draw(st.sampled_from(sorted(X.levels[level], key=repr)))
    e = ez_decompose(X, level, x)
    assert not X.is_degenerate(e.base_level, e.base) or e.base_level == 0
    assert all(a > b for a, b in zip(e.word, e.word[1:]))
    assert apply_degeneracy_word(X, e.base_level, e.base, e.word) == x


@given(st.integers(min_value=0, max_value=4),
       st.integers(min_value=0, max_value=4))
def test_degeneracy_word_insertion_normalizes(j, t):
    # s_t s_word stays strictly descending
    word = (3, 1, 0)
    out = insert_degeneracy(word, min(t, 3 + len(word)))
    assert all(a > b for a, b in zip(out, out[1:]))
    assert len(out) == len(word) + 1


def test_face_through_word_cancellation():
    # d_1 s_1 = id, so pushing d_1 through (1,) consumes the word
    word, residual = face_through_word((1,), 1)
    assert word == () and residual is None
    word, residual = face_through_word((1,), 3)
    assert residual == 2 and word == (1,)


@given(st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=3))
def test_product_counts_shuffles(p, q):
    # non-degenerate top cells of a product of simplices = (p+q choose p)
    X, _, _ = product(standard_simplex(p, p + q), standard_simplex(q, p + q))
    assert len(X.nondegenerate(p + q)) == comb(p + q, p)


def test_product_of_intervals():
    X, pr1, pr2 = product(standard_simplex(1, 2), standard_simplex(1, 2))
    assert X.f_vector() == (4, 5, 2)
    pr1.validate()
    pr2.validate()


def test_hom_enumeration_interval():
    maps = hom_enumerate(standard_simplex(1), standard_simplex(1))
    assert len(maps) == 3  # two constants and the identity


def test_hom_enumeration_respects_faces():
    for f in hom_enumerate(B2, D2):
        f.validate()


def test_pushout_circle():
    pt = standard_simplex(0, 1)
    edge = standard_simplex(1, 1)
    two_pts, _ = coproduct([pt, pt])
    # glue both endpoints of an edge to one point: a circle
    comps = {n: {} for n in range(2)}
    for (k, x) in two_pts.levels[0]:
        comps[0][(k, x)] = (0,) if k == 0 else (1,)
    for (k, x) in two_pts.levels[1]:
        comps[1][(k, x)] = (0, 0) if k == 0 else (1, 1)
    ends = SimplicialMap(two_pts, edge, comps)
    point_map = SimplicialMap(two_pts, pt,
                              {n: {x: (0,) * (n + 1)
                                   for x in two_pts.levels[n]}
                               for n in range(2)})
    circle, _, _ = pushout(ends, point_map)
    assert circle.f_vector() == (1, 1)


def test_quotient_identifies_vertices():
    X = standard_simplex(1, 1)
    Q, proj = quotient(X, [(0, (0,), (1,))])
    assert Q.f_vector() == (1, 1)
    proj.validate()


def test_pullback_of_inclusions_is_intersection():
    left, li = sub_simplicial_set(B2, [(1, (0, 1)), (1, (1, 2))])
    right, ri = sub_simplicial_set(B2, [(1, (1, 2)), (1, (0, 2))])
    both, p1, p2 = pullback(li, ri)
    # shared part is the edge (1,2) with its endpoints
    assert both.f_vector() == (3, 1)


def test_colimit_of_single_object_is_identity_shape():
    space, legs = colimit({'x': D2}, [])
    assert space.f_vector() == D2.f_vector()
    assert is_isomorphism(legs['x'])


def test_apply_vertex_word_degenerate_collapse():
    # repeating a vertex factors through a degeneracy
    y = apply_vertex_word(D2, 2, (0, 1, 2), (1, 1))
    assert y == (1, 1)
    assert D2.is_degenerate(1, y)


def test_classifying_map_of_top_cell():
    f = classifying_map(D2, 2, (0, 1, 2))
    f.validate()
    assert f.components[2][(0, 1, 2)] == (0, 1, 2)


def test_raise_bound_keeps_nondegenerate_counts():
    X = raise_bound(B2, 4)
    assert X.f_vector() == B2.f_vector()
    X.validate()


def test_compose_with_identity():
    f = classifying_map(D2, 1, (0, 2))
    assert compose(identity_map(D2), f).components == f.components


@given(st.integers(min_value=0, max_value=2))
def test_coproduct_levels_add_up(n):
    C, (i0, i1) = coproduct([D2, B2])
    assert len(C.levels[n]) == len(D2.levels[n]) + len(B2.levels[n])
    i0.validate()
    i1.validate()
