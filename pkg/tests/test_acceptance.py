"""Acceptance gate.

Each test prints one pass/fail line on the real stderr so the verdicts
survive pytest's capture. Criteria with a time budget assert it.
"""

import argparse
import subprocess
import sys
import time

import pytest
import sympy

from stratisets.cli import run_suite
from stratisets.errors import BadIndexSet, HypothesisFails
from stratisets.filtered import (anodyne_certificate, filtered_boundary,
                                 filtered_simplex)
from stratisets.labeled_cw import (functor_L, stratified_pi0,
                                   stratified_pi1_presentation,
                                   subcomplex_phi, vertical_cw_of_sdp)
from stratisets.poset import poset_from_cover
from stratisets.subdivision import sd_p_nerve


def _args(**overrides):
    base = dict(dim_bound=3, max_poset=3, max_word=3, seed=0, json_out=None)
    base.update(overrides)
    return argparse.Namespace(**base)


def _report(n, label, ok):
    verdict = "pass" if ok else "FAIL"
    print(f"[criterion {n:2d}] {label}: {verdict}", file=sys.__stderr__,
          flush=True)
    assert ok, f"criterion {n} ({label})"


def _suite_ok(name, **overrides):
    lines, ok = run_suite(name, _args(**overrides))
    return ok


def test_criterion_01_subdivided_nerve_of_the_interval():
    t0 = time.monotonic()
    P = poset_from_cover([0, 1], [(0, 1)])
    r = sd_p_nerve(P, 2)
    verts = {(((0,), 0),), (((1,), 1),), (((0, 1), 0),), (((0, 1), 1),)}
    edges = {(((0,), 0), ((0, 1), 0)), (((1,), 1), ((0, 1), 1)),
             (((0, 1), 0), ((0, 1), 1))}
    ok = (r.space.f_vector() == (4, 3)
          and set(r.space.nondegenerate(0)) == verts
          and set(r.space.nondegenerate(1)) == edges
          and time.monotonic() - t0 < 1.0)
    _report(1, "sd_P of the interval nerve, exact cells, < 1 s", ok)


def test_criterion_02_realization_comparison_suite():
    t0 = time.monotonic()
    ok = _suite_ok("2.12")
    _report(2, "C(Sd_P(X)) -> sd_P(X) bijective over the corpus",
            ok and time.monotonic() - t0 < 300)


def test_criterion_03_part_factorization_suite():
    t0 = time.monotonic()
    ok = _suite_ok("2.15")
    _report(3, "part factorization isomorphism over the corpus",
            ok and time.monotonic() - t0 < 300)


def test_criterion_04_part_operator_relations():
    _report(4, "part-operator relations over the corpus", _suite_ok("2.14"))


def test_criterion_05_certificates_over_two_element_posets():
    t0 = time.monotonic()
    ok = _suite_ok("2.8")
    # single-letter words admit no index set: {0} is not a proper subset
    for word in [('a',), ('b',)]:
        try:
            anodyne_certificate(word, frozenset({0}))
            ok = False
        except (HypothesisFails, BadIndexSet):
            pass
    _report(5, "anodyne certificates, words up to length 5, < 2 min",
            ok and time.monotonic() - t0 < 120)


def test_criterion_06_adjunction_suites():
    ok = (_suite_ok("adjunction-sd-ex")
          and _suite_ok("adjunction-sdp-exp")
          and _suite_ok("adjunction-c-d"))
    _report(6, "transpose bijections for all three adjunctions", ok)


def test_criterion_07_round_trips_of_vertical_models():
    _report(7, "V and L round trips are the identity", _suite_ok("3.4"))


def test_criterion_08_cell_counts_and_triangulation():
    _report(8, "cell counts, triangulation witness, Euler sum 1",
            _suite_ok("3.12"))


def test_criterion_09_stratified_invariants():
    from stratisets.engine import SimplicialMap, coproduct
    from stratisets.filtered import FilteredSimplicialSet
    P = poset_from_cover(["a", "b"], [("a", "b")])
    ok = True
    for phi in [('a',), ('a', 'b')]:
        count, _ = stratified_pi0(filtered_simplex(P, phi, 2), phi)
        ok = ok and count == 1
    pt = filtered_simplex(P, ('a',), 2)
    space, _ = coproduct([pt.space, pt.space])
    comps = {n: {(k, x): pt.word_of(n, x) for (k, x) in space.levels[n]}
             for n in range(3)}
    two = FilteredSimplicialSet(P, space,
                                SimplicialMap(space, pt.structure.target,
                                              comps))
    count, _ = stratified_pi0(two, ('a',))
    ok = ok and count == 2

    X = filtered_boundary(P, ('a', 'a', 'a'), 2)
    base = subcomplex_phi(functor_L(vertical_cw_of_sdp(X)),
                          ('a',)).cells_of_dim(0)[0]
    pres = stratified_pi1_presentation(X, ('a',), base)
    index = {g: i for i, g in enumerate(pres.generators)}
    rows = []
    for rel in pres.relators:
        row = [0] * len(pres.generators)
        for (g, e) in rel:
            row[index[g]] += e
        rows.append(row)
    rank = sympy.Matrix(rows).rank() if rows else 0
    ok = ok and len(pres.generators) - rank == 1
    _report(9, "stratified pi0 counts and circle pi1 rank via SNF", ok)


@pytest.mark.parametrize("suite", ["sdp-nerve", "labeling"])
def test_criterion_10_determinism(suite, tmp_path):
    runs = []
    for tag in ("one", "two"):
        out = tmp_path / f"{tag}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "stratisets.cli", "verify", suite,
             "--json-out", str(out)],
            capture_output=True, check=True)
        runs.append((proc.stdout, out.read_bytes()))
    ok = runs[0] == runs[1]
    _report(10, f"byte-identical reports for verify {suite}", ok)
