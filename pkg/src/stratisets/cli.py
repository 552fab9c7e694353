"""Batch front end: compute subdivisions and invariants from JSON inputs,
run verification suites over the generated corpus, export reports.

All output is canonically ordered, so identical invocations produce
byte-identical reports.  Timing goes to stderr only.
"""

import argparse
import json
import random
import sys
import time

from .corpus import corpus, corpus_objects, small_posets, strict_words
from .diagrams import (_sd_p_diagram, check_C_D_adjunction,
                       check_lemma_2_15, check_prop_2_12,
                       check_sdp_exp_adjunction, functor_C,
                       functor_C_filtered, functor_D, functor_D_with_tables,
                       functor_exp_P, functor_exp_P_filtered, functor_Sd_P,
                       is_subchain)
from .engine import SimplicialMap, coproduct, skey, standard_simplex
from .errors import (BadIndexSet, BasepointOutsideSubcomplex, BoundTooLow,
                     ComparisonFailed, CycleDetected, HypothesisFails,
                     InstanceTooLarge, LabelingViolation, MalformedDiagram,
                     NotMonotone, ParseError, UnknownFormat, UnknownSuite)
from .filtered import (FilteredSimplicialSet, anodyne_certificate,
                       filtered_boundary, filtered_hom, filtered_horn,
                       filtered_nerve, filtered_simplex, map_space_with_tables,
                       phi_part, replay_certificate)
from .labeled_cw import (functor_L, functor_V, stratified_pi0,
                         stratified_pi1_presentation, subcomplex_phi,
                         triangulate_cells, vertical_cw_of_sdp,
                         vertical_cw_of_sdp_simplex)
from .poset import enumerate_chains, nerve, poset_from_cover
from .serialization import (_canonical_names, certificate_from_json,
                            certificate_to_json, dumps_canonical,
                            filtered_from_json, filtered_to_json,
                            poset_from_json, simplicial_set_from_generators,
                            simplicial_set_from_json, simplicial_set_to_json)
from .subdivision import (check_sd_ex_adjunction, ex_p, ex_p_with_tables,
                          last_vertex, sd, sd_p, sd_p_nerve,
                          transpose_from_ex, transpose_to_ex)

EXIT_PASS = 0
EXIT_CHECK = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

INPUT_ERRORS = (ParseError, NotMonotone, BadIndexSet, MalformedDiagram,
                CycleDetected, UnknownSuite, UnknownFormat,
                BasepointOutsideSubcomplex)
RESOURCE_ERRORS = (InstanceTooLarge, BoundTooLow)


# ---------------------------------------------------------------------------
# input loading

def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _load_poset(args):
    if not getattr(args, 'poset', None):
        raise ParseError("--poset is required for this command")
    return poset_from_json(_read_json(args.poset))


def _load_space(args):
    """Bare simplicial set, possibly in compact generator form or wrapped
    in a filtered payload."""
    data = _read_json(args.space)
    if "generators" in data:
        space, _ = simplicial_set_from_generators(data)
        return space
    if "space" in data:
        data = data["space"]
    return simplicial_set_from_json(data)


def _load_filtered(args):
    """Filtered object from --space (and --poset for shorthands).

    Accepted payloads: the full {"poset", "space", "filtration"} schema,
    the same with "poset" supplied by --poset, or a shorthand against
    --poset: {"simplex": word}, {"boundary": word}, {"horn": {"word", "k"}},
    {"nerve": true}.
    """
    data = _read_json(args.space)
    bound = args.dim_bound
    if "simplex" in data:
        return filtered_simplex(_load_poset(args), tuple(data["simplex"]),
                                bound)
    if "boundary" in data:
        return filtered_boundary(_load_poset(args), tuple(data["boundary"]),
                                 bound)
    if "horn" in data:
        h = data["horn"]
        return filtered_horn(_load_poset(args), tuple(h["word"]), h["k"],
                             bound)
    if data.get("nerve"):
        return filtered_nerve(_load_poset(args), bound)
    if "poset" not in data:
        data = dict(data)
        data["poset"] = _read_json(args.poset) if getattr(args, 'poset',
                                                          None) else None
        if data["poset"] is None:
            raise ParseError("space payload has no poset; pass --poset")
    return filtered_from_json(data)


def _parse_phi(args):
    if not getattr(args, 'phi', None):
        raise ParseError("--phi is required for this command")
    return tuple(args.phi.split(','))


# ---------------------------------------------------------------------------
# output

def _emit(args, lines, payload):
    for line in lines:
        print(line)
    if getattr(args, 'json_out', None):
        with open(args.json_out, 'w') as fh:
            fh.write(dumps_canonical(payload))


def _fvector_lines(name, X):
    space = X.space if isinstance(X, FilteredSimplicialSet) else X
    return [f"{name} f-vector: {space.f_vector()}",
            f"{name} levels: {tuple(len(l) for l in space.levels)}"]


def _map_payload(f):
    """Components of a filtered map under the canonical renaming of both
    ends."""
    sn = _canonical_names(f.source.space)
    tn = _canonical_names(f.target.space)
    comps = f.map.components
    return {str(n): {sn[n][x]: tn[n][y] for x, y in comps[n].items()}
            for n in sorted(comps)}


def _cell_names(k):
    return {c: f"c{idx:04d}" for idx, c in enumerate(sorted(k.cells,
                                                            key=skey))}


def _cw_payload(k):
    names = _cell_names(k)
    return {
        "cells": {names[c]: {"dim": k.cells[c][0],
                             "label": list(k.cells[c][1])}
                  for c in sorted(k.cells, key=skey)},
        "incidence": {names[c]: sorted(names[b] for b in k.incidence[c])
                      for c in sorted(k.incidence, key=skey)},
    }


# ---------------------------------------------------------------------------
# compute verbs

def cmd_nerve(args):
    N = nerve(_load_poset(args), args.dim_bound)
    _emit(args, _fvector_lines("nerve", N), simplicial_set_to_json(N))
    return EXIT_PASS


def cmd_sd(args):
    X = _load_space(args)
    S = sd(X).space
    _emit(args, _fvector_lines("sd", S), simplicial_set_to_json(S))
    return EXIT_PASS


def _maybe_check_adjunction(args, X, other_is_left):
    if args.check_adjunction is None:
        return EXIT_PASS
    other = X
    if args.check_adjunction != '-':
        sub = argparse.Namespace(space=args.check_adjunction,
                                 poset=getattr(args, 'poset', None),
                                 dim_bound=args.dim_bound)
        other = _load_filtered(sub)
    ok = check_sd_ex_adjunction(other, X) if other_is_left else \
        check_sd_ex_adjunction(X, other)
    print(f"adjunction check: {'pass' if ok else 'fail'}")
    return EXIT_PASS if ok else EXIT_CHECK


def cmd_sdp(args):
    X = _load_filtered(args)
    r = sd_p(X)
    _emit(args, _fvector_lines("sd_p", r.filtered),
          filtered_to_json(r.filtered))
    return _maybe_check_adjunction(args, X, other_is_left=False)


def cmd_ex(args):
    X = _load_filtered(args)
    E = ex_p(X)
    _emit(args, _fvector_lines("ex_p", E), filtered_to_json(E))
    return _maybe_check_adjunction(args, X, other_is_left=True)


def cmd_lv(args):
    X = _load_filtered(args)
    r = sd_p(X)
    l = last_vertex(r)
    lines = _fvector_lines("sd_p", r.filtered) + \
        _fvector_lines("target", X)
    payload = {"source": filtered_to_json(r.filtered),
               "target": filtered_to_json(X),
               "components": _map_payload(l)}
    _emit(args, lines, payload)
    return _maybe_check_adjunction(args, X, other_is_left=False)


def cmd_phipart(args):
    X = _load_filtered(args)
    part, _ = phi_part(X, _parse_phi(args))
    _emit(args, _fvector_lines("phi-part", part), filtered_to_json(part))
    return EXIT_PASS


def cmd_horncert(args):
    if args.replay:
        cert = certificate_from_json(_read_json(args.replay))
        ok = replay_certificate(cert)
        print(f"replay: {'pass' if ok else 'fail'}")
        return EXIT_PASS if ok else EXIT_CHECK
    if not args.word or args.set is None:
        raise ParseError("horncert needs --word and --set (or --replay)")
    word = tuple(args.word.split(','))
    S = frozenset(int(t) for t in args.set.split(','))
    try:
        cert = anodyne_certificate(word, S)
    except HypothesisFails as exc:
        print(f"hypothesis fails: {exc}")
        return EXIT_CHECK
    lines = [f"certificate steps: {len(cert.steps)}",
             f"replay: {'pass' if replay_certificate(cert) else 'fail'}"]
    _emit(args, lines, certificate_to_json(cert))
    return EXIT_PASS


def _chain_label(word):
    return "[" + ",".join(str(p) for p in word) + "]"


def cmd_diagram(args):
    X = _load_filtered(args)
    kind = args.kind
    if kind == 'D':
        F = functor_D(X, X.dim_bound)
    elif kind == 'SdP':
        F = functor_Sd_P(X)
    elif kind == 'C':
        Y = functor_C_filtered(functor_Sd_P(X))
        _emit(args, _fvector_lines("C(Sd_P)", Y), filtered_to_json(Y))
        return EXIT_PASS
    elif kind == 'expP':
        Y = functor_exp_P_filtered(functor_D(X, X.dim_bound))
        _emit(args, _fvector_lines("exp_P(D)", Y), filtered_to_json(Y))
        return EXIT_PASS
    else:
        raise ParseError(f"unknown diagram kind {kind!r}")
    lines = []
    payload = {"values": {}}
    for phi in sorted(F.values, key=skey):
        V = F.values[phi]
        lines.append(f"{_chain_label(phi)} f-vector: {V.f_vector()}")
        payload["values"][_chain_label(phi)] = simplicial_set_to_json(V)
    _emit(args, lines, payload)
    return EXIT_PASS


def cmd_cw(args):
    X = _load_filtered(args)
    k = functor_L(vertical_cw_of_sdp(X))
    by_dim = {}
    for c, (d, label) in k.cells.items():
        by_dim.setdefault(d, []).append(label)
    lines = [f"dim {d}: {len(by_dim[d])} cells" for d in sorted(by_dim)]
    lines.append(f"euler sum: {k.euler_sum()}")
    _emit(args, lines, _cw_payload(k))
    return EXIT_PASS


def cmd_pi0(args):
    X = _load_filtered(args)
    count, reps = stratified_pi0(X, _parse_phi(args))
    lines = [f"components: {count}"]
    payload = {"count": count, "representatives": [repr(r) for r in reps]}
    _emit(args, lines, payload)
    return EXIT_PASS


def cmd_pi1(args):
    X = _load_filtered(args)
    phi = _parse_phi(args)
    sub = subcomplex_phi(functor_L(vertical_cw_of_sdp(X)), phi)
    verts = sub.cells_of_dim(0)
    if not verts:
        raise BasepointOutsideSubcomplex("the subcomplex has no vertices")
    if args.basepoint >= len(verts):
        raise BasepointOutsideSubcomplex(
            f"basepoint index {args.basepoint} out of range "
            f"(subcomplex has {len(verts)} vertices)")
    pres = stratified_pi1_presentation(X, phi, verts[args.basepoint])
    gname = {g: f"g{idx}" for idx, g in enumerate(pres.generators)}
    lines = ["generators: " + " ".join(gname[g] for g in pres.generators)]
    for rel in pres.relators:
        lines.append("relator: " + " ".join(
            gname[g] + ("" if e == 1 else f"^{e}") for (g, e) in rel))
    payload = {"generators": [gname[g] for g in pres.generators],
               "relators": [[[gname[g], e] for (g, e) in rel]
                            for rel in pres.relators]}
    _emit(args, lines, payload)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verification suites

def _run_instances(results):
    """results: iterable of (label, bool). Returns (lines, all pass)."""
    lines = []
    ok = True
    for label, verdict in results:
        lines.append(f"{label}: {'pass' if verdict else 'fail'}")
        ok = ok and verdict
    return lines, ok


def suite_sdp_nerve(args):
    P = poset_from_cover([0, 1], [(0, 1)])
    r = sd_p_nerve(P, 2)
    verts = {(((0,), 0),), (((1,), 1),), (((0, 1), 0),), (((0, 1), 1),)}
    edges = {(((0,), 0), ((0, 1), 0)), (((1,), 1), ((0, 1), 1)),
             (((0, 1), 0), ((0, 1), 1))}
    got_v = set(r.space.nondegenerate(0))
    got_e = set(r.space.nondegenerate(1))
    return _run_instances([
        ("sdp-nerve chain2 f-vector (4,3)",
         r.space.f_vector() == (4, 3)),
        ("sdp-nerve chain2 vertex list", got_v == verts),
        ("sdp-nerve chain2 edge list", got_e == edges),
    ])


def _suite_corpus(args, dim_bound):
    return corpus(args.max_poset, args.max_word,
                  min(args.dim_bound, dim_bound))


def suite_2_12(args):
    results = []
    for pname, oname, X in _suite_corpus(args, 3):
        try:
            check_prop_2_12(X)
            results.append((f"2.12 {pname} {oname}", True))
        except ComparisonFailed:
            results.append((f"2.12 {pname} {oname}", False))
    return _run_instances(results)


def suite_2_15(args):
    results = []
    for pname, oname, X in _suite_corpus(args, 3):
        rX = sd_p(X)
        for phi in strict_words(X.base, args.max_word):
            try:
                check_lemma_2_15(X, phi, rX)
                ok = True
            except ComparisonFailed:
                ok = False
            results.append((f"2.15 {pname} {oname} {_chain_label(phi)}", ok))
    return _run_instances(results)


def _part_ids(X, phi):
    part, _ = phi_part(X, phi)
    return tuple(frozenset(l) for l in part.space.levels), part


def suite_2_14(args):
    """Interaction of part-of operators for pairs and triples of chains:
    idempotence, vanishing off subchains, intersection on subchains,
    monotonicity, and collapse of nested iterates."""
    results = []
    for pname, oname, X in _suite_corpus(args, 2):
        words = strict_words(X.base, args.max_word)
        ok = True
        parts = {w: _part_ids(X, w) for w in words}
        for w1 in words:
            ids1, p1 = parts[w1]
            inner = {w: _part_ids(p1, w)[0] for w in words}
            if inner[w1] != ids1:
                ok = False
            for w2 in words:
                if is_subchain(w2, w1):
                    if inner[w2] != tuple(a & b for a, b in
                                          zip(ids1, parts[w2][0])):
                        ok = False
                else:
                    if any(inner[w2]):
                        ok = False
                for w3 in words:
                    # monotonicity and collapse need the fully nested
                    # hypothesis; with an unnested middle chain the
                    # inclusion can fail against an empty part
                    if is_subchain(w3, w2) and is_subchain(w2, w1):
                        if not all(a <= b for a, b in
                                   zip(inner[w3], inner[w2])):
                            ok = False
                        _, p12 = _part_ids(p1, w2)
                        if _part_ids(p12, w3)[0] != inner[w3]:
                            ok = False
        results.append((f"2.14 {pname} {oname}", ok))
    return _run_instances(results)


def suite_2_5(args):
    """The inclusion of the φ-part induces a level-wise bijection of
    mapping spaces out of Δ^φ, up to level 2."""
    results = []
    for pname, oname, X in _suite_corpus(args, 2):
        for phi in strict_words(X.base, args.max_word):
            part, _ = phi_part(X, phi)
            _, tin, _ = map_space_with_tables(phi, part, 2)
            _, tout, _ = map_space_with_tables(phi, X, 2)
            ok = True
            for n in range(3):
                inner = {k[1] for k in tin if k[0] == n}
                outer = {k[1] for k in tout if k[0] == n}
                if inner != outer:
                    ok = False
            results.append((f"2.5 {pname} {oname} {_chain_label(phi)}", ok))
    return _run_instances(results)


def suite_2_8(args):
    """Exhaustive anodyne certificates over two-element posets: every
    (word, index set) either certifies and replays, or reports a
    hypothesis failure."""
    results = []
    for pname, P in small_posets(2):
        if len(P.elements) != 2:
            continue
        certified = replayed = refused = 0
        ok = True
        for length in range(2, 6):
            for c in enumerate_chains(P, length):
                word = c.word
                positions = range(len(word))
                for mask in range(1, 2 ** len(word)):
                    S = frozenset(i for i in positions if mask >> i & 1)
                    try:
                        cert = anodyne_certificate(word, S)
                    except HypothesisFails:
                        refused += 1
                        continue
                    except BadIndexSet:
                        continue
                    certified += 1
                    if replay_certificate(cert):
                        replayed += 1
                    else:
                        ok = False
        results.append((f"2.8 {pname} certified={certified} "
                        f"replayed={replayed} refused={refused}",
                        ok and certified == replayed))
    return _run_instances(results)


def suite_2_11(args):
    """Restriction maps of the subdivision diagram are monomorphisms."""
    results = []
    for pname, oname, X in _suite_corpus(args, 2):
        F = functor_Sd_P(X)
        ok = True
        for arrow, f in F.restrictions.items():
            for n in range(F.level_bound + 1):
                vals = list(f.components[n].values())
                if len(set(vals)) != len(vals):
                    ok = False
        results.append((f"2.11 {pname} {oname}", ok))
    return _run_instances(results)


def _total(X):
    return sum(len(l) for l in X.space.levels)


def suite_adjunction_sd_ex(args):
    results = []
    for pname, P in small_posets(args.max_poset):
        objs = corpus_objects(P, min(args.dim_bound, 2), args.max_word)
        subdivided = {name: sd_p(X) for name, X in objs}
        exponents = {name: ex_p_with_tables(X) for name, X in objs}
        for xname, X in objs:
            rX = subdivided[xname]
            for yname, Y in objs:
                if _total(X) + _total(Y) > 300:
                    continue
                E, tables = exponents[yname]
                ok = _check_adjunction_cached(X, Y, rX, E, tables)
                results.append((f"sd-ex {pname} {xname} ~ {yname}", ok))
    return _run_instances(results)


def _check_adjunction_cached(X, Y, rX, E, tables):
    left = filtered_hom(rX.filtered, Y)
    right = filtered_hom(X, E)
    if len(left) != len(right):
        return False
    right_frozen = {h.freeze() for h in right}
    seen = set()
    for g in left:
        h = transpose_to_ex(g, rX, E)
        fz = h.freeze()
        if fz not in right_frozen or fz in seen:
            return False
        seen.add(fz)
        if transpose_from_ex(h, rX, Y, tables).freeze() != g.freeze():
            return False
    return True


def suite_adjunction_sdp_exp(args):
    results = []
    bound = min(args.dim_bound, 2)
    for pname, P in small_posets(args.max_poset):
        objs = corpus_objects(P, bound, args.max_word)
        subdivided = {name: sd_p(X) for name, X in objs}
        sdiag = {name: _sd_p_diagram(X, subdivided[name])[0]
                 for name, X in objs}
        # Y-outer so only one exponential is alive at a time; they can
        # run to ~100 MB each on the doubles
        for yname, Y in objs:
            pairs = [(xname, X) for xname, X in objs
                     if _total(X) + _total(Y) <= 60]
            if not pairs:
                continue
            F = functor_D(Y, bound)
            ET = functor_exp_P(F, bound)
            for xname, X in pairs:
                ok = check_sdp_exp_adjunction(X, F, rX=subdivided[xname],
                                              DX=sdiag[xname], ET=ET)
                results.append((f"sdp-exp {pname} {xname} ~ {yname}", ok))
    return _run_instances(results)


def suite_adjunction_c_d(args):
    results = []
    bound = min(args.dim_bound, 2)
    for pname, P in small_posets(args.max_poset):
        objs = corpus_objects(P, bound, args.max_word)
        dtabs = {name: functor_D_with_tables(X, bound) for name, X in objs}
        for yname, Y in objs:
            pairs = [(xname, X) for xname, X in objs
                     if _total(X) + _total(Y) <= 60]
            if not pairs:
                continue
            F = functor_D(Y, bound)
            C = functor_C(F)
            for xname, X in pairs:
                ok = check_C_D_adjunction(F, X, C=C, DT=dtabs[xname])
                results.append((f"c-d {pname} {xname} ~ {yname}", ok))
    return _run_instances(results)


def suite_3_4(args):
    """Round trips between vertical data and labeled complexes preserve
    cells, labels, incidence, and attaching words."""
    results = []
    for pname, oname, X in _suite_corpus(args, 2):
        v = vertical_cw_of_sdp(X)
        k = functor_L(v)
        v2 = functor_V(k, v.base)
        k2 = functor_L(v2)
        ok = (v2.cells == v.cells and v2.incidence == v.incidence
              and v2.attach == v.attach and k2.cells == k.cells
              and k2.incidence == k.incidence and k2.attach == k.attach)
        results.append((f"3.4 {pname} {oname}", ok))
    return _run_instances(results)


def suite_3_12(args):
    results = []
    for pname, P in small_posets(args.max_poset):
        for word in strict_words(P, args.max_word):
            v = vertical_cw_of_sdp_simplex(P, word)
            n = len(word) - 1
            model = sd(standard_simplex(n, n)).space
            ok = True
            for k in range(n + 1):
                cells_k = [c for c, (d, _) in v.cells.items() if d == k]
                expect = len(model.nondegenerate(k))
                if len(cells_k) != expect:
                    ok = False
            try:
                triangulate_cells(vertical_cw_of_sdp(
                    filtered_simplex(P, word, max(n, 1))))
            except ComparisonFailed:
                ok = False
            if functor_L(v).euler_sum() != 1:
                ok = False
            results.append((f"3.12 {pname} {_chain_label(word)}", ok))
    return _run_instances(results)


def suite_labeling(args):
    results = []
    for pname, oname, X in _suite_corpus(args, 2):
        try:
            functor_L(vertical_cw_of_sdp(X)).validate()
            ok = True
        except LabelingViolation:
            ok = False
        results.append((f"labeling {pname} {oname}", ok))
    return _run_instances(results)


def suite_pi(args):
    results = []
    for pname, P in small_posets(args.max_poset):
        p = min(P.elements, key=skey)
        for phi in strict_words(P, args.max_word):
            X = filtered_simplex(P, phi, 2)
            count, _ = stratified_pi0(X, phi)
            results.append((f"pi0 {pname} simplex{_chain_label(phi)}",
                            count == 1))
        pt = filtered_simplex(P, (p,), 2)
        space, _ = coproduct([pt.space, pt.space])
        comps = {n: {(k, x): pt.word_of(n, x) for (k, x) in space.levels[n]}
                 for n in range(3)}
        two = FilteredSimplicialSet(
            P, space, SimplicialMap(space, pt.structure.target, comps))
        count, _ = stratified_pi0(two, (p,))
        results.append((f"pi0 {pname} two points", count == 2))
    return _run_instances(results)


SUITES = {
    "sdp-nerve": suite_sdp_nerve,
    "2.5": suite_2_5,
    "2.8": suite_2_8,
    "2.11": suite_2_11,
    "2.12": suite_2_12,
    "2.14": suite_2_14,
    "2.15": suite_2_15,
    "adjunction-sd-ex": suite_adjunction_sd_ex,
    "adjunction-sdp-exp": suite_adjunction_sdp_exp,
    "adjunction-c-d": suite_adjunction_c_d,
    "3.4": suite_3_4,
    "3.12": suite_3_12,
    "labeling": suite_labeling,
    "pi": suite_pi,
}


def run_suite(name, args):
    if name == "all":
        lines, ok = [], True
        for key in sorted(SUITES):
            sub_lines, sub_ok = SUITES[key](args)
            lines.extend(sub_lines)
            ok = ok and sub_ok
        return lines, ok
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: "
                           f"{', '.join(sorted(SUITES))}, all")
    return SUITES[name](args)


def cmd_verify(args):
    random.seed(args.seed)
    t0 = time.monotonic()
    lines, ok = run_suite(args.suite, args)
    lines.append(f"suite {args.suite}: {'pass' if ok else 'FAIL'} "
                 f"({len(lines)} checks)")
    payload = {"suite": args.suite, "results": lines,
               "status": "pass" if ok else "fail"}
    _emit(args, lines, payload)
    print(f"elapsed: {time.monotonic() - t0:.1f}s", file=sys.stderr)
    return EXIT_PASS if ok else EXIT_CHECK


# ---------------------------------------------------------------------------
# export

def _dot_lines(k):
    names = _cell_names(k)
    lines = ["graph cw {"]
    for c in sorted(k.cells, key=skey):
        d, label = k.cells[c]
        lines.append(f'  {names[c]} [label="{names[c]} d{d} '
                     f'{_chain_label(label)}"];')
    for c in sorted(k.incidence, key=skey):
        for b in sorted(k.incidence[c], key=skey):
            lines.append(f"  {names[c]} -- {names[b]};")
    lines.append("}")
    return lines


def cmd_export(args):
    what, fmt = args.what, args.format
    if what == "cw":
        if fmt != "dot":
            raise UnknownFormat(f"cw exports as dot, not {fmt!r}")
        X = _load_filtered(args)
        lines = _dot_lines(functor_L(vertical_cw_of_sdp(X)))
    elif what == "fvector":
        if fmt != "csv":
            raise UnknownFormat(f"fvector exports as csv, not {fmt!r}")
        X = _load_filtered(args)
        r = sd_p(X)
        lines = ["name," + ",".join(f"f{n}" for n in range(X.dim_bound + 1))]
        for name, obj in (("space", X.space), ("sd_p", r.filtered.space)):
            fv = obj.f_vector()
            row = list(fv) + [0] * (X.dim_bound + 1 - len(fv))
            lines.append(name + "," + ",".join(str(c) for c in row))
    elif what == "certificate":
        if fmt != "json":
            raise UnknownFormat(f"certificate exports as json, not {fmt!r}")
        if not args.word or args.set is None:
            raise ParseError("export certificate needs --word and --set")
        word = tuple(args.word.split(','))
        S = frozenset(int(t) for t in args.set.split(','))
        cert = anodyne_certificate(word, S)
        lines = dumps_canonical(certificate_to_json(cert)).splitlines()
    else:
        raise UnknownFormat(f"unknown export target {what!r}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, 'w') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="stratisets",
        description="workbench for filtered simplicial sets over a poset")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, space=True):
        p.add_argument("--poset", help="poset JSON file")
        if space:
            p.add_argument("--space", help="simplicial input JSON file")
        p.add_argument("--dim-bound", type=int, default=3)
        p.add_argument("--max-poset", type=int, default=3)
        p.add_argument("--max-word", type=int, default=3)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json-out", help="write canonical JSON report here")

    p = sub.add_parser("nerve", help="nerve of a poset")
    common(p, space=False)
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("sd", help="barycentric subdivision")
    common(p)
    p.set_defaults(func=cmd_sd)

    for verb, func in (("sdp", cmd_sdp), ("ex", cmd_ex), ("lv", cmd_lv)):
        p = sub.add_parser(verb)
        common(p)
        p.add_argument("--check-adjunction", nargs="?", const='-',
                       default=None, metavar="OTHER",
                       help="verify the transpose bijection against OTHER "
                            "(default: the input itself)")
        p.set_defaults(func=func)

    p = sub.add_parser("phipart", help="subobject of a given chain type")
    common(p)
    p.add_argument("--phi", help="comma-separated strict chain")
    p.set_defaults(func=cmd_phipart)

    p = sub.add_parser("horncert", help="anodyne certificates for "
                                        "generalized horns")
    common(p, space=False)
    p.add_argument("--word", help="comma-separated filtration word")
    p.add_argument("--set", help="comma-separated index set")
    p.add_argument("--replay", help="certificate JSON to replay")
    p.set_defaults(func=cmd_horncert)

    p = sub.add_parser("diagram", help="diagram functors")
    common(p)
    p.add_argument("--kind", choices=["D", "SdP", "C", "expP"], default="D")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("cw", help="labeled CW model of the subdivision")
    common(p)
    p.set_defaults(func=cmd_cw)

    p = sub.add_parser("pi0", help="stratified component count")
    common(p)
    p.add_argument("--phi")
    p.set_defaults(func=cmd_pi0)

    p = sub.add_parser("pi1", help="stratified fundamental-group "
                                   "presentation")
    common(p)
    p.add_argument("--phi")
    p.add_argument("--basepoint", type=int, default=0,
                   help="index into the canonical vertex list")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    common(p, space=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="DOT/CSV/JSON artifacts")
    p.add_argument("what", choices=["cw", "fvector", "certificate"])
    common(p)
    p.add_argument("--format", required=True)
    p.add_argument("--word")
    p.add_argument("--set")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RESOURCE_ERRORS as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
