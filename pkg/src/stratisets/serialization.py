"""JSON input/output for posets, simplicial sets, and filtered objects.

Canonical serialization renames simplex identifiers per level, sorted by
``repr``, so equal objects always produce identical bytes.
"""

import json

from .engine import (SimplicialMap, SimplicialSet, colimit, ez_decompose,
                     skey, standard_simplex)
from .errors import ParseError
from .filtered import AnodyneCertificate, FilteredSimplicialSet
from .poset import nerve, poset_from_cover


def _cover_pairs(P):
    """Transitive reduction of the order relation."""
    out = []
    for (a, b) in P.leq:
        if a == b:
            continue
        if any(c not in (a, b) and P.le(a, c) and P.le(c, b)
               for c in P.elements):
            continue
        out.append([a, b])
    return sorted(out)


def poset_to_json(P):
    return {"elements": sorted(P.elements, key=skey),
            "cover": _cover_pairs(P)}


def poset_from_json(data):
    try:
        return poset_from_cover(data["elements"],
                                [tuple(p) for p in data["cover"]])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed poset payload: {exc}") from exc


def _canonical_names(X):
    return [{x: f"s{n}_{k:04d}" for k, x in enumerate(X.simplices(n))}
            for n in range(X.dim_bound + 1)]


def simplicial_set_to_json(X):
    names = _canonical_names(X)
    return {
        "dim_bound": X.dim_bound,
        "levels": [[names[n][x] for x in X.simplices(n)]
                   for n in range(X.dim_bound + 1)],
        "face": {f"{n},{i}": {names[n][x]: names[n - 1][X.d(n, i, x)]
                              for x in X.simplices(n)}
                 for n in range(1, X.dim_bound + 1) for i in range(n + 1)},
        "degeneracy": {f"{n},{j}": {names[n][x]: names[n + 1][X.s(n, j, x)]
                                    for x in X.simplices(n)}
                       for n in range(X.dim_bound) for j in range(n + 1)},
    }


def simplicial_set_from_json(data):
    try:
        N = data["dim_bound"]
        levels = [frozenset(l) for l in data["levels"]]
        face = {}
        for key, table in data["face"].items():
            n, i = (int(t) for t in key.split(","))
            face[(n, i)] = dict(table)
        deg = {}
        for key, table in data["degeneracy"].items():
            n, j = (int(t) for t in key.split(","))
            deg[(n, j)] = dict(table)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed simplicial-set payload: {exc}") from exc
    return SimplicialSet(N, tuple(levels), face, deg)


def simplicial_set_from_generators(data):
    """Inflate a compact generator presentation to the level-wise form.

    Payload: {"dim_bound": N, "generators": {name: level},
    "faces": {"name,i": [degeneracy-free vertex word, generator name]}}.
    Each face of each generator is given as a monotone vertex word applied
    to another generator.
    """
    try:
        N = data["dim_bound"]
        gens = {name: int(lvl) for name, lvl in data["generators"].items()}
        faces = {}
        for key, (word, target) in data["faces"].items():
            name, i = key.rsplit(",", 1)
            faces[(name, int(i))] = (tuple(word), target)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed generator payload: {exc}") from exc
    objects = {}
    arrows = []
    for name, n in gens.items():
        objects[('gen', name)] = standard_simplex(n, N)
    for name, n in gens.items():
        if n == 0:
            continue
        for i in range(n + 1):
            if (name, i) not in faces:
                raise ParseError(f"face {i} of generator {name!r} missing")
            word, target = faces[(name, i)]
            if target not in gens:
                raise ParseError(f"face of {name!r} names unknown generator "
                                 f"{target!r}")
            node = ('rel', name, i)
            objects[node] = standard_simplex(n - 1, N)
            coface = tuple(t for t in range(n + 1) if t != i)
            src = objects[node]
            tgt = objects[('gen', name)]
            comps = {l: {w: tuple(coface[t] for t in w) for w in src.levels[l]}
                     for l in range(N + 1)}
            arrows.append((node, ('gen', name),
                           SimplicialMap(src, tgt, comps, check=False)))
            tgt2 = objects[('gen', target)]
            comps2 = {l: {w: tuple(word[t] for t in w) for w in src.levels[l]}
                      for l in range(N + 1)}
            arrows.append((node, ('gen', target),
                           SimplicialMap(src, tgt2, comps2, check=False)))
    space, legs = colimit(objects, arrows)
    return space, {name: legs[('gen', name)] for name in gens}


def filtered_to_json(X):
    payload = {
        "poset": poset_to_json(X.base),
        "space": simplicial_set_to_json(X.space),
        "filtration": {},
    }
    names = _canonical_names(X.space)
    for n in range(X.dim_bound + 1):
        for x in X.space.nondegenerate(n):
            payload["filtration"][names[n][x]] = list(X.word_of(n, x))
    return payload


def filtered_from_json(data):
    try:
        P = poset_from_json(data["poset"])
        space = simplicial_set_from_json(data["space"])
        filtration = {name: tuple(word)
                      for name, word in data["filtration"].items()}
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed filtered payload: {exc}") from exc
    bound = space.dim_bound
    NP = nerve(P, bound)
    comps = {}
    for n in range(bound + 1):
        comp = {}
        for x in space.levels[n]:
            e = ez_decompose(space, n, x)
            if e.base not in filtration:
                raise ParseError(f"generator {e.base!r} has no filtration "
                                 "word")
            word = filtration[e.base]
            if len(word) != e.base_level + 1:
                raise ParseError(f"filtration word of {e.base!r} has the "
                                 "wrong length")
            u = tuple(range(e.base_level + 1))
            for j in reversed(e.word):
                u = u[:j + 1] + u[j:]
            comp[x] = tuple(word[t] for t in u)
        comps[n] = comp
    structure = SimplicialMap(space, NP, comps)
    return FilteredSimplicialSet(P, space, structure)


def certificate_to_json(cert):
    return {"word": list(cert.word),
            "index_set": sorted(cert.index_set),
            "steps": [[list(mu), k] for (mu, k) in cert.steps]}


def certificate_from_json(data):
    try:
        return AnodyneCertificate(tuple(data["word"]),
                                  frozenset(data["index_set"]),
                                  tuple((tuple(mu), k)
                                        for mu, k in data["steps"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed certificate payload: {exc}") from exc


def dumps_canonical(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
