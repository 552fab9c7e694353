"""Barycentric subdivision, its filtered variant, and the right adjoint.

``sd`` of a standard simplex is the nerve of its poset of non-empty
vertex subsets; for a general object it is computed as the colimit of
these nerves over the canonical presentation by non-degenerate simplices
and face relations.  The filtered subdivision is the pullback of
``sd(X) → sd(nerve(P))`` against the subdivided nerve with its stratum
decoration, and carries the last-vertex map back to ``X``.
"""

from dataclasses import dataclass
from itertools import combinations

from .engine import (SimplicialMap, SimplicialSet, apply_vertex_word,
                     classifying_map, colimit, compose, ez_decompose,
                     pullback, skey)
from .errors import BoundTooLow
from .filtered import (FilteredMap, FilteredSimplicialSet, filtered_compose,
                       filtered_hom, filtered_simplex)
from .poset import Poset, enumerate_chains, nerve


def surjection_word(word, r):
    """Monotone vertex word of the surjection named by a descending
    degeneracy word over a base of dimension ``r``."""
    u = tuple(range(r + 1))
    for j in reversed(word):
        u = u[:j + 1] + u[j:]
    return u


_sd_standard_cache = {}


def sd_standard(n, bound):
    """sd(Δ^n): nerve of the poset of non-empty subsets of {0..n}.

    Simplices are weak chains of frozensets ordered by inclusion.
    """
    key = (n, bound)
    if key not in _sd_standard_cache:
        subsets = [frozenset(V) for m in range(n + 1)
                   for V in combinations(range(n + 1), m + 1)]
        leq = frozenset((a, b) for a in subsets for b in subsets if a <= b)
        P = Poset(frozenset(subsets), leq)
        _sd_standard_cache[key] = nerve(P, bound)
    return _sd_standard_cache[key]


def sd_word_map(m, n, w, bound):
    """sd of the map Δ^m → Δ^n classified by the monotone word ``w``."""
    src = sd_standard(m, bound)
    tgt = sd_standard(n, bound)
    comps = {l: {c: tuple(frozenset(w[t] for t in V) for V in c)
                 for c in src.levels[l]}
             for l in range(bound + 1)}
    return SimplicialMap(src, tgt, comps, check=False)


@dataclass
class SdResult:
    """Subdivided simplicial set with its colimit presentation.

    ``legs[(n, x)]`` maps sd(Δ^n) into the result for each
    non-degenerate ``x``; ``pre[(m, rep)]`` is a canonical preimage
    ``((n, x), chain)`` of each simplex.
    """

    source: SimplicialSet
    space: SimplicialSet
    legs: dict
    pre: dict

    def classof(self, n, x, chain):
        """Image in the subdivision of a chain living over any simplex
        ``x`` of the source, degenerate ones included."""
        e = ez_decompose(self.source, n, x)
        if e.word:
            u = surjection_word(e.word, e.base_level)
            chain = tuple(frozenset(u[t] for t in V) for V in chain)
        return self.legs[(e.base_level, e.base)].components[len(chain) - 1][chain]


def sd(X):
    """Barycentric subdivision of ``X`` at the same dimension bound."""
    N = X.dim_bound
    gens = {n: X.nondegenerate(n) for n in range(N + 1)}
    objects = {}
    arrows = []
    for n in range(N + 1):
        shape = sd_standard(n, N)
        for x in gens[n]:
            objects[('gen', n, x)] = shape
    for n in range(1, N + 1):
        shape = sd_standard(n - 1, N)
        for x in gens[n]:
            for i in range(n + 1):
                node = ('rel', n, x, i)
                objects[node] = shape
                coface = tuple(t for t in range(n + 1) if t != i)
                arrows.append((node, ('gen', n, x),
                               sd_word_map(n - 1, n, coface, N)))
                e = ez_decompose(X, n - 1, X.d(n, i, x))
                u = surjection_word(e.word, e.base_level)
                arrows.append((node, ('gen', e.base_level, e.base),
                               sd_word_map(n - 1, e.base_level, u, N)))
    space, legs = colimit(objects, arrows)
    gen_legs = {(n, x): legs[('gen', n, x)]
                for n in range(N + 1) for x in gens[n]}
    pre = {}
    for (n, x) in sorted(gen_legs, key=skey):
        leg = gen_legs[(n, x)]
        for m in range(N + 1):
            for chain in sorted(leg.source.levels[m], key=skey):
                key = (m, leg.components[m][chain])
                cand = ((n, x), chain)
                if key not in pre or skey(cand) < skey(pre[key]):
                    pre[key] = cand
    return SdResult(X, space, gen_legs, pre)


def sd_map(f, sdX, sdY):
    """sd of a simplicial map, between prepared subdivisions."""
    comps = {}
    for m in range(sdX.space.dim_bound + 1):
        comp = {}
        for rep in sdX.space.levels[m]:
            (n, x), chain = sdX.pre[(m, rep)]
            comp[rep] = sdY.classof(n, f.components[n][x], chain)
        comps[m] = comp
    return SimplicialMap(sdX.space, sdY.space, comps, check=False)


# ---------------------------------------------------------------------------
# the subdivided nerve with stratum decoration


@dataclass
class SdPNerve:
    """Subdivision of nerve(P) whose simplices carry stratum decorations.

    Level k holds tuples ((σ_0, p_0), ..., (σ_k, p_k)) with the σ_i
    strict chains of P nested as sets, the p_i weakly increasing, and
    every p_i a letter of σ_0.
    """

    base: Poset
    space: SimplicialSet
    to_sd_nerve: SimplicialMap
    to_nerve: SimplicialMap


_sdpn_cache = {}
_sd_nerve_cache = {}


def _poset_key(P):
    return (P.elements, P.leq)


def sd_nerve(P, bound):
    key = (_poset_key(P), bound)
    if key not in _sd_nerve_cache:
        _sd_nerve_cache[key] = sd(nerve(P, bound))
    return _sd_nerve_cache[key]


def sd_p_nerve(P, bound):
    key = (_poset_key(P), bound)
    if key in _sdpn_cache:
        return _sdpn_cache[key]
    NP = nerve(P, bound)
    strict = [c.word for L in range(1, bound + 2)
              for c in enumerate_chains(P, L, strict=True)]
    verts = [(s, p) for s in strict for p in s]

    def extend(prefix):
        out = [prefix]
        if len(prefix) == bound + 1:
            return out
        (s, p) = prefix[-1]
        for (t, q) in verts:
            if set(s) <= set(t) and P.le(p, q) and q in prefix[0][0]:
                out.extend(extend(prefix + ((t, q),)))
        return out

    levels = [set() for _ in range(bound + 1)]
    for v in verts:
        for simplex in extend((v,)):
            levels[len(simplex) - 1].add(simplex)
    face = {(n, i): {c: c[:i] + c[i + 1:] for c in levels[n]}
            for n in range(1, bound + 1) for i in range(n + 1)}
    deg = {(n, j): {c: c[:j + 1] + c[j:] for c in levels[n]}
           for n in range(bound) for j in range(n + 1)}
    space = SimplicialSet(bound, tuple(frozenset(l) for l in levels), face, deg)

    sdN = sd_nerve(P, bound)

    def chain_class(c):
        # express the chain of strict chains inside sd(Δ^{top}) for the
        # top strict chain, then take its class in sd(nerve(P))
        top = c[-1][0]
        k = len(top) - 1
        pos = {v: t for t, v in enumerate(top)}
        subsets = tuple(frozenset(pos[v] for v in s) for (s, _) in c)
        return sdN.classof(k, top, subsets)

    pr1 = SimplicialMap(space, sdN.space,
                        {n: {c: chain_class(c) for c in levels[n]}
                         for n in range(bound + 1)}, check=False)
    pr2 = SimplicialMap(space, NP,
                        {n: {c: tuple(p for (_, p) in c) for c in levels[n]}
                         for n in range(bound + 1)}, check=False)
    result = SdPNerve(P, space, pr1, pr2)
    _sdpn_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# filtered subdivision


@dataclass
class SdPResult:
    """Filtered subdivision with the projections used to act on it.

    Simplex identifiers are pairs (u, v): u a class of sd(space), v a
    decorated chain of the subdivided nerve.
    """

    original: FilteredSimplicialSet
    filtered: FilteredSimplicialSet
    sd_space: SdResult
    proj_space: SimplicialMap
    proj_nerve: SimplicialMap


def sd_p(X):
    P = X.base
    bound = X.dim_bound
    sdX = sd(X.space)
    sdpn = sd_p_nerve(P, bound)
    f = sd_map(X.structure, sdX, sd_nerve(P, bound))
    space, prU, prV = pullback(f, sdpn.to_sd_nerve)
    structure = compose(sdpn.to_nerve, prV)
    FS = FilteredSimplicialSet(P, space, structure, check=False)
    return SdPResult(X, FS, sdX, prU, prV)


def sd_p_map(g, rX, rY):
    """Filtered subdivision of a filtered map, between prepared results."""
    m = sd_map(g.map, rX.sd_space, rY.sd_space)
    comps = {n: {(u, v): (m.components[n][u], v)
                 for (u, v) in rX.filtered.space.levels[n]}
             for n in range(rX.filtered.dim_bound + 1)}
    sm = SimplicialMap(rX.filtered.space, rY.filtered.space, comps, check=False)
    return FilteredMap(rX.filtered, rY.filtered, sm, check=False)


_sdp_simplex_cache = {}


def sd_p_simplex(P, word, bound):
    """Memoized filtered subdivision of Δ^word (shared instances matter:
    right-adjoint simplices are frozen maps out of these)."""
    key = (_poset_key(P), tuple(word), bound)
    if key not in _sdp_simplex_cache:
        _sdp_simplex_cache[key] = sd_p(filtered_simplex(P, word, bound))
    return _sdp_simplex_cache[key]


def last_vertex(rX):
    """The filtered map sd_P(X) → X.

    A simplex (u, v) has a canonical chain presentation over some
    non-degenerate x; entry i goes to the largest vertex of the i-th
    chain member whose filtration letter matches the decoration.
    """
    X = rX.original
    comps = {}
    for m in range(X.dim_bound + 1):
        comp = {}
        for (u, v) in rX.filtered.space.levels[m]:
            (n, x), chain = rX.sd_space.pre[(m, u)]
            word = X.word_of(n, x)
            picks = tuple(max(t for t in V if word[t] == p)
                          for V, (_, p) in zip(chain, v))
            comp[(u, v)] = apply_vertex_word(X.space, n, x, picks)
        comps[m] = comp
    sm = SimplicialMap(rX.filtered.space, X.space, comps, check=False)
    return FilteredMap(rX.filtered, X, sm)


def filtered_classifying_map(X, n, x):
    """The filtered map Δ^word → X picking out the simplex ``x``."""
    word = X.word_of(n, x)
    src = filtered_simplex(X.base, word, X.dim_bound)
    cm = classifying_map(X.space, n, x)
    sm = SimplicialMap(src.space, X.space, cm.components, check=False)
    return FilteredMap(src, X, sm, check=False)


# ---------------------------------------------------------------------------
# the right adjoint


def _word_shape_map(P, w_src, w_tgt, w, bound):
    """Filtered map Δ^{w_src} → Δ^{w_tgt} classified by vertex word ``w``."""
    from .filtered import _vertex_word_map
    src = filtered_simplex(P, w_src, bound)
    tgt = filtered_simplex(P, w_tgt, bound)
    sm = _vertex_word_map(len(w_src) - 1, len(w_tgt) - 1, w, bound)
    return FilteredMap(src, tgt, sm, check=False)


def ex_p_with_tables(X, level_bound=None):
    """Right adjoint to the filtered subdivision, truncated level-wise.

    Level n holds pairs (ψ, table): ψ a weak filtration word of length
    n+1, table a frozen filtered map sd_P(Δ^ψ) → X.  Operators act by
    precomposition with the subdivided coface and codegeneracy maps.
    Also returns the identifier → concrete-map dictionary.
    """
    P = X.base
    bound = X.dim_bound if level_bound is None else level_bound
    if bound > X.dim_bound:
        raise BoundTooLow("right adjoint levels exceed the host bound")
    words = {n: [c.word for c in enumerate_chains(P, n + 1)]
             for n in range(bound + 1)}
    levels = []
    tables = {}
    for n in range(bound + 1):
        lvl = set()
        for psi in words[n]:
            rD = sd_p_simplex(P, psi, X.dim_bound)
            for f in filtered_hom(rD.filtered, X):
                key = (psi, f.freeze())
                lvl.add(key)
                tables[key] = f
        levels.append(frozenset(lvl))

    def precompose(key, w, psi2):
        psi = key[0]
        rD = sd_p_simplex(P, psi, X.dim_bound)
        rD2 = sd_p_simplex(P, psi2, X.dim_bound)
        step = sd_p_map(_word_shape_map(P, psi2, psi, w, X.dim_bound), rD2, rD)
        f = filtered_compose(tables[key], step)
        return (psi2, f.freeze())

    face = {}
    deg = {}
    for n in range(1, bound + 1):
        for i in range(n + 1):
            w = tuple(t for t in range(n + 1) if t != i)
            face[(n, i)] = {key: precompose(key, w, key[0][:i] + key[0][i + 1:])
                            for key in levels[n]}
    for n in range(bound):
        for j in range(n + 1):
            w = tuple(range(j + 1)) + tuple(range(j, n + 1))
            deg[(n, j)] = {key: precompose(key, w, key[0][:j + 1] + key[0][j:])
                           for key in levels[n]}
    space = SimplicialSet(bound, tuple(levels), face, deg)
    NP = nerve(P, bound)
    structure = SimplicialMap(space, NP,
                              {n: {key: key[0] for key in levels[n]}
                               for n in range(bound + 1)}, check=False)
    return FilteredSimplicialSet(P, space, structure, check=False), tables


def ex_p(X, level_bound=None):
    return ex_p_with_tables(X, level_bound)[0]


def beta(X, E=None):
    """Unit map X → Ex_P(X): a simplex goes to its classifying map
    precomposed with the last-vertex map of its filtered simplex."""
    if E is None:
        E = ex_p(X)
    comps = {}
    for n in range(E.dim_bound + 1):
        comp = {}
        for x in X.space.levels[n]:
            psi = X.word_of(n, x)
            rD = sd_p_simplex(X.base, psi, X.dim_bound)
            f = filtered_compose(filtered_classifying_map(X, n, x),
                                 last_vertex(rD))
            comp[x] = (psi, f.freeze())
        comps[n] = comp
    sm = SimplicialMap(X.space, E.space, comps, check=False)
    return FilteredMap(X, E, sm)


def transpose_to_ex(g, rX, E):
    """Turn g : sd_P(X) → Y into its adjoint X → Ex_P(Y)."""
    X = rX.original
    comps = {}
    for n in range(X.dim_bound + 1):
        comp = {}
        for x in X.space.levels[n]:
            psi = X.word_of(n, x)
            rD = sd_p_simplex(X.base, psi, X.dim_bound)
            f = filtered_compose(g, sd_p_map(filtered_classifying_map(X, n, x),
                                             rD, rX))
            comp[x] = (psi, f.freeze())
        comps[n] = comp
    sm = SimplicialMap(X.space, E.space, comps, check=False)
    return FilteredMap(X, E, sm, check=False)


def transpose_from_ex(h, rX, Y, ex_tables):
    """Turn h : X → Ex_P(Y) into its adjoint sd_P(X) → Y.

    ``ex_tables`` resolves right-adjoint simplex identifiers back to
    concrete filtered maps.
    """
    X = rX.original
    comps = {}
    for m in range(X.dim_bound + 1):
        comp = {}
        for (u, v) in rX.filtered.space.levels[m]:
            (n, x), chain = rX.sd_space.pre[(m, u)]
            f = ex_tables[h.map.components[n][x]]
            rD = sd_p_simplex(X.base, X.word_of(n, x), X.dim_bound)
            top = tuple(range(n + 1))
            u_local = rD.sd_space.classof(n, top, chain)
            comp[(u, v)] = f.map.components[m][(u_local, v)]
        comps[m] = comp
    sm = SimplicialMap(rX.filtered.space, Y.space, comps, check=False)
    return FilteredMap(rX.filtered, Y, sm, check=False)


def check_sd_ex_adjunction(X, Y):
    """True iff transposition is a bijection between filtered_hom(sd_P X, Y)
    and filtered_hom(X, Ex_P Y) with mutually inverse transposes."""
    rX = sd_p(X)
    E, tables = ex_p_with_tables(Y)
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
        back = transpose_from_ex(h, rX, Y, tables)
        if back.freeze() != g.freeze():
            return False
    for h in right:
        g = transpose_from_ex(h, rX, Y, tables)
        if transpose_to_ex(g, rX, E).freeze() != h.freeze():
            return False
    return True
