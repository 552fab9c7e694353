"""Diagrams of simplicial sets indexed by strict chains of the poset.

The indexing category has the strict chains as objects and subchain
inclusions as arrows; diagrams are contravariant.  This module builds
the mapping-space diagram D, its left adjoint C, the subdivided diagram
Sd_P with its right adjoint exp_P, and the executable comparisons
between C ∘ Sd_P and the filtered subdivision.
"""

from dataclasses import dataclass

from .engine import (SimplicialMap, SimplicialSet, apply_vertex_word, colimit,
                     compose, hom_enumerate, inclusion_map, is_isomorphism,
                     product, skey, standard_simplex, sub_simplicial_set)
from .errors import (BoundTooLow, ComparisonFailed, InstanceTooLarge,
                     MalformedDiagram)
from .filtered import (FilteredMap, FilteredSimplicialSet, _vertex_word_map,
                       filtered_hom, filtered_simplex,
                       map_space_with_tables, phi_part)
from .poset import enumerate_chains, nerve
from .subdivision import (sd_map, sd_nerve, sd_p, sd_p_nerve,
                          sd_p_simplex, _poset_key)


def strict_chains(P, max_length=None):
    """All strict chains of P as word tuples, shortest first."""
    out = []
    L = 1
    while True:
        chains = enumerate_chains(P, L, strict=True)
        if not chains or (max_length is not None and L > max_length):
            break
        out.extend(c.word for c in chains)
        L += 1
    return out


def is_subchain(psi, phi):
    return set(psi) <= set(phi)


@dataclass
class RPCategory:
    """Strict chains with subchain inclusions as the arrows."""

    base: object
    objects: tuple

    def arrows(self):
        return [(phi, psi) for phi in self.objects for psi in self.objects
                if is_subchain(psi, phi)]


@dataclass
class PairCategory:
    """Pairs (φ, ψ) of strict chains with ψ a subchain of φ."""

    base: object
    objects: tuple

    def __post_init__(self):
        for (phi, psi) in self.objects:
            if not is_subchain(psi, phi):
                raise MalformedDiagram(f"pair ({phi!r}, {psi!r}) violates "
                                       "the subchain condition")


def rp_category(P, max_length=None):
    return RPCategory(P, tuple(strict_chains(P, max_length)))


def pair_category(P, max_length=None):
    chains = strict_chains(P, max_length)
    return PairCategory(P, tuple((phi, psi) for phi in chains
                                 for psi in chains if is_subchain(psi, phi)))


@dataclass
class Diagram:
    """Contravariant finite diagram on the strict chains of ``base``.

    ``restrictions[(phi, psi)]`` maps values[phi] → values[psi] for every
    subchain pair; functoriality is checked at construction.
    """

    base: object
    level_bound: int
    values: dict
    restrictions: dict
    check: bool = True

    def __post_init__(self):
        if self.check:
            self.validate()

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.values == other.values
                and {k: m.components for k, m in self.restrictions.items()}
                == {k: m.components for k, m in other.restrictions.items()})

    __hash__ = None

    def objects(self):
        return sorted(self.values, key=skey)

    def restrict(self, phi, psi):
        return self.restrictions[(phi, psi)]

    def total_simplices(self):
        return sum(len(l) for V in self.values.values() for l in V.levels)

    def validate(self):
        for phi in self.values:
            ident = self.restrictions.get((phi, phi))
            if ident is None or any(ident.components[n][x] != x
                                    for n in range(self.level_bound + 1)
                                    for x in self.values[phi].levels[n]):
                raise MalformedDiagram(f"identity restriction at {phi!r}")
        for (phi, psi), r in self.restrictions.items():
            if r.source != self.values[phi] or r.target != self.values[psi]:
                raise MalformedDiagram(f"restriction ({phi!r}, {psi!r}) is "
                                       "not a map of the stated values")
            r.validate()
        for phi in self.values:
            for psi in self.values:
                if not is_subchain(psi, phi):
                    continue
                for chi in self.values:
                    if not is_subchain(chi, psi):
                        continue
                    lhs = compose(self.restrictions[(psi, chi)],
                                  self.restrictions[(phi, psi)])
                    if lhs.components != self.restrictions[(phi, chi)].components:
                        raise MalformedDiagram(
                            f"functoriality fails on {phi!r} ⊇ {psi!r} ⊇ {chi!r}")


# ---------------------------------------------------------------------------
# the mapping-space diagram D


def _position_word(psi, phi):
    """Vertex word of the subchain inclusion Δ^psi → Δ^phi."""
    pos = {p: t for t, p in enumerate(phi)}
    return tuple(pos[p] for p in psi)


def functor_D_with_tables(X, level_bound):
    chains = strict_chains(X.base)
    if level_bound > X.dim_bound:
        raise BoundTooLow("mapping-space levels exceed the host bound")
    values = {}
    tables = {}
    tensors = {}
    for phi in chains:
        space, tab, tens = map_space_with_tables(phi, X, level_bound)
        values[phi] = space
        tables[phi] = tab
        tensors[phi] = tens
    restrictions = {}
    for phi in chains:
        for psi in chains:
            if not is_subchain(psi, phi):
                continue
            w = _position_word(psi, phi)
            comps = {}
            for n in range(level_bound + 1):
                comp = {}
                for key in values[phi].levels[n]:
                    table = tables[phi][(n, key)]
                    out = []
                    for l in range(X.dim_bound + 1):
                        pairs = [((u, v), table[l][(u, tuple(w[t] for t in v))])
                                 for (u, v) in tensors[psi][n].space.levels[l]]
                        out.append(tuple(sorted(pairs,
                                                key=lambda p: skey(p[0]))))
                    comp[key] = tuple(out)
                comps[n] = comp
            restrictions[(phi, psi)] = SimplicialMap(values[phi], values[psi],
                                                     comps, check=False)
    D = Diagram(X.base, level_bound, values, restrictions)
    return D, tables, tensors


def functor_D(X, level_bound):
    return functor_D_with_tables(X, level_bound)[0]


# ---------------------------------------------------------------------------
# the subdivided diagram Sd_P


_sdpn_part_cache = {}


def sd_p_nerve_part(P, phi, bound):
    """Per-level identifier sets of the image of the φ-part of the
    decorated subdivided nerve inside sd(nerve(P))."""
    key = (_poset_key(P), tuple(phi), bound)
    if key not in _sdpn_part_cache:
        spn = sd_p_nerve(P, bound)
        FS = FilteredSimplicialSet(P, spn.space, spn.to_nerve, check=False)
        part, _ = phi_part(FS, phi)
        _sdpn_part_cache[key] = tuple(
            frozenset(spn.to_sd_nerve.components[n][c] for c in part.space.levels[n])
            for n in range(bound + 1))
    return _sdpn_part_cache[key]


def _sd_p_diagram(X, rX):
    """Diagram of subcomplexes of sd(X) cut out by the nerve parts, plus
    the structure map of the subdivision."""
    P = X.base
    bound = X.dim_bound
    f = sd_map(X.structure, rX.sd_space, sd_nerve(P, bound))
    values = {}
    for phi in strict_chains(P):
        allowed = sd_p_nerve_part(P, phi, bound)
        keep = [frozenset(u for u in rX.sd_space.space.levels[n]
                          if f.components[n][u] in allowed[n])
                for n in range(bound + 1)]
        marked = [(n, u) for n in range(bound + 1) for u in keep[n]]
        values[phi] = sub_simplicial_set(rX.sd_space.space, marked)[0]
    restrictions = {}
    for phi in values:
        for psi in values:
            if is_subchain(psi, phi):
                restrictions[(phi, psi)] = inclusion_map(values[phi],
                                                         values[psi])
    return Diagram(P, bound, values, restrictions, check=False), f


def functor_Sd_P(X, rX=None):
    if rX is None:
        rX = sd_p(X)
    return _sd_p_diagram(X, rX)[0]


# ---------------------------------------------------------------------------
# the realization C


@dataclass
class CResult:
    filtered: FilteredSimplicialSet
    legs: dict
    pre: dict


def _relabel(space):
    """Copy of ``space`` with per-level integer identifiers in canonical
    order.  Keeps colimits over mapping-space tensors cheap: the original
    identifiers are large frozen tables whose repr-based sorting dominates
    otherwise."""
    fwd = [{x: k for k, x in enumerate(space.simplices(n))}
           for n in range(space.dim_bound + 1)]
    levels = tuple(frozenset(d.values()) for d in fwd)
    face = {(n, i): {fwd[n][x]: fwd[n - 1][y] for x, y in t.items()}
            for (n, i), t in space.face.items()}
    deg = {(n, j): {fwd[n][x]: fwd[n + 1][y] for x, y in t.items()}
           for (n, j), t in space.deg.items()}
    return SimplicialSet(space.dim_bound, levels, face, deg,
                         check=False), fwd


def functor_C(F):
    """Colimit of (φ, ψ) ↦ F(φ) ⊗ Δ^ψ over the pair category, filtered
    through the Δ^ψ coordinates."""
    P = F.base
    bound = F.level_bound
    chains = [phi for phi in strict_chains(P)
              if phi in F.values and any(F.values[phi].levels)]
    values = {}
    fwd = {}
    inv = {}
    for phi in chains:
        values[phi], fwd[phi] = _relabel(F.values[phi])
        inv[phi] = [{k: x for x, k in d.items()} for d in fwd[phi]]
    nodes = [(phi, psi) for phi in chains for psi in strict_chains(P)
             if is_subchain(psi, phi)]
    objects = {}
    projections = {}
    for node in nodes:
        phi, psi = node
        Pr, pr1, pr2 = product(values[phi], standard_simplex(len(psi) - 1,
                                                             bound))
        objects[node] = Pr
        projections[node] = (pr1, pr2)
    arrows = []
    for (phi, psi) in nodes:
        for q in range(len(phi)):
            phi2 = phi[:q] + phi[q + 1:]
            if phi2 and (phi2, psi) in objects:
                r = F.restrict(phi, phi2)
                comps = {n: {(a, v):
                             (fwd[phi2][n][r.components[n][inv[phi][n][a]]],
                              v)
                             for (a, v) in objects[(phi, psi)].levels[n]}
                         for n in range(bound + 1)}
                arrows.append(((phi, psi), (phi2, psi),
                               SimplicialMap(objects[(phi, psi)],
                                             objects[(phi2, psi)], comps,
                                             check=False)))
        for p in phi:
            if p in psi:
                continue
            psi2 = tuple(sorted(set(psi) | {p}, key=phi.index))
            if (phi, psi2) not in objects:
                continue
            w = _position_word(psi, psi2)
            comps = {n: {(a, v): (a, tuple(w[t] for t in v))
                         for (a, v) in objects[(phi, psi)].levels[n]}
                     for n in range(bound + 1)}
            arrows.append(((phi, psi), (phi, psi2),
                           SimplicialMap(objects[(phi, psi)],
                                         objects[(phi, psi2)], comps,
                                         check=False)))
    if not objects:
        raise MalformedDiagram("realization of an empty diagram")
    space, legsC = colimit(objects, arrows)
    legs = {}
    for node, obj in objects.items():
        phi, _ = node
        comps = {n: {(inv[phi][n][a], v): legsC[node].components[n][(a, v)]
                     for (a, v) in obj.levels[n]}
                 for n in range(bound + 1)}
        legs[node] = SimplicialMap(obj, space, comps, check=False)
    pre = {}
    for node in sorted(objects, key=skey):
        phi, _ = node
        leg = legsC[node]
        for n in range(bound + 1):
            for e in sorted(objects[node].levels[n], key=skey):
                key = (n, leg.components[n][e])
                cand = (node, e)
                if key not in pre or skey(cand) < skey(pre[key]):
                    pre[key] = cand
    pre = {(n, rep): (node, (inv[node[0]][n][a], v))
           for (n, rep), (node, (a, v)) in pre.items()}
    NP = nerve(P, bound)
    comps = {}
    for n in range(bound + 1):
        comp = {}
        for rep in space.levels[n]:
            (phi, psi), (a, v) = pre[(n, rep)]
            comp[rep] = tuple(psi[t] for t in v)
        comps[n] = comp
    structure = SimplicialMap(space, NP, comps, check=False)
    FS = FilteredSimplicialSet(P, space, structure, check=False)
    return CResult(FS, legs, pre)


def functor_C_filtered(F):
    return functor_C(F).filtered


# ---------------------------------------------------------------------------
# comparison maps


def _decorated_chain(sdN, m, w, psi, v):
    """Decorated-nerve simplex for a subdivided-nerve class ``w`` and a
    vertex word ``v`` into the chain ``psi``."""
    (k, top), subsets = sdN.pre[(m, w)]
    return tuple((tuple(top[i] for i in sorted(T)), psi[t])
                 for T, t in zip(subsets, v))


def check_prop_2_12(X, rX=None):
    """Builds the canonical map C(Sd_P(X)) → sd_P(X) and certifies that
    it is an isomorphism of filtered simplicial sets."""
    if rX is None:
        rX = sd_p(X)
    P = X.base
    bound = X.dim_bound
    F, f = _sd_p_diagram(X, rX)
    C = functor_C(F)
    sdN = sd_nerve(P, bound)
    comps = {}
    for n in range(bound + 1):
        comp = {}
        for rep in C.filtered.space.levels[n]:
            (phi, psi), (a, v) = C.pre[(n, rep)]
            w = f.components[n][a]
            comp[rep] = (a, _decorated_chain(sdN, n, w, psi, v))
        comps[n] = comp
    for n in range(bound + 1):
        if set(comps[n].values()) - set(rX.filtered.space.levels[n]):
            raise ComparisonFailed("comparison map leaves the filtered "
                                   "subdivision", level=n)
    witness = SimplicialMap(C.filtered.space, rX.filtered.space, comps)
    if not is_isomorphism(witness):
        bad = next(n for n in range(bound + 1)
                   if len(set(comps[n].values())) !=
                   len(rX.filtered.space.levels[n])
                   or len(comps[n]) != len(rX.filtered.space.levels[n]))
        raise ComparisonFailed("comparison map is not bijective", level=bad)
    return FilteredMap(C.filtered, rX.filtered, witness)


def check_lemma_2_15(X, phi, rX=None):
    """Certifies the isomorphism Sd_P(X)(φ) ⊗ Δ^φ ≅ (sd_P X)^φ."""
    from .filtered import tensor
    if rX is None:
        rX = sd_p(X)
    phi = tuple(phi)
    P = X.base
    bound = X.dim_bound
    F, f = _sd_p_diagram(X, rX)
    sdN = sd_nerve(P, bound)
    lhs = tensor(F.values[phi], filtered_simplex(P, phi, bound))
    rhs, rhs_incl = phi_part(rX.filtered, phi)
    comps = {}
    for n in range(bound + 1):
        comp = {}
        for (a, v) in lhs.space.levels[n]:
            w = f.components[n][a]
            comp[(a, v)] = (a, _decorated_chain(sdN, n, w, phi, v))
        comps[n] = comp
    for n in range(bound + 1):
        if set(comps[n].values()) != set(rhs.space.levels[n]) or \
           len(comps[n]) != len(set(comps[n].values())):
            raise ComparisonFailed("pairing is not a bijection onto the "
                                   "part", level=n)
    witness = SimplicialMap(lhs.space, rhs.space, comps)
    return FilteredMap(lhs, rhs, witness)


# ---------------------------------------------------------------------------
# natural transformations and the right adjoint exp_P


def diagram_hom(F, G, ceiling=200000):
    """All natural transformations F → G, as dicts object → SimplicialMap."""
    if F.total_simplices() * max(G.total_simplices(), 1) > ceiling:
        raise InstanceTooLarge("natural-transformation search space exceeds "
                               "the ceiling")
    objs = sorted(F.values, key=lambda c: (-len(c), skey(c)))
    results = []
    chosen = {}

    def backtrack(k):
        if k == len(objs):
            results.append(dict(chosen))
            return
        phi = objs[k]
        for cand in hom_enumerate(F.values[phi], G.values[phi]):
            ok = True
            for psi in objs[:k]:
                if is_subchain(psi, phi):
                    lhs = compose(chosen[psi], F.restrict(phi, psi))
                    rhs = compose(G.restrict(phi, psi), cand)
                elif is_subchain(phi, psi):
                    lhs = compose(cand, F.restrict(psi, phi))
                    rhs = compose(G.restrict(psi, phi), chosen[psi])
                else:
                    continue
                if lhs.components != rhs.components:
                    ok = False
                    break
            if ok:
                chosen[phi] = cand
                backtrack(k + 1)
                del chosen[phi]

    backtrack(0)
    return results


def freeze_nat(eta):
    return tuple(sorted(((phi, m.freeze()) for phi, m in eta.items()),
                        key=lambda p: skey(p[0])))


_sdp_diagram_cache = {}


def sd_p_simplex_diagram(P, word, bound):
    key = (_poset_key(P), tuple(word), bound)
    if key not in _sdp_diagram_cache:
        rD = sd_p_simplex(P, word, bound)
        _sdp_diagram_cache[key] = _sd_p_diagram(rD.original, rD)[0]
    return _sdp_diagram_cache[key]


def functor_exp_P(F, level_bound=None, ceiling=200000):
    """Right adjoint to the subdivided diagram: level over each weak word
    ψ is the set of natural transformations Sd_P(Δ^ψ) → F."""
    P = F.base
    bound = F.level_bound if level_bound is None else level_bound
    levels = []
    tables = {}
    for n in range(bound + 1):
        lvl = set()
        for c in enumerate_chains(P, n + 1):
            psi = c.word
            Dpsi = sd_p_simplex_diagram(P, psi, F.level_bound)
            for eta in diagram_hom(Dpsi, F, ceiling):
                key = (psi, freeze_nat(eta))
                lvl.add(key)
                tables[key] = eta
        levels.append(frozenset(lvl))

    def precompose(key, w, psi2):
        psi = key[0]
        rD = sd_p_simplex(P, psi, F.level_bound)
        rD2 = sd_p_simplex(P, psi2, F.level_bound)
        m = sd_map(_vertex_word_map(len(psi2) - 1, len(psi) - 1, w,
                                    F.level_bound),
                   rD2.sd_space, rD.sd_space)
        Dpsi2 = sd_p_simplex_diagram(P, psi2, F.level_bound)
        eta = tables[key]
        eta2 = {}
        for phi in Dpsi2.values:
            comps = {l: {u: eta[phi].components[l][m.components[l][u]]
                         for u in Dpsi2.values[phi].levels[l]}
                     for l in range(F.level_bound + 1)}
            eta2[phi] = SimplicialMap(Dpsi2.values[phi], F.values[phi],
                                      comps, check=False)
        return (psi2, freeze_nat(eta2))

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


def functor_exp_P_filtered(F, level_bound=None, ceiling=200000):
    return functor_exp_P(F, level_bound, ceiling)[0]


# ---------------------------------------------------------------------------
# adjunction checks


def check_sdp_exp_adjunction(X, F, ceiling=200000, rX=None, DX=None,
                             ET=None):
    """Transposition bijection between Hom(Sd_P X, F) in diagrams and
    filtered maps X → exp_P(F).

    ``rX``, ``DX``, ``ET`` accept precomputed subdivision, subdivision
    diagram, and ``functor_exp_P(F, X.dim_bound)`` so suites checking many
    pairs can share the per-object work."""
    from .subdivision import filtered_classifying_map
    if rX is None:
        rX = sd_p(X)
    if DX is None:
        DX, _ = _sd_p_diagram(X, rX)
    if ET is None:
        ET = functor_exp_P(F, X.dim_bound, ceiling)
    E, tables = ET
    left = diagram_hom(DX, F, ceiling)
    right = filtered_hom(X, E)

    def to_right(eta):
        comps = {}
        for n in range(X.dim_bound + 1):
            comp = {}
            for x in X.space.levels[n]:
                psi = X.word_of(n, x)
                rD = sd_p_simplex(X.base, psi, X.dim_bound)
                Dpsi = sd_p_simplex_diagram(X.base, psi, X.dim_bound)
                m = sd_map(filtered_classifying_map(X, n, x).map,
                           rD.sd_space, rX.sd_space)
                eta_x = {}
                for phi in Dpsi.values:
                    cm = {l: {u: eta[phi].components[l][m.components[l][u]]
                              for u in Dpsi.values[phi].levels[l]}
                          for l in range(X.dim_bound + 1)}
                    eta_x[phi] = SimplicialMap(Dpsi.values[phi],
                                               F.values[phi], cm, check=False)
                comp[x] = (psi, freeze_nat(eta_x))
            comps[n] = comp
        sm = SimplicialMap(X.space, E.space, comps, check=False)
        return FilteredMap(X, E, sm, check=False)

    def to_left(h):
        eta = {}
        for phi in DX.values:
            cm = {}
            for l in range(X.dim_bound + 1):
                lvl = {}
                for u in DX.values[phi].levels[l]:
                    (n, x), chain = rX.sd_space.pre[(l, u)]
                    eta_x = tables[h.map.components[n][x]]
                    rD = sd_p_simplex(X.base, X.word_of(n, x), X.dim_bound)
                    u_local = rD.sd_space.classof(n, tuple(range(n + 1)), chain)
                    lvl[u] = eta_x[phi].components[l][u_local]
                cm[l] = lvl
            eta[phi] = SimplicialMap(DX.values[phi], F.values[phi], cm,
                                     check=False)
        return eta

    if len(left) != len(right):
        return False
    right_frozen = {h.freeze() for h in right}
    seen = set()
    for eta in left:
        h = to_right(eta)
        fz = h.freeze()
        if fz not in right_frozen or fz in seen:
            return False
        seen.add(fz)
        if freeze_nat(to_left(h)) != freeze_nat(eta):
            return False
    for h in right:
        if to_right(to_left(h)).freeze() != h.freeze():
            return False
    return True


def check_C_D_adjunction(F, X, ceiling=200000, C=None, DT=None):
    """Transposition bijection between filtered maps C(F) → X and natural
    transformations F → D(X).

    Requires the diagram's values and the target to share their bound, so
    both transposes are total.  ``C`` and ``DT`` accept precomputed
    ``functor_C(F)`` and ``functor_D_with_tables(X, F.level_bound)``.
    """
    if F.level_bound != X.dim_bound:
        raise BoundTooLow("realization and target must share their bound")
    if C is None:
        C = functor_C(F)
    if DT is None:
        DT = functor_D_with_tables(X, F.level_bound)
    D, dtables, dtensors = DT
    left = filtered_hom(C.filtered, X)
    right = diagram_hom(F, D, ceiling)

    def to_left(eta):
        comps = {}
        for n in range(X.dim_bound + 1):
            comp = {}
            for rep in C.filtered.space.levels[n]:
                (phi, psi), (a, v) = C.pre[(n, rep)]
                key = eta[phi].components[n][a]
                table = dtables[phi][(n, key)]
                w = _position_word(psi, phi)
                comp[rep] = table[n][(tuple(range(n + 1)),
                                      tuple(w[t] for t in v))]
            comps[n] = comp
        sm = SimplicialMap(C.filtered.space, X.space, comps, check=False)
        return FilteredMap(C.filtered, X, sm, check=False)

    def to_right(g):
        eta = {}
        for phi in F.values:
            if not any(F.values[phi].levels):
                eta[phi] = SimplicialMap(F.values[phi], D.values[phi],
                                         {n: {} for n in
                                          range(F.level_bound + 1)},
                                         check=False)
                continue
            leg = C.legs[(phi, phi)]
            cm = {}
            for n in range(F.level_bound + 1):
                lvl = {}
                for a in F.values[phi].levels[n]:
                    out = []
                    for l in range(X.dim_bound + 1):
                        pairs = []
                        for (u, v) in dtensors[phi][n].space.levels[l]:
                            b = apply_vertex_word(F.values[phi], n, a, u)
                            rep = leg.components[l][(b, v)]
                            pairs.append(((u, v), g.map.components[l][rep]))
                        out.append(tuple(sorted(pairs,
                                                key=lambda p: skey(p[0]))))
                    lvl[a] = tuple(out)
                cm[n] = lvl
            eta[phi] = SimplicialMap(F.values[phi], D.values[phi], cm,
                                     check=False)
        return eta

    if len(left) != len(right):
        return False
    left_frozen = {g.freeze() for g in left}
    seen = set()
    for eta in right:
        g = to_left(eta)
        fz = g.freeze()
        if fz not in left_frozen or fz in seen:
            return False
        seen.add(fz)
        if freeze_nat(to_right(g)) != freeze_nat(eta):
            return False
    for g in left:
        if to_left(to_right(g)).freeze() != g.freeze():
            return False
    return True
