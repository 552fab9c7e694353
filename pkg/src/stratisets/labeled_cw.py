"""Label-decorated CW models of the filtered subdivision.

The vertical model of sd_P(X) has one cell per non-degenerate simplex of
sd(X); the cell for a chain of faces carries the filtration type of the
smallest face as its label.  Dropping the filtered shape of the cells
gives a labeled CW-complex, and the two data determine each other
cell-for-cell.  Attaching data is stored as incidence plus explicit
boundary words in dimensions one and two, which is enough for the
subcomplex extractions and the stratified π₀/π₁ computations.
"""

from dataclasses import dataclass
from itertools import combinations

from .engine import SimplicialMap, colimit, ez_decompose, is_isomorphism, skey
from .errors import (BasepointOutsideSubcomplex, ComparisonFailed,
                     LabelingViolation, MalformedDiagram)
from .filtered import FilteredMap, FilteredSimplicialSet, _vertex_word_map
from .poset import nerve, strip_repeats
from .subdivision import (filtered_classifying_map, sd_p, sd_p_map,
                          sd_p_simplex)


def is_subchain(psi, phi):
    return set(psi) <= set(phi)


@dataclass
class PLabeledCW:
    """CW-complex whose cells carry strict-chain labels.

    ``cells`` maps a name to (ball dimension, label); ``incidence`` maps a
    name to the lower cells met by its attaching image.  ``attach`` holds
    boundary words: for a 1-cell the (tail, head) vertex pair, for a
    2-cell the ordered triple of boundary edges, each entry tagged
    ``('e', name)`` or ``('v', name)`` when the edge is collapsed.
    """

    cells: dict
    incidence: dict
    attach: dict
    check: bool = True

    def __post_init__(self):
        if self.check:
            self.validate()

    def __eq__(self, other):
        if not isinstance(other, PLabeledCW):
            return NotImplemented
        return (self.cells == other.cells and self.incidence == other.incidence
                and self.attach == other.attach)

    __hash__ = None

    def validate(self):
        for name, lower in self.incidence.items():
            dim, label = self.cells[name]
            for o in lower:
                odim, olabel = self.cells[o]
                if odim >= dim:
                    raise MalformedDiagram(f"cell {name!r} attaches to a "
                                           "cell of equal or higher dimension")
                if not is_subchain(label, olabel):
                    raise LabelingViolation(
                        f"label of {name!r} is not a subchain of the label "
                        f"of its boundary cell {o!r}")

    def cells_of_dim(self, d):
        return sorted((n for n, (dim, _) in self.cells.items() if dim == d),
                      key=skey)

    def euler_sum(self):
        return sum((-1) ** dim for (dim, _) in self.cells.values())


@dataclass
class VerticalCWData:
    """Cells with filtered dimension (ball dimension, label shape)."""

    base: object
    cells: dict
    incidence: dict
    attach: dict
    source: object = None
    sdp: object = None

    def __eq__(self, other):
        if not isinstance(other, VerticalCWData):
            return NotImplemented
        return (self.cells == other.cells and self.incidence == other.incidence
                and self.attach == other.attach)

    __hash__ = None

    def euler_sum(self):
        return sum((-1) ** dim for (dim, _) in self.cells.values())


def functor_L(v):
    """Forget the filtered cell shapes, keeping dimensions and labels."""
    return PLabeledCW(dict(v.cells), dict(v.incidence), dict(v.attach))


def functor_V(k, base=None):
    """Reassemble vertical data from a labeled complex.

    The labeling condition is what makes the vertical attaching
    decomposition exist, so it is enforced here.
    """
    k.validate()
    return VerticalCWData(base, dict(k.cells), dict(k.incidence),
                          dict(k.attach))


# ---------------------------------------------------------------------------
# vertical models of subdivided simplices and objects


def _strict_subset_chains(n):
    subsets = [frozenset(V) for m in range(n + 1)
               for V in combinations(range(n + 1), m + 1)]
    out = []

    def rec(chain):
        out.append(tuple(chain))
        for T in subsets:
            if chain[-1] < T:
                rec(chain + [T])

    for T in subsets:
        rec([T])
    return out


def vertical_cw_of_sdp_simplex(P, word):
    """One cell per strict chain of faces of the filtered simplex; the
    label is the filtration type of the smallest face."""
    word = tuple(word)
    n = len(word) - 1
    cells = {}
    incidence = {}
    attach = {}
    for chain in _strict_subset_chains(n):
        k = len(chain) - 1
        label = strip_repeats(tuple(word[t] for t in sorted(chain[0])))
        cells[chain] = (k, label)
        faces = [chain[:i] + chain[i + 1:] for i in range(k + 1)] if k else []
        incidence[chain] = frozenset(faces)
        if k == 1:
            attach[chain] = (('v', chain[1:]), ('v', chain[:1]))
        elif k == 2:
            attach[chain] = (('e', chain[:2]), ('e', chain[1:]),
                             ('e', chain[:1] + chain[2:]))
    return VerticalCWData(P, cells, incidence, attach)


def vertical_cw_of_sdp(X, rX=None):
    """Vertical model assembled over the non-degenerate simplices of X:
    one cell per non-degenerate simplex of sd(X)."""
    if rX is None:
        rX = sd_p(X)
    sdX = rX.sd_space
    cells = {}
    incidence = {}
    attach = {}
    for m in range(X.dim_bound + 1):
        for rep in sdX.space.nondegenerate(m):
            name = (m, rep)
            (n, x), chain = sdX.pre[(m, rep)]
            word = X.word_of(n, x)
            label = strip_repeats(tuple(word[t] for t in sorted(chain[0])))
            cells[name] = (m, label)

    def face_cell(m, rep, i):
        e = ez_decompose(sdX.space, m - 1, sdX.space.d(m, i, rep))
        return (e.base_level, e.base), bool(e.word)

    for (m, rep) in cells:
        if m == 0:
            incidence[(m, rep)] = frozenset()
            continue
        faces = [face_cell(m, rep, i) for i in range(m + 1)]
        incidence[(m, rep)] = frozenset(c for c, _ in faces
                                        if c != (m, rep))
        if m == 1:
            incidence[(m, rep)] = frozenset(c for c, _ in faces)
            attach[(m, rep)] = (('v', faces[1][0]), ('v', faces[0][0]))
        elif m == 2:
            def entry(idx):
                c, collapsed = faces[idx]
                return ('v', c) if collapsed else ('e', c)
            attach[(m, rep)] = (entry(2), entry(0), entry(1))
    return VerticalCWData(X.base, cells, incidence, attach, source=X, sdp=rX)


# ---------------------------------------------------------------------------
# canonical triangulation


def triangulate_cells(v):
    """Glue the canonical triangulations of the cells into a filtered
    simplicial set and certify that it matches the filtered subdivision."""
    X = v.source
    rX = v.sdp
    if X is None or rX is None:
        raise MalformedDiagram("vertical data lacks its source object")
    P = X.base
    bound = X.dim_bound
    gens = {n: X.space.nondegenerate(n) for n in range(bound + 1)}
    objects = {}
    arrows = []
    node_word = {}
    for n in range(bound + 1):
        for x in gens[n]:
            node = ('gen', n, x)
            node_word[node] = X.word_of(n, x)
            objects[node] = sd_p_simplex(P, node_word[node],
                                         bound).filtered.space
    for n in range(1, bound + 1):
        for x in gens[n]:
            psi = X.word_of(n, x)
            for i in range(n + 1):
                psi_i = psi[:i] + psi[i + 1:]
                node = ('rel', n, x, i)
                objects[node] = sd_p_simplex(P, psi_i, bound).filtered.space
                coface = tuple(t for t in range(n + 1) if t != i)
                step = sd_p_map(_word_shape_map_local(P, psi_i, psi, coface,
                                                      bound),
                                sd_p_simplex(P, psi_i, bound),
                                sd_p_simplex(P, psi, bound))
                arrows.append((node, ('gen', n, x), step.map))
                e = ez_decompose(X.space, n - 1, X.space.d(n, i, x))
                psi_b = X.word_of(e.base_level, e.base)
                u = _surjection(e.word, e.base_level)
                step2 = sd_p_map(_word_shape_map_local(P, psi_i, psi_b, u,
                                                       bound),
                                 sd_p_simplex(P, psi_i, bound),
                                 sd_p_simplex(P, psi_b, bound))
                arrows.append((node, ('gen', e.base_level, e.base),
                               step2.map))
    space, legs = colimit(objects, arrows)
    pre = {}
    for node in sorted(objects, key=skey):
        if node[0] != 'gen':
            continue
        leg = legs[node]
        for m in range(bound + 1):
            for e in sorted(objects[node].levels[m], key=skey):
                key = (m, leg.components[m][e])
                cand = (node, e)
                if key not in pre or skey(cand) < skey(pre[key]):
                    pre[key] = cand
    NP = nerve(P, bound)
    target_maps = {}
    for n in range(bound + 1):
        for x in gens[n]:
            target_maps[(n, x)] = sd_p_map(
                filtered_classifying_map(X, n, x),
                sd_p_simplex(P, X.word_of(n, x), bound), rX)
    comps = {}
    struct = {}
    for m in range(bound + 1):
        comp = {}
        st = {}
        for rep in space.levels[m]:
            (_, n, x), e = pre[(m, rep)]
            comp[rep] = target_maps[(n, x)].map.components[m][e]
            rD = sd_p_simplex(P, X.word_of(n, x), bound)
            st[rep] = rD.filtered.word_of(m, e)
        comps[m] = comp
        struct[m] = st
    structure = SimplicialMap(space, NP, struct, check=False)
    FS = FilteredSimplicialSet(P, space, structure, check=False)
    witness = SimplicialMap(space, rX.filtered.space, comps)
    if not is_isomorphism(witness):
        bad = next(n for n in range(bound + 1)
                   if len(set(comps[n].values())) != len(comps[n])
                   or set(comps[n].values()) != set(rX.filtered.space.levels[n]))
        raise ComparisonFailed("cell triangulation does not match the "
                               "filtered subdivision", level=bad)
    return FS, FilteredMap(FS, rX.filtered, witness)


def _surjection(word, r):
    u = tuple(range(r + 1))
    for j in reversed(word):
        u = u[:j + 1] + u[j:]
    return u


def _word_shape_map_local(P, w_src, w_tgt, w, bound):
    from .filtered import filtered_simplex
    src = filtered_simplex(P, w_src, bound)
    tgt = filtered_simplex(P, w_tgt, bound)
    sm = _vertex_word_map(len(w_src) - 1, len(w_tgt) - 1, w, bound)
    return FilteredMap(src, tgt, sm, check=False)


# ---------------------------------------------------------------------------
# labeled subcomplexes


def subcomplex_phi(k, phi):
    """Full sub-CW on cells whose label contains φ, relabeled φ."""
    phi = tuple(phi)
    keep = {name for name, (_, label) in k.cells.items()
            if is_subchain(phi, label)}
    cells = {name: (k.cells[name][0], phi) for name in keep}
    incidence = {name: frozenset(o for o in k.incidence[name] if o in keep)
                 for name in keep}
    attach = {name: k.attach[name] for name in keep if name in k.attach}
    return PLabeledCW(cells, incidence, attach)


def truncate_label(label, p):
    """Initial segment of a strict chain ending at the given element."""
    i = label.index(p)
    return label[:i + 1]


def subcomplex_leq_p(k, p):
    """Cells whose label mentions ``p``, relabeled by truncation at it."""
    keep = {name for name, (_, label) in k.cells.items() if p in label}
    cells = {name: (k.cells[name][0], truncate_label(k.cells[name][1], p))
             for name in keep}
    incidence = {name: frozenset(o for o in k.incidence[name] if o in keep)
                 for name in keep}
    attach = {name: k.attach[name] for name in keep if name in k.attach}
    return PLabeledCW(cells, incidence, attach)


# ---------------------------------------------------------------------------
# stratified homotopy invariants


@dataclass
class GroupPresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        declared = set(self.generators)
        for rel in self.relators:
            for (g, _) in rel:
                if g not in declared:
                    raise MalformedDiagram(f"relator mentions unknown "
                                           f"generator {g!r}")


def _components(k):
    verts = k.cells_of_dim(0)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in k.cells_of_dim(1):
        (_, tail), (_, head) = k.attach[e]
        ra, rb = find(tail), find(head)
        if ra != rb:
            parent[ra] = rb
    comps = {}
    for v in verts:
        comps.setdefault(find(v), []).append(v)
    return {min(members, key=skey): sorted(members, key=skey)
            for members in comps.values()}


def stratified_pi0(X, phi):
    """Component count of the φ-labeled subcomplex of the CW model,
    with canonical representatives."""
    L = functor_L(vertical_cw_of_sdp(X))
    sub = subcomplex_phi(L, phi)
    comps = _components(sub)
    return len(comps), sorted(comps, key=skey)


def stratified_pi1_presentation(X, phi, basepoint_cell):
    """Edge-path presentation of π₁ of the φ-subcomplex at a vertex."""
    L = functor_L(vertical_cw_of_sdp(X))
    sub = subcomplex_phi(L, phi)
    verts = set(sub.cells_of_dim(0))
    if basepoint_cell not in verts:
        raise BasepointOutsideSubcomplex(
            f"{basepoint_cell!r} is not a vertex of the subcomplex")
    edges = sub.cells_of_dim(1)
    adj = {v: [] for v in verts}
    for e in edges:
        (_, tail), (_, head) = sub.attach[e]
        adj[tail].append((e, head))
        adj[head].append((e, tail))
    # spanning tree of the basepoint's component
    tree = set()
    seen = {basepoint_cell}
    frontier = [basepoint_cell]
    while frontier:
        v = frontier.pop(0)
        for (e, w) in sorted(adj[v], key=skey):
            if w not in seen:
                seen.add(w)
                tree.add(e)
                frontier.append(w)
    in_comp = [e for e in edges
               if sub.attach[e][0][1] in seen and sub.attach[e][1][1] in seen]
    generators = tuple(in_comp)
    relators = [((e, 1),) for e in in_comp if e in tree]
    comp_edges = set(in_comp)
    for t in sub.cells_of_dim(2):
        entries = sub.attach[t]
        if any(tag == 'e' and name not in comp_edges
               for (tag, name) in entries):
            continue
        word = tuple((name, sign)
                     for (tag, name), sign in zip(entries, (1, 1, -1))
                     if tag == 'e')
        if word:
            relators.append(word)
    return GroupPresentation(generators, tuple(relators))
