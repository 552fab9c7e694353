"""Filtered simplicial sets over the nerve of a poset.

A filtered simplicial set is a simplicial set with a structure map to
nerve(P).  Filtration words are weakly increasing tuples of poset
elements.  This module also builds the filtered standard shapes, the
parts generated by simplices of a fixed strict type, and generalized
horns together with replayable anodyne certificates.
"""

from dataclasses import dataclass
from itertools import combinations

from .engine import (SimplicialSet, SimplicialMap, compose,
                     hom_enumerate, product, skey, standard_simplex,
                     sub_simplicial_set)
from .errors import (BadIndexSet, BoundTooLow, HypothesisFails,
                     MalformedDiagram, NotMonotone)
from .poset import Poset, is_weak_chain, nerve, strip_repeats


@dataclass
class FilteredSimplicialSet:
    base: Poset
    space: SimplicialSet
    structure: SimplicialMap
    check: bool = True

    def __post_init__(self):
        if self.check:
            expected = nerve(self.base, self.space.dim_bound)
            if self.structure.target != expected:
                raise MalformedDiagram("structure map does not land in the "
                                       "nerve of the base poset")
            if self.structure.source != self.space:
                raise MalformedDiagram("structure map source mismatch")
            self.structure.validate()

    def __eq__(self, other):
        if not isinstance(other, FilteredSimplicialSet):
            return NotImplemented
        return (self.base == other.base and self.space == other.space
                and self.structure == other.structure)

    __hash__ = None

    @property
    def dim_bound(self):
        return self.space.dim_bound

    def word_of(self, n, x):
        """Filtration word of a simplex (its image in the nerve)."""
        return self.structure.components[n][x]


@dataclass
class FilteredMap:
    """Simplicial map commuting with the structure maps."""

    source: FilteredSimplicialSet
    target: FilteredSimplicialSet
    map: SimplicialMap
    check: bool = True

    def __post_init__(self):
        if self.check:
            self.map.validate()
            self.validate_filtered()

    def __eq__(self, other):
        if not isinstance(other, FilteredMap):
            return NotImplemented
        return self.map == other.map

    __hash__ = None

    def __call__(self, n, x):
        return self.map.components[n][x]

    def validate_filtered(self):
        for n in range(self.source.dim_bound + 1):
            for x in self.source.space.levels[n]:
                if self.source.word_of(n, x) != \
                   self.target.word_of(n, self.map.components[n][x]):
                    raise MalformedDiagram(f"map moves a simplex across "
                                           f"strata at level {n}")

    def freeze(self):
        return self.map.freeze()


def filtered_compose(g, f):
    return FilteredMap(f.source, g.target, compose(g.map, f.map), check=False)


def filtered_identity(X):
    from .engine import identity_map
    return FilteredMap(X, X, identity_map(X.space), check=False)


def _word_structure(space, word, dim_bound):
    """Structure map for a word shape: a simplex is itself a monotone
    vertex word, sent to the corresponding word of filtration letters."""
    comps = {m: {w: tuple(word[v] for v in w) for w in space.levels[m]}
             for m in range(dim_bound + 1)}
    return comps


def filtered_shape(P, word, space, dim_bound):
    N = nerve(P, dim_bound)
    comps = _word_structure(space, word, dim_bound)
    return FilteredSimplicialSet(P, space, SimplicialMap(space, N, comps,
                                                         check=False))


def _check_word(P, word):
    if not word:
        raise NotMonotone("empty filtration word")
    if not is_weak_chain(P, word):
        raise NotMonotone(f"{word!r} is not weakly increasing in the poset")


def filtered_simplex(P, word, dim_bound=None):
    word = tuple(word)
    _check_word(P, word)
    n = len(word) - 1
    N = n if dim_bound is None else dim_bound
    return filtered_shape(P, word, standard_simplex(n, N), N)


def filtered_boundary(P, word, dim_bound=None):
    from .engine import boundary
    word = tuple(word)
    _check_word(P, word)
    n = len(word) - 1
    N = n if dim_bound is None else dim_bound
    return filtered_shape(P, word, boundary(n, N), N)


def filtered_horn(P, word, k, dim_bound=None):
    from .engine import horn
    word = tuple(word)
    _check_word(P, word)
    n = len(word) - 1
    N = n if dim_bound is None else dim_bound
    return filtered_shape(P, word, horn(n, k, N), N)


def filtered_nerve(P, dim_bound):
    """nerve(P) filtered by its identity structure map."""
    N = nerve(P, dim_bound)
    from .engine import identity_map
    return FilteredSimplicialSet(P, N, identity_map(N), check=False)


def simplex_type(X, n, x):
    """Strict chain underlying the filtration word of a simplex."""
    return strip_repeats(X.word_of(n, x))


def tensor(K, X):
    """``K ⊗ X``: product space, filtered through the second factor."""
    Pr, _, pr2 = product(K, X.space)
    structure = compose(X.structure, pr2)
    return FilteredSimplicialSet(X.base, Pr, structure, check=False)


def filtered_sub(X, marked):
    """Smallest filtered subobject containing the marked simplices."""
    sub, incl = sub_simplicial_set(X.space, marked)
    comps = {n: {x: X.word_of(n, x) for x in sub.levels[n]}
             for n in range(X.dim_bound + 1)}
    structure = SimplicialMap(sub, X.structure.target, comps, check=False)
    FS = FilteredSimplicialSet(X.base, sub, structure, check=False)
    return FS, FilteredMap(FS, X, SimplicialMap(sub, X.space, incl.components,
                                                check=False), check=False)


def phi_part(X, phi):
    """Subobject generated by the simplices of type exactly ``phi``."""
    phi = tuple(phi)
    marked = [(n, x) for n in range(X.dim_bound + 1)
              for x in X.space.levels[n] if simplex_type(X, n, x) == phi]
    return filtered_sub(X, marked)


def filtered_raise_bound(X, new_bound):
    """Extend a filtered simplicial set with synthesized degenerate levels."""
    from .engine import raise_bound
    if new_bound == X.dim_bound:
        return X
    space = raise_bound(X.space, new_bound)
    NP = nerve(X.base, new_bound)
    comps = {n: dict(X.structure.components[n])
             for n in range(X.dim_bound + 1)}
    for n in range(X.dim_bound + 1, new_bound + 1):
        comp = {}
        for x in space.levels[n]:
            _, w, (r, b) = x
            word = X.word_of(r, b)
            u = tuple(range(r + 1))
            for j in reversed(w):
                u = u[:j + 1] + u[j:]
            comp[x] = tuple(word[t] for t in u)
        comps[n] = comp
    structure = SimplicialMap(space, NP, comps, check=False)
    return FilteredSimplicialSet(X.base, space, structure, check=False)


def filtered_hom(X, Y):
    """All filtered maps X → Y, in canonical order.

    Objects of unequal dimension bound are raised to the larger bound
    first; the returned maps live between the raised objects.
    """
    if X.dim_bound != Y.dim_bound:
        bound = max(X.dim_bound, Y.dim_bound)
        X = filtered_raise_bound(X, bound)
        Y = filtered_raise_bound(Y, bound)
    fx, fy = X.structure.components, Y.structure.components

    def keeps_word(n, x, y):
        return fx[n][x] == fy[n][y]

    maps = hom_enumerate(X.space, Y.space, candidate_filter=keeps_word)
    return [FilteredMap(X, Y, m, check=False) for m in maps]


def _vertex_word_map(m, n, w, bound):
    """Map Δ^m → Δ^n classified by the monotone word ``w`` of length m+1."""
    src = standard_simplex(m, bound)
    tgt = standard_simplex(n, bound)
    comps = {l: {u: tuple(w[v] for v in u) for u in src.levels[l]}
             for l in range(bound + 1)}
    return SimplicialMap(src, tgt, comps, check=False)


def map_space_with_tables(phi, Y, n_max):
    """Simplicial mapping space Map(Δ^phi, Y) truncated at level ``n_max``.

    Level n is the set of filtered maps Δ^n ⊗ Δ^phi → Y; operators act by
    precomposition on the Δ^n factor.  Simplex identifiers are frozen
    component tables.  Returns (space, identifier → components dict,
    tensor shapes per level).
    """
    phi = tuple(phi)
    bound = Y.dim_bound
    if n_max > bound:
        raise BoundTooLow("mapping-space levels exceed the host bound")
    Dphi = filtered_simplex(Y.base, phi, bound)
    tensors = [tensor(standard_simplex(n, bound), Dphi)
               for n in range(n_max + 1)]
    tables = {}  # (n, frozen) -> dict-of-dicts components
    levels = []
    for n in range(n_max + 1):
        lvl = set()
        for f in filtered_hom(tensors[n], Y):
            key = f.freeze()
            lvl.add(key)
            tables[(n, key)] = f.map.components
        levels.append(frozenset(lvl))

    def precompose(n, key, w):
        # w: monotone word [m] -> [n]; returns frozen map at level m = len(w)-1
        m = len(w) - 1
        comp = tables[(n, key)]
        out = []
        for l in range(bound + 1):
            pairs = [((u, v), comp[l][(tuple(w[t] for t in u), v)])
                     for (u, v) in tensors[m].space.levels[l]]
            out.append(tuple(sorted(pairs, key=lambda p: skey(p[0]))))
        return tuple(out)

    face = {}
    deg = {}
    for n in range(1, n_max + 1):
        for i in range(n + 1):
            w = tuple(t for t in range(n + 1) if t != i)
            face[(n, i)] = {key: precompose(n, key, w) for key in levels[n]}
    for n in range(n_max):
        for j in range(n + 1):
            w = tuple(range(j + 1)) + tuple(range(j, n + 1))
            deg[(n, j)] = {key: precompose(n, key, w) for key in levels[n]}
    space = SimplicialSet(n_max, tuple(levels), face, deg)
    return space, tables, tensors


def map_space(phi, Y, n_max):
    return map_space_with_tables(phi, Y, n_max)[0]


# ---------------------------------------------------------------------------
# horns and anodyne certificates


def is_admissible_horn(word, k):
    word = tuple(word)
    n = len(word) - 1
    if not 0 <= k <= n:
        raise BadIndexSet("horn index out of range")
    return (k > 0 and word[k] == word[k - 1]) or \
           (k < n and word[k] == word[k + 1])


def _check_index_set(word, S):
    n = len(word) - 1
    S = frozenset(S)
    if not S or not S <= set(range(n + 1)) or len(S) > n:
        raise BadIndexSet("index set must be a non-empty proper subset of "
                          "the vertex positions")
    return S


def generalized_horn(P, word, S, dim_bound=None):
    """Subobject of Δ^word generated by the faces d_j with j ∉ S."""
    word = tuple(word)
    _check_word(P, word)
    S = _check_index_set(word, S)
    n = len(word) - 1
    D = filtered_simplex(P, word, dim_bound)
    top = tuple(range(n + 1))
    marked = [(n - 1, top[:j] + top[j + 1:]) for j in range(n + 1) if j not in S]
    return filtered_sub(D, marked)[0]


def horn_vertex_sets(word, S):
    """Non-degenerate simplices of Λ_S^word as vertex subsets.

    A subset is present iff its complement is not contained in S.
    """
    word = tuple(word)
    S = _check_index_set(word, S)
    n = len(word) - 1
    full = frozenset(range(n + 1))
    out = set()
    for m in range(n + 1):
        for V in combinations(range(n + 1), m + 1):
            if not (full - set(V)) <= S:
                out.add(frozenset(V))
    return out


@dataclass
class AnodyneCertificate:
    """Witness that Λ_S^word → Δ^word is built from admissible horn fillings.

    Each step ``(mu, k)`` fills the admissible horn Λ_k of the face of
    Δ^word spanned by the ambient vertex positions ``mu``.
    """

    word: tuple
    index_set: frozenset
    steps: tuple


def _split_choice(wloc, S, m):
    for j in sorted(S):
        for eps in (-1, 1):
            t = j + eps
            if 0 <= t <= m and t not in S and wloc[j] == wloc[t]:
                return j
    return None


def anodyne_certificate(word, S):
    word = tuple(word)
    S = _check_index_set(word, S)
    n = len(word) - 1
    if _split_choice(word, S, n) is None:
        raise HypothesisFails("no index in S has an equal filtration "
                              "neighbor outside S")

    def rec(mu, S):
        wloc = tuple(word[v] for v in mu)
        m = len(mu) - 1
        if len(S) == 1:
            (s,) = S
            return [(mu, s)]
        j = _split_choice(wloc, S, m)
        a = max(S - {j})
        A = S - {a}
        mu_face = mu[:a] + mu[a + 1:]
        B = frozenset(i if i < a else i - 1 for i in A)
        return rec(mu_face, B) + rec(mu, A)

    steps = rec(tuple(range(n + 1)), S)
    return AnodyneCertificate(word, S, tuple(steps))


def replay_certificate(cert):
    """Replay the certificate's horn fillings; true iff they rebuild the
    full simplex from the generalized horn."""
    word = tuple(cert.word)
    n = len(word) - 1
    try:
        present = horn_vertex_sets(word, cert.index_set)
    except BadIndexSet:
        return False
    for (mu, k) in cert.steps:
        m = len(mu) - 1
        wloc = [word[v] for v in mu]
        admissible = (k > 0 and wloc[k] == wloc[k - 1]) or \
                     (k < m and wloc[k] == wloc[k + 1])
        if not admissible:
            return False
        top = frozenset(mu)
        missing = top - {mu[k]}
        if top in present or missing in present:
            return False
        for size in range(1, m + 1):
            for V in combinations(mu, size):
                fV = frozenset(V)
                if fV != missing and fV not in present:
                    return False
        present.add(top)
        present.add(missing)
    full = frozenset(range(n + 1))
    expected = {frozenset(V) for m in range(n + 1)
                for V in combinations(range(n + 1), m + 1)}
    return full in present and present == expected
