"""Finite simplicial sets stored level-wise with explicit operators.

Every object is complete up to its dimension bound: all simplices,
degenerate ones included, are stored explicitly, so limits and colimits
are exact set-level computations.  Simplex identifiers are opaque
hashable values; canonical order everywhere is by ``repr``.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import BoundTooLow, MalformedDiagram


def skey(x):
    """Canonical sort key for opaque simplex identifiers."""
    return repr(x)


def sorted_ids(xs):
    return sorted(xs, key=skey)


# ---------------------------------------------------------------------------
# simplicial sets


@dataclass
class SimplicialSet:
    """Level-wise finite simplicial set, complete up to ``dim_bound``.

    ``face[(n, i)]`` maps level ``n`` to level ``n - 1`` and
    ``deg[(n, j)]`` maps level ``n`` to level ``n + 1`` (absent at the
    top level).  Simplicial identities are checked at construction.
    """

    dim_bound: int
    levels: tuple
    face: dict
    deg: dict
    check: bool = True

    def __post_init__(self):
        self.levels = tuple(frozenset(l) for l in self.levels)
        self._sorted = {}
        if len(self.levels) != self.dim_bound + 1:
            raise MalformedDiagram("levels do not match dim_bound")
        if self.check:
            self.validate()

    def __eq__(self, other):
        if not isinstance(other, SimplicialSet):
            return NotImplemented
        return (self.dim_bound == other.dim_bound
                and self.levels == other.levels
                and self.face == other.face
                and self.deg == other.deg)

    __hash__ = None

    def d(self, n, i, x):
        return self.face[(n, i)][x]

    def s(self, n, j, x):
        return self.deg[(n, j)][x]

    def simplices(self, n):
        if n not in self._sorted:
            self._sorted[n] = sorted_ids(self.levels[n])
        return self._sorted[n]

    def validate(self):
        N = self.dim_bound
        for n in range(1, N + 1):
            for i in range(n + 1):
                fm = self.face.get((n, i))
                if fm is None or set(fm) != self.levels[n]:
                    raise MalformedDiagram(f"face ({n},{i}) not total")
                if not set(fm.values()) <= self.levels[n - 1]:
                    raise MalformedDiagram(f"face ({n},{i}) leaves level {n-1}")
        for n in range(N):
            for j in range(n + 1):
                sm = self.deg.get((n, j))
                if sm is None or set(sm) != self.levels[n]:
                    raise MalformedDiagram(f"degeneracy ({n},{j}) not total")
                if not set(sm.values()) <= self.levels[n + 1]:
                    raise MalformedDiagram(f"degeneracy ({n},{j}) leaves level {n+1}")
        # identities, wherever both sides are defined
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    for x in self.levels[n]:
                        if self.d(n - 1, i, self.d(n, j, x)) != \
                           self.d(n - 1, j - 1, self.d(n, i, x)):
                            raise MalformedDiagram(f"d{i} d{j} fails at level {n}")
        for n in range(N - 1):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    for x in self.levels[n]:
                        if self.s(n + 1, i, self.s(n, j, x)) != \
                           self.s(n + 1, j + 1, self.s(n, i, x)):
                            raise MalformedDiagram(f"s{i} s{j} fails at level {n}")
        for n in range(N):
            for j in range(n + 1):
                for i in range(n + 2):
                    for x in self.levels[n]:
                        lhs = self.d(n + 1, i, self.s(n, j, x))
                        if i == j or i == j + 1:
                            rhs = x
                        elif i < j:
                            rhs = self.s(n - 1, j - 1, self.d(n, i, x))
                        else:
                            rhs = self.s(n - 1, j, self.d(n, i - 1, x))
                        if lhs != rhs:
                            raise MalformedDiagram(
                                f"d{i} s{j} identity fails at level {n}")

    # -- degeneracy structure ------------------------------------------------

    def is_degenerate(self, n, x):
        return any(self.s(n - 1, j, self.d(n, j, x)) == x for j in range(n))

    def nondegenerate(self, n):
        return [x for x in self.simplices(n) if n == 0 or not self.is_degenerate(n, x)]

    def f_vector(self):
        counts = [len(self.nondegenerate(n)) for n in range(self.dim_bound + 1)]
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def euler_characteristic(self):
        return sum((-1) ** n * len(self.nondegenerate(n))
                   for n in range(self.dim_bound + 1))

    def top_nondegenerate_dim(self):
        for n in range(self.dim_bound, -1, -1):
            if self.nondegenerate(n):
                return n
        return -1


@dataclass
class EZDecomposition:
    """Normal-form presentation of a simplex as a degeneracy of its base.

    The degeneracy word is strictly descending; the base is non-degenerate.
    """

    word: tuple
    base_level: int
    base: object


def ez_decompose(X, n, x):
    word = []
    level = n
    y = x
    while level > 0:
        for j in range(level - 1, -1, -1):
            z = X.d(level, j, y)
            if X.s(level - 1, j, z) == y:
                word.append(j)
                y = z
                level -= 1
                break
        else:
            break
    return EZDecomposition(tuple(word), level, y)


def apply_degeneracy_word(X, level, x, word):
    """Apply ``s_{word[0]} ∘ ... ∘ s_{word[-1]}`` to ``x`` (rightmost first)."""
    y = x
    lvl = level
    for j in reversed(word):
        y = X.s(lvl, j, y)
        lvl += 1
    return y


# -- normal-form arithmetic on abstract degeneracy words --------------------


def insert_degeneracy(word, t):
    """Normal form of ``s_t`` composed onto a descending degeneracy word."""
    out = []
    for idx, j in enumerate(word):
        if t <= j:
            out.append(j + 1)
        else:
            return tuple(out) + (t,) + word[idx:]
    return tuple(out) + (t,)


def face_through_word(word, i):
    """Push ``d_i`` through a descending degeneracy word.

    Returns ``(new_word, residual)`` where ``residual`` is the face index
    reaching the base, or ``None`` if the face cancelled a degeneracy.
    """
    out = []
    for idx, j in enumerate(word):
        if i == j or i == j + 1:
            return tuple(out) + word[idx + 1:], None
        if i < j:
            out.append(j - 1)
        else:
            out.append(j)
            i -= 1
    return tuple(out), i


# ---------------------------------------------------------------------------
# standard shapes


def _monotone_words(n, length):
    return list(combinations_with_replacement(range(n + 1), length))


def _word_shape(words_by_level, dim_bound):
    """Simplicial set on monotone-word identifiers with index calculus ops."""
    levels = [frozenset(words_by_level[m]) for m in range(dim_bound + 1)]
    face = {}
    deg = {}
    for m in range(1, dim_bound + 1):
        for i in range(m + 1):
            face[(m, i)] = {w: w[:i] + w[i + 1:] for w in levels[m]}
    for m in range(dim_bound):
        for j in range(m + 1):
            deg[(m, j)] = {w: w[:j + 1] + w[j:] for w in levels[m]}
    return SimplicialSet(dim_bound, tuple(levels), face, deg)


def standard_simplex(n, dim_bound=None):
    N = n if dim_bound is None else dim_bound
    return _word_shape({m: _monotone_words(n, m + 1) for m in range(N + 1)}, N)


def boundary(n, dim_bound=None):
    N = n if dim_bound is None else dim_bound
    full = set(range(n + 1))
    words = {m: [w for w in _monotone_words(n, m + 1) if set(w) != full]
             for m in range(N + 1)}
    return _word_shape(words, N)


def horn(n, k, dim_bound=None):
    if not 0 <= k <= n:
        raise MalformedDiagram("horn index out of range")
    N = n if dim_bound is None else dim_bound
    full = set(range(n + 1))
    missing = full - {k}
    words = {m: [w for w in _monotone_words(n, m + 1)
                 if set(w) != full and set(w) != missing]
             for m in range(N + 1)}
    return _word_shape(words, N)


# ---------------------------------------------------------------------------
# simplicial maps


@dataclass
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    components: dict
    check: bool = True

    def __post_init__(self):
        if self.check:
            self.validate()

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __call__(self, n, x):
        return self.components[n][x]

    def validate(self):
        N = min(self.source.dim_bound, self.target.dim_bound)
        if self.source.dim_bound != self.target.dim_bound:
            raise MalformedDiagram("map between objects of unequal dim_bound")
        for n in range(N + 1):
            comp = self.components.get(n)
            if comp is None or set(comp) != self.source.levels[n]:
                raise MalformedDiagram(f"component at level {n} not total")
            if not set(comp.values()) <= self.target.levels[n]:
                raise MalformedDiagram(f"component at level {n} leaves target")
        for n in range(1, N + 1):
            for i in range(n + 1):
                for x in self.source.levels[n]:
                    if self.components[n - 1][self.source.d(n, i, x)] != \
                       self.target.d(n, i, self.components[n][x]):
                        raise MalformedDiagram(f"map fails d_{i} at level {n}")
        for n in range(N):
            for j in range(n + 1):
                for x in self.source.levels[n]:
                    if self.components[n + 1][self.source.s(n, j, x)] != \
                       self.target.s(n, j, self.components[n][x]):
                        raise MalformedDiagram(f"map fails s_{j} at level {n}")

    def freeze(self):
        """Hashable canonical form of the underlying function."""
        return tuple(
            tuple(sorted(((x, self.components[n][x]) for x in self.source.levels[n]),
                         key=lambda p: skey(p[0])))
            for n in range(self.source.dim_bound + 1))


def identity_map(X):
    comps = {n: {x: x for x in X.levels[n]} for n in range(X.dim_bound + 1)}
    return SimplicialMap(X, X, comps, check=False)


def compose(g, f):
    """Composite ``g ∘ f``."""
    comps = {n: {x: g.components[n][f.components[n][x]] for x in f.components[n]}
             for n in f.components}
    return SimplicialMap(f.source, g.target, comps, check=False)


def is_isomorphism(f):
    for n in range(f.source.dim_bound + 1):
        comp = f.components[n]
        if len(set(comp.values())) != len(comp) or \
           set(comp.values()) != f.target.levels[n]:
            return False
    return True


def inclusion_map(sub, ambient):
    comps = {n: {x: x for x in sub.levels[n]} for n in range(sub.dim_bound + 1)}
    return SimplicialMap(sub, ambient, comps, check=False)


# ---------------------------------------------------------------------------
# vertex-word calculus


def apply_vertex_word(X, n, x, w):
    """Image of the level-``n`` simplex ``x`` under the operator classified
    by the weakly monotone word ``w`` with letters in ``0..n``."""
    for p in range(len(w) - 1):
        if w[p] == w[p + 1]:
            y = apply_vertex_word(X, n, x, w[:p] + w[p + 1:])
            return X.s(len(w) - 2, p, y)
    present = set(w)
    missing = [i for i in range(n + 1) if i not in present]
    if missing:
        i = missing[-1]
        w2 = tuple(v if v < i else v - 1 for v in w)
        return apply_vertex_word(X, n - 1, X.d(n, i, x), w2)
    return x


def classifying_map(X, n, x):
    """The simplicial map ``Δ^n → X`` picking out ``x``."""
    src = standard_simplex(n, X.dim_bound)
    comps = {m: {w: apply_vertex_word(X, n, x, w) for w in src.levels[m]}
             for m in range(X.dim_bound + 1)}
    return SimplicialMap(src, X, comps, check=False)


# ---------------------------------------------------------------------------
# raising the dimension bound


def _descending_words(length, base_level):
    """Descending degeneracy words of the given length over a base at
    ``base_level`` (letter ``t`` positions from the right must be ≤
    ``base_level + t - 1``)."""
    if length == 0:
        return [()]
    out = []

    def rec(pos, minimum, acc):
        # pos counts from the right, 1-based
        if pos > length:
            out.append(tuple(reversed(acc)))
            return
        for j in range(minimum, base_level + pos):
            rec(pos + 1, j + 1, acc + [j])

    rec(1, 0, [])
    return out


def raise_bound(X, new_bound):
    """Extend ``X`` with synthesized degenerate levels up to ``new_bound``."""
    N = X.dim_bound
    if new_bound < N:
        raise BoundTooLow("cannot lower a dimension bound")
    if new_bound == N:
        return X
    nondeg = {r: X.nondegenerate(r) for r in range(N + 1)}

    def realize(word, r, b, level):
        # canonical id of s_word(b) at the given level
        if level <= N:
            return apply_degeneracy_word(X, r, b, word)
        return ('deg', word, (r, b))

    levels = [set(X.levels[n]) for n in range(N + 1)]
    for n in range(N + 1, new_bound + 1):
        lvl = set()
        for r in range(N + 1):
            for w in _descending_words(n - r, r):
                for b in nondeg[r]:
                    lvl.add(('deg', w, (r, b)))
        levels.append(lvl)
    face = dict(X.face)
    deg = {k: dict(v) for k, v in X.deg.items()}

    def ez_of(n, x):
        if n <= N:
            e = ez_decompose(X, n, x)
            return e.word, e.base_level, e.base
        return x[1], x[2][0], x[2][1]

    for n in range(N, new_bound):
        for j in range(n + 1):
            m = deg.setdefault((n, j), {})
            for x in levels[n]:
                w, r, b = ez_of(n, x)
                m[x] = ('deg', insert_degeneracy(w, j), (r, b))
    for n in range(N + 1, new_bound + 1):
        for i in range(n + 1):
            m = {}
            for x in levels[n]:
                w, (r, b) = x[1], x[2]
                w2, residual = face_through_word(w, i)
                if residual is None:
                    m[x] = realize(w2, r, b, n - 1)
                else:
                    y = X.face[(r, residual)][b]
                    e = ez_decompose(X, r - 1, y)
                    full = e.word
                    for t in reversed(w2):
                        full = insert_degeneracy(full, t)
                    m[x] = realize(full, e.base_level, e.base, n - 1)
            face[(n, i)] = m
    return SimplicialSet(new_bound, tuple(frozenset(l) for l in levels), face, deg)


def equalize_bounds(*objs):
    bound = max(o.dim_bound for o in objs)
    return tuple(raise_bound(o, bound) for o in objs)


# ---------------------------------------------------------------------------
# subobjects


def sub_simplicial_set(X, marked):
    """Smallest sub-simplicial set of ``X`` containing the marked simplices.

    ``marked`` is an iterable of ``(level, simplex)`` pairs.  Returns the
    subobject and its inclusion into ``X``.
    """
    keep = [set() for _ in range(X.dim_bound + 1)]
    stack = [(n, x) for (n, x) in marked]
    while stack:
        n, x = stack.pop()
        if x in keep[n]:
            continue
        keep[n].add(x)
        if n > 0:
            for i in range(n + 1):
                stack.append((n - 1, X.d(n, i, x)))
        if n < X.dim_bound:
            for j in range(n + 1):
                stack.append((n + 1, X.s(n, j, x)))
    face = {(n, i): {x: X.face[(n, i)][x] for x in keep[n]}
            for n in range(1, X.dim_bound + 1) for i in range(n + 1)}
    deg = {(n, j): {x: X.deg[(n, j)][x] for x in keep[n]}
           for n in range(X.dim_bound) for j in range(n + 1)}
    sub = SimplicialSet(X.dim_bound, tuple(frozenset(k) for k in keep), face, deg)
    return sub, inclusion_map(sub, X)


# ---------------------------------------------------------------------------
# limits and colimits


def product(X, Y):
    if X.dim_bound != Y.dim_bound:
        X, Y = equalize_bounds(X, Y)
    N = X.dim_bound
    levels = [frozenset((x, y) for x in X.levels[n] for y in Y.levels[n])
              for n in range(N + 1)]
    face = {(n, i): {(x, y): (X.d(n, i, x), Y.d(n, i, y)) for (x, y) in levels[n]}
            for n in range(1, N + 1) for i in range(n + 1)}
    deg = {(n, j): {(x, y): (X.s(n, j, x), Y.s(n, j, y)) for (x, y) in levels[n]}
           for n in range(N) for j in range(n + 1)}
    P = SimplicialSet(N, tuple(levels), face, deg)
    pr1 = SimplicialMap(P, X, {n: {p: p[0] for p in levels[n]} for n in range(N + 1)},
                        check=False)
    pr2 = SimplicialMap(P, Y, {n: {p: p[1] for p in levels[n]} for n in range(N + 1)},
                        check=False)
    return P, pr1, pr2


def pullback(f, g):
    """Pullback of ``f : X → Z ← Y : g``; returns (P, prX, prY)."""
    X, Y = f.source, g.source
    if X.dim_bound != Y.dim_bound:
        raise BoundTooLow("pullback participants must share dim_bound")
    N = X.dim_bound
    levels = []
    for n in range(N + 1):
        buckets = {}
        for y in Y.levels[n]:
            buckets.setdefault(g.components[n][y], []).append(y)
        levels.append(frozenset(
            (x, y) for x in X.levels[n]
            for y in buckets.get(f.components[n][x], ())))
    face = {(n, i): {(x, y): (X.d(n, i, x), Y.d(n, i, y)) for (x, y) in levels[n]}
            for n in range(1, N + 1) for i in range(n + 1)}
    deg = {(n, j): {(x, y): (X.s(n, j, x), Y.s(n, j, y)) for (x, y) in levels[n]}
           for n in range(N) for j in range(n + 1)}
    P = SimplicialSet(N, tuple(levels), face, deg)
    prX = SimplicialMap(P, X, {n: {p: p[0] for p in levels[n]} for n in range(N + 1)},
                        check=False)
    prY = SimplicialMap(P, Y, {n: {p: p[1] for p in levels[n]} for n in range(N + 1)},
                        check=False)
    return P, prX, prY


def coproduct(parts):
    """Disjoint union; identifiers are tagged ``(index, simplex)`` pairs."""
    if not parts:
        raise MalformedDiagram("empty coproduct needs an explicit bound")
    bound = max(p.dim_bound for p in parts)
    parts = [raise_bound(p, bound) for p in parts]
    N = bound
    levels = [frozenset((k, x) for k, p in enumerate(parts) for x in p.levels[n])
              for n in range(N + 1)]
    face = {(n, i): {(k, x): (k, parts[k].d(n, i, x)) for (k, x) in levels[n]}
            for n in range(1, N + 1) for i in range(n + 1)}
    deg = {(n, j): {(k, x): (k, parts[k].s(n, j, x)) for (k, x) in levels[n]}
           for n in range(N) for j in range(n + 1)}
    C = SimplicialSet(N, tuple(levels), face, deg)
    legs = [SimplicialMap(parts[k], C,
                          {n: {x: (k, x) for x in parts[k].levels[n]}
                           for n in range(N + 1)}, check=False)
            for k in range(len(parts))]
    return C, legs


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[x] = p
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def quotient(X, relations):
    """Quotient of ``X`` by the congruence generated by ``relations``.

    ``relations`` is an iterable of ``(level, a, b)`` triples; the closure
    under face and degeneracy operators is taken here.  Class
    representatives are canonical (minimal by ``repr``).  Returns the
    quotient and the projection map.
    """
    N = X.dim_bound
    ufs = [_UnionFind() for _ in range(N + 1)]
    for n in range(N + 1):
        for x in X.levels[n]:
            ufs[n].find(x)
    pending = [(n, a, b) for (n, a, b) in relations]
    while pending:
        n, a, b = pending.pop()
        if ufs[n].find(a) == ufs[n].find(b):
            continue
        ufs[n].union(a, b)
        if n > 0:
            pending.extend((n - 1, X.d(n, i, a), X.d(n, i, b))
                           for i in range(n + 1))
        if n < N:
            pending.extend((n + 1, X.s(n, j, a), X.s(n, j, b))
                           for j in range(n + 1))
    rep = [dict() for _ in range(N + 1)]
    for n in range(N + 1):
        classes = {}
        for x in X.levels[n]:
            classes.setdefault(ufs[n].find(x), []).append(x)
        for members in classes.values():
            r = min(members, key=skey)
            for x in members:
                rep[n][x] = r
    levels = [frozenset(rep[n].values()) for n in range(N + 1)]
    face = {(n, i): {rep[n][x]: rep[n - 1][X.d(n, i, x)] for x in X.levels[n]}
            for n in range(1, N + 1) for i in range(n + 1)}
    deg = {(n, j): {rep[n][x]: rep[n + 1][X.s(n, j, x)] for x in X.levels[n]}
           for n in range(N) for j in range(n + 1)}
    Q = SimplicialSet(N, tuple(levels), face, deg)
    proj = SimplicialMap(X, Q, {n: dict(rep[n]) for n in range(N + 1)}, check=False)
    return Q, proj


def pushout(f, g):
    """Pushout of ``X ← A → Y``; returns (P, legX, legY)."""
    if f.source is not g.source and f.source != g.source:
        raise MalformedDiagram("pushout legs must share their source")
    C, (inX, inY) = coproduct([f.target, g.target])
    A = f.source
    rels = [(n, inX.components[n][f.components[n][a]],
             inY.components[n][g.components[n][a]])
            for n in range(A.dim_bound + 1) for a in A.levels[n]]
    Q, proj = quotient(C, rels)
    return Q, compose(proj, inX), compose(proj, inY)


def colimit(objects, arrows):
    """Colimit of a finite diagram of simplicial sets.

    ``objects`` maps node names to simplicial sets; ``arrows`` is a list of
    ``(src_node, dst_node, SimplicialMap)``.  Returns the colimit and a dict
    of leg maps per node.
    """
    names = sorted(objects, key=skey)
    parts = [objects[k] for k in names]
    index = {k: i for i, k in enumerate(names)}
    C, legs = coproduct(parts)
    rels = []
    for (src, dst, m) in arrows:
        if m.source != objects[src] or m.target != objects[dst]:
            raise MalformedDiagram(f"arrow {src}→{dst} is not a map of the "
                                   "stated objects")
        si, di = index[src], index[dst]
        for n in range(m.source.dim_bound + 1):
            for x in m.source.levels[n]:
                rels.append((n, legs[si].components[n][x],
                             legs[di].components[n][m.components[n][x]]))
    Q, proj = quotient(C, rels)
    return Q, {k: compose(proj, legs[index[k]]) for k in names}


# ---------------------------------------------------------------------------
# hom enumeration


def hom_enumerate(X, Y, candidate_filter=None):
    """All simplicial maps ``X → Y`` in canonical order.

    Backtracks over images of non-degenerate simplices by increasing level
    and extends to degenerate simplices through the operators.
    """
    if X.dim_bound != Y.dim_bound:
        X, Y = equalize_bounds(X, Y)
    N = X.dim_bound
    if X.top_nondegenerate_dim() > Y.dim_bound:
        raise BoundTooLow("source has generators above target's dim_bound")
    gens = {n: X.nondegenerate(n) for n in range(N + 1)}
    gsets = {n: set(gens[n]) for n in range(N + 1)}
    degs = {n: [x for x in X.simplices(n) if x not in gsets[n]]
            for n in range(N + 1)}
    targets = {n: Y.simplices(n) for n in range(N + 1)}
    results = []
    assign = {}  # (n, x) -> image, for every simplex at completed levels

    def fill_degenerate(n):
        for x in degs[n]:
            e = ez_decompose(X, n, x)
            base_img = assign[(e.base_level, e.base)]
            assign[(n, x)] = apply_degeneracy_word(Y, e.base_level, base_img, e.word)

    def candidates(n, x):
        want = [assign[(n - 1, X.d(n, i, x))] for i in range(n + 1)] \
            if n else None
        for y in targets[n]:
            if n and any(Y.d(n, i, y) != want[i] for i in range(n + 1)):
                continue
            if candidate_filter is not None and not candidate_filter(n, x, y):
                continue
            yield y

    # one choice op per generator, one bookkeeping op per level; iterative
    # so the search depth is not bounded by the interpreter stack
    ops = []
    for n in range(N + 1):
        ops.extend(("gen", n, x) for x in gens[n])
        ops.append(("close", n))
    iters = [None] * len(ops)
    done = object()
    i = 0
    fresh = True
    while i >= 0:
        if i == len(ops):
            comps = {m: {x: assign[(m, x)] for x in X.levels[m]}
                     for m in range(N + 1)}
            results.append(SimplicialMap(X, Y, comps, check=False))
            i -= 1
            fresh = False
            continue
        op = ops[i]
        if op[0] == "close":
            n = op[1]
            if fresh:
                fill_degenerate(n)
                i += 1
            else:
                for x in degs[n]:
                    del assign[(n, x)]
                i -= 1
            continue
        _, n, x = op
        if fresh:
            iters[i] = candidates(n, x)
        else:
            del assign[(n, x)]
        y = next(iters[i], done)
        if y is done:
            i -= 1
            fresh = False
        else:
            assign[(n, x)] = y
            i += 1
            fresh = True
    return results
