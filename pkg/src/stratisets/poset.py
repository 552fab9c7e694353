"""Finite posets, chains, and the nerve.

Posets are entered by cover pairs and closed reflexively and
transitively at construction.  Element identifiers are opaque; canonical
order is lexicographic on their ``repr``.
"""

from dataclasses import dataclass

from .engine import SimplicialSet, skey
from .errors import CycleDetected, MalformedDiagram


@dataclass(frozen=True)
class Poset:
    """Finite poset given by its full order relation.

    ``leq`` is the set of ordered pairs (a, b) with a ≤ b, including the
    diagonal.
    """

    elements: frozenset
    leq: frozenset

    def __post_init__(self):
        for a in self.elements:
            if (a, a) not in self.leq:
                raise MalformedDiagram("relation is not reflexive")
        for (a, b) in self.leq:
            if a not in self.elements or b not in self.elements:
                raise MalformedDiagram("relation mentions unknown elements")
            if a != b and (b, a) in self.leq:
                raise CycleDetected(f"{a!r} and {b!r} are comparable both ways")
        for (a, b) in self.leq:
            for c in self.elements:
                if (b, c) in self.leq and (a, c) not in self.leq:
                    raise MalformedDiagram("relation is not transitive")

    def le(self, a, b):
        return (a, b) in self.leq

    def sorted_elements(self):
        return sorted(self.elements, key=skey)


@dataclass(frozen=True)
class Chain:
    """Weakly increasing word in a poset; strict when strictly increasing."""

    word: tuple

    def __len__(self):
        return len(self.word)

    @property
    def is_strict(self):
        return all(a != b for a, b in zip(self.word, self.word[1:]))


def poset_from_cover(elements, cover_pairs):
    elements = frozenset(elements)
    for (a, b) in cover_pairs:
        if a not in elements or b not in elements:
            raise MalformedDiagram(f"cover pair ({a!r}, {b!r}) mentions "
                                   "unknown elements")
    leq = {(a, a) for a in elements} | set(cover_pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(leq):
            for (c, d) in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    for (a, b) in leq:
        if a != b and (b, a) in leq:
            raise CycleDetected(f"cover relation puts {a!r} and {b!r} on a cycle")
    return Poset(elements, frozenset(leq))


def chain_poset(n):
    """The linear order 0 < 1 < ... < n."""
    return poset_from_cover(range(n + 1), [(i, i + 1) for i in range(n)])


def enumerate_chains(P, length, strict=False):
    """All weakly (or strictly) increasing words of the given length,
    in canonical lexicographic order."""
    if length < 1:
        raise MalformedDiagram("chain length must be at least 1")
    out = []

    def rec(word):
        if len(word) == length:
            out.append(Chain(tuple(word)))
            return
        for e in P.sorted_elements():
            if not word:
                rec([e])
            elif P.le(word[-1], e) and (not strict or word[-1] != e):
                rec(word + [e])

    rec([])
    return out


def is_weak_chain(P, word):
    return all(P.le(a, b) for a, b in zip(word, word[1:]))


def nerve(P, dim_bound):
    """Nerve of ``P``: level n holds the weak chains of length n+1 as
    word tuples; face i deletes entry i, degeneracy j repeats entry j."""
    levels = [frozenset(c.word for c in enumerate_chains(P, n + 1))
              for n in range(dim_bound + 1)]
    face = {(n, i): {w: w[:i] + w[i + 1:] for w in levels[n]}
            for n in range(1, dim_bound + 1) for i in range(n + 1)}
    deg = {(n, j): {w: w[:j + 1] + w[j:] for w in levels[n]}
           for n in range(dim_bound) for j in range(n + 1)}
    return SimplicialSet(dim_bound, tuple(levels), face, deg)


def last_vertex_stratum(c):
    word = c.word if isinstance(c, Chain) else tuple(c)
    if not word:
        raise MalformedDiagram("chain is empty")
    return word[-1]


def strip_repeats(word):
    """Strict chain underlying a weak chain (collapse consecutive repeats)."""
    out = []
    for v in word:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)
