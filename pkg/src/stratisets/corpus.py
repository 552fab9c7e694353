"""Deterministic test corpus shared by the verification suites and the CLI.

Posets with at most three elements, and over each poset the filtered
simplices, boundaries, horns, nerve, and one pushout (a simplex doubled
along its boundary).  Everything is emitted in a fixed order so reports
built from the corpus are reproducible byte for byte.
"""

from .engine import pushout
from .filtered import (FilteredSimplicialSet, filtered_boundary,
                       filtered_horn, filtered_nerve, filtered_simplex)
from .poset import enumerate_chains, poset_from_cover


def small_posets(max_elements=3):
    """All isomorphism types of posets on at most ``max_elements`` points,
    one representative each, elements named a, b, c."""
    out = [("point", poset_from_cover(['a'], []))]
    if max_elements >= 2:
        out.append(("chain2", poset_from_cover(['a', 'b'], [('a', 'b')])))
        out.append(("antichain2", poset_from_cover(['a', 'b'], [])))
    if max_elements >= 3:
        out.append(("chain3", poset_from_cover(['a', 'b', 'c'],
                                               [('a', 'b'), ('b', 'c')])))
        out.append(("vee", poset_from_cover(['a', 'b', 'c'],
                                            [('a', 'c'), ('b', 'c')])))
        out.append(("wedge", poset_from_cover(['a', 'b', 'c'],
                                              [('a', 'b'), ('a', 'c')])))
        out.append(("chain2+point", poset_from_cover(['a', 'b', 'c'],
                                                     [('a', 'b')])))
        out.append(("antichain3", poset_from_cover(['a', 'b', 'c'], [])))
    return out


def strict_words(P, max_len=3):
    out = []
    for length in range(1, max_len + 1):
        out.extend(c.word for c in enumerate_chains(P, length, strict=True))
    return out


def weak_words(P, max_len=3):
    out = []
    for length in range(1, max_len + 1):
        out.extend(c.word for c in enumerate_chains(P, length))
    return out


def doubled_simplex(P, word, dim_bound=None):
    """Two copies of the filtered simplex on ``word`` glued along the
    boundary.  For words of length > 1 this is not a subcomplex of a
    nerve, so it exercises the general colimit paths."""
    D = filtered_simplex(P, word, dim_bound)
    B = filtered_boundary(P, word, dim_bound)
    n = len(word) - 1
    comps = {m: {x: x for x in B.space.levels[m]}
             for m in range(B.dim_bound + 1)}
    from .engine import SimplicialMap
    inc = SimplicialMap(B.space, D.space, comps, check=False)
    space, f, g = pushout(inc, inc)
    comp = {}
    for m in range(space.dim_bound + 1):
        comp[m] = {}
        for (k, x) in space.levels[m]:
            comp[m][(k, x)] = D.word_of(m, x)
    structure = SimplicialMap(space, D.structure.target, comp)
    return FilteredSimplicialSet(P, space, structure)


def corpus_objects(P, dim_bound, max_word=3):
    """Named filtered objects over ``P``: simplices, boundaries, horns for
    all strict words up to ``max_word``, the nerve, and one pushout."""
    words = strict_words(P, max_word)
    out = []
    for w in words:
        label = ",".join(str(p) for p in w)
        out.append((f"simplex[{label}]", filtered_simplex(P, w, dim_bound)))
        if len(w) > 1:
            out.append((f"boundary[{label}]",
                        filtered_boundary(P, w, dim_bound)))
            for k in range(len(w)):
                out.append((f"horn[{label};{k}]",
                            filtered_horn(P, w, k, dim_bound)))
    out.append(("nerve", filtered_nerve(P, dim_bound)))
    longest = max(words, key=lambda w: (len(w), w))
    out.append((f"double[{','.join(str(p) for p in longest)}]",
                doubled_simplex(P, longest, dim_bound)))
    return out


def corpus(max_poset=3, max_word=3, dim_bound=3):
    """Full corpus: list of (poset name, object name, filtered object)."""
    out = []
    for pname, P in small_posets(max_poset):
        for oname, X in corpus_objects(P, dim_bound, max_word):
            out.append((pname, oname, X))
    return out
