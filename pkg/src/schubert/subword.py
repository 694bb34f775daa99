"""Subword complexes: facets, links and deletions, vertex decomposition, and
shelling certification.

Vertices are positions into the word Q (0-based), so repeated letters are
distinct vertices.  The void complex (no faces at all) and the empty complex
{<empty face>} are distinguished: the former has no facets, the latter has the
single facet frozenset().

The machinery only needs a Coxeter system through length, identity, and
multiplication by a generator, collected in CoxeterSystem; symmetric_group(n)
is the one instantiation used here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import perm
from .perm import Perm


@dataclass(frozen=True)
class CoxeterSystem:
    identity: object
    length: Callable = field(compare=False)
    left_mul: Callable = field(compare=False)   # (letter, element) -> element
    right_mul: Callable = field(compare=False)  # (element, letter) -> element
    # optional search prune: is u a left weak-order prefix of pi?
    weak_prefix: Callable | None = field(default=None, compare=False)


def symmetric_group(n: int) -> CoxeterSystem:
    def weak_prefix(u: Perm, pi: Perm) -> bool:
        rest = perm.multiply(perm.inverse(u), pi)
        return perm.length(u) + perm.length(rest) == perm.length(pi)

    return CoxeterSystem(
        identity=perm.identity(n),
        length=perm.length,
        left_mul=perm.apply_left_transposition,
        right_mul=perm.apply_right_transposition,
        weak_prefix=weak_prefix,
    )


def demazure_product(word: Sequence[int], cox: CoxeterSystem) -> object:
    """Fold of the word in the degenerate Hecke algebra: multiply a letter in
    only when it increases length."""
    el = cox.identity
    for i in word:
        nxt = cox.right_mul(el, i)
        if cox.length(nxt) > cox.length(el):
            el = nxt
    return el


def contains(word: Sequence[int], pi, cox: CoxeterSystem) -> bool:
    """Whether some subword of ``word`` is a reduced word for pi.

    Greedy right-to-left: peel a letter off the right of pi whenever the
    current position provides a descent.  Validated against brute force in
    the tests.
    """
    v = pi
    for i in reversed(word):
        if cox.length(v) == 0:
            break
        nxt = cox.right_mul(v, i)
        if cox.length(nxt) < cox.length(v):
            v = nxt
    return v == cox.identity


def contains_bruteforce(word: Sequence[int], pi, cox: CoxeterSystem) -> bool:
    """Oracle for contains(): try every subword of the right length."""
    k = cox.length(pi)
    for positions in itertools.combinations(range(len(word)), k):
        el = cox.identity
        ok = True
        for p in positions:
            nxt = cox.right_mul(el, word[p])
            if cox.length(nxt) <= cox.length(el):
                ok = False
                break
            el = nxt
        if ok and el == pi:
            return True
    return k == 0 and pi == cox.identity


@dataclass(frozen=True)
class SubwordComplex:
    word: tuple
    pi: object
    facets: frozenset  # of frozensets of positions
    cox: CoxeterSystem = field(compare=False)

    @property
    def vertices(self) -> frozenset:
        return frozenset(range(len(self.word)))

    def is_void(self) -> bool:
        return not self.facets

    def facets_sorted(self) -> list[list[int]]:
        return sorted(sorted(f) for f in self.facets)


def subword_complex(word: Sequence[int], pi, cox: CoxeterSystem) -> SubwordComplex:
    """The complex of subwords whose complements still contain pi.

    Facets are complements of position sets representing pi (reduced
    subwords).  If the word does not contain pi the complex is void.
    """
    word = tuple(word)
    target_len = cox.length(pi)
    reduced_subwords: list[frozenset] = []

    # walk positions left to right; keep only partial products u that are
    # prefixes of pi in weak order: length(u) + length(u^-1 pi) = length(pi)
    def rec(pos: int, chosen: tuple, current) -> None:
        if cox.length(current) == target_len:
            if current == pi:
                reduced_subwords.append(frozenset(chosen))
            return
        if len(word) - pos < target_len - cox.length(current):
            return
        if pos == len(word):
            return
        rec(pos + 1, chosen, current)
        nxt = cox.right_mul(current, word[pos])
        if cox.length(nxt) > cox.length(current) and (
            cox.weak_prefix is None or cox.weak_prefix(nxt, pi)
        ):
            rec(pos + 1, chosen + (pos,), nxt)

    rec(0, (), cox.identity)
    positions = frozenset(range(len(word)))
    facets = frozenset(positions - p for p in reduced_subwords)
    return SubwordComplex(word, pi, facets, cox)


# -- generic facet-set operations --------------------------------------------


def _maximal(sets: Iterable[frozenset]) -> frozenset:
    pool = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in pool:
        if not any(s <= k for k in kept):
            kept.append(s)
    return frozenset(kept)


def _check_face(face: frozenset, facets: frozenset) -> None:
    if not any(face <= f for f in facets):
        raise ValueError(f"{sorted(face)} is not a face")


def deletion(face: Iterable[int], facets: frozenset) -> frozenset:
    """Facets of del(F): maximal sets among facet - F."""
    face = frozenset(face)
    _check_face(face, facets)
    return _maximal(f - face for f in facets)


def link(face: Iterable[int], facets: frozenset) -> frozenset:
    """Facets of link(F): maximal sets among facet - F over facets containing F."""
    face = frozenset(face)
    _check_face(face, facets)
    return _maximal(f - face for f in facets if face <= f)


# -- vertex decomposition ------------------------------------------------------


VOID_LEAF = "void"
EMPTY_LEAF = "empty"


@dataclass(frozen=True)
class DecompositionNode:
    vertex: int
    cone: bool  # True when no reduced word for pi starts with this letter
    link: object
    deletion: object | None  # None exactly when cone


def vertex_decompose(delta: SubwordComplex) -> object:
    """Decomposition tree along the first letter, per the subword recursion:
    link drops the letter, deletion shortens pi when the letter is a descent.

    Replaying the tree must reproduce the facet set; that is asserted here.
    """
    if delta.is_void():
        raise ValueError("cannot decompose the void complex")
    cox = delta.cox
    tree = _decompose(delta.word, delta.pi, tuple(range(len(delta.word))), cox)
    assert replay(tree) == delta.facets
    return tree


def _decompose(word: tuple, pi, labels: tuple, cox: CoxeterSystem):
    if not contains(word, pi, cox):
        return VOID_LEAF
    if not word:
        return EMPTY_LEAF
    if cox.length(pi) == len(word):
        # the whole word is forced: single facet = empty set
        return EMPTY_LEAF
    sigma = word[0]
    rest, rest_labels = word[1:], labels[1:]
    link_tree = _decompose(rest, pi, rest_labels, cox)
    spi = cox.left_mul(sigma, pi)
    if cox.length(spi) < cox.length(pi):
        del_tree = _decompose(rest, spi, rest_labels, cox)
        return DecompositionNode(labels[0], False, link_tree, del_tree)
    return DecompositionNode(labels[0], True, link_tree, None)


def replay(tree) -> frozenset:
    """Facet set encoded by a decomposition tree."""
    if tree == VOID_LEAF:
        return frozenset()
    if tree == EMPTY_LEAF:
        return frozenset([frozenset()])
    with_v = frozenset(f | {tree.vertex} for f in replay(tree.link))
    if tree.cone:
        return with_v
    return replay(tree.deletion) | with_v


def shelling_from_decomposition(tree) -> list[frozenset]:
    """Provan-Billera: shell the deletion first, then the cone over the link."""
    if tree == VOID_LEAF:
        return []
    if tree == EMPTY_LEAF:
        return [frozenset()]
    coned = [f | {tree.vertex} for f in shelling_from_decomposition(tree.link)]
    if tree.cone:
        return coned
    return shelling_from_decomposition(tree.deletion) + coned


def is_shelling(order: Sequence[frozenset], facets: Iterable[frozenset]) -> bool:
    """Check that the ordered facets satisfy the shelling condition: each new
    facet meets the union of its predecessors in a nonempty union of its
    codimension-1 faces (vacuous for the first facet and for 0-size facets)."""
    order = [frozenset(f) for f in order]
    facets = set(facets)
    if set(order) != facets or len(order) != len(facets):
        return False
    for idx in range(1, len(order)):
        f = order[idx]
        overlap = frozenset().union(*(f & g for g in order[:idx]))
        ridge_union = frozenset()
        hit = False
        for x in f:
            if f - {x} <= overlap:
                hit = True
                ridge_union |= f - {x}
        if not hit or ridge_union != overlap:
            return False
    return True


def decomposition_to_jsonable(tree) -> object:
    if tree in (VOID_LEAF, EMPTY_LEAF):
        return tree
    return {
        "vertex": tree.vertex,
        "cone": tree.cone,
        "link": decomposition_to_jsonable(tree.link),
        "deletion": None if tree.cone else decomposition_to_jsonable(tree.deletion),
    }


def square_word(n: int) -> tuple[int, ...]:
    """The word of the fully crossed n x n grid, read row by row, right to
    left: row i contributes s_{n+i-1} ... s_i (letters in S_2n)."""
    out = []
    for i in range(1, n + 1):
        out.extend(range(n + i - 1, i - 1, -1))
    return tuple(out)


def grid_position_cell(n: int, position: int) -> tuple[int, int]:
    """Cell (i, j) of the square-word position (row-major, right to left)."""
    i, k = divmod(position, n)
    return (i + 1, n - k)
