"""Schubert determinantal generators, antidiagonal ideals J_w, and the
Stanley-Reisner complex of an antidiagonal ideal.

Generators and squarefree monomials are represented by their supports:
frozensets of grid cells (i, j), 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable

from . import perm, pipedream
from .limits import size_guard
from .perm import Perm

Cell = tuple[int, int]


@dataclass(frozen=True)
class Minor:
    """A minor of the generic matrix, named by its row and column sets."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("a minor needs equal, nonempty row and column sets")

    @property
    def size(self) -> int:
        return len(self.rows)

    def antidiagonal(self) -> frozenset:
        """Cells of the main antidiagonal: row k pairs with column size-k."""
        return frozenset(
            (self.rows[k], self.cols[self.size - 1 - k]) for k in range(self.size)
        )

    def to_jsonable(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    n: int
    generators: frozenset  # of frozensets of cells, inclusion-minimal


def rothe_diagram(w: Perm) -> set[Cell]:
    """Cells (i, j) with j < w(i) and i < w^-1(j)."""
    w = perm.validate(w)
    inv = perm.inverse(w)
    n = len(w)
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if j < w[i - 1] and i < inv[j - 1]
    }


def essential_cells(w: Perm) -> set[Cell]:
    """Fulton's essential set: southeast corners of the Rothe diagram."""
    diagram = rothe_diagram(w)
    return {
        (i, j)
        for (i, j) in diagram
        if (i + 1, j) not in diagram and (i, j + 1) not in diagram
    }


def schubert_generators(w: Perm, pruned: bool = True) -> frozenset:
    """Minors of size 1 + rank(q, p) in the northwest q x p submatrix.

    With ``pruned`` only positions at an essential rank level emit minors:
    a position (q, p) contributes iff some Fulton-essential cell shares its
    rank.  That keeps every essential minor (so the set still generates) but
    drops the larger minors the smaller ones imply by Laplace expansion.
    Without ``pruned`` every position contributes, per the raw definition.
    Duplicate minors collapse either way.
    """
    w = perm.validate(w)
    n = len(w)
    ranks = perm.rank_matrix(w)
    if pruned:
        levels = {ranks[q - 1][p - 1] for (q, p) in essential_cells(w)}
    else:
        levels = None
    out = set()
    for q in range(1, n + 1):
        for p in range(1, n + 1):
            r = ranks[q - 1][p - 1]
            if levels is not None and r not in levels:
                continue
            k = r + 1
            if k > min(q, p):
                continue
            for rows in itertools.combinations(range(1, q + 1), k):
                for cols in itertools.combinations(range(1, p + 1), k):
                    out.add(Minor(rows, cols))
    return frozenset(out)


def minimalize(sets: Iterable[frozenset]) -> frozenset:
    """Inclusion-minimal members of a family of sets."""
    pool = sorted(set(sets), key=len)
    kept: list[frozenset] = []
    for s in pool:
        if not any(k <= s for k in kept):
            kept.append(s)
    return frozenset(kept)


@cache
def antidiagonal_ideal(w: Perm) -> SquarefreeMonomialIdeal:
    """J_w: antidiagonals of the Schubert determinantal minors, minimalized."""
    w = perm.validate(w)
    gens = minimalize(m.antidiagonal() for m in schubert_generators(w))
    return SquarefreeMonomialIdeal(len(w), gens)


def monomial_in_ideal(support: frozenset, ideal: SquarefreeMonomialIdeal) -> bool:
    """Whether the squarefree monomial with this support lies in the ideal."""
    return any(g <= support for g in ideal.generators)


def minimal_covers(
    generators: Iterable[frozenset], max_size: int | None = None
) -> set[frozenset]:
    """All inclusion-minimal hitting sets of a family of nonempty sets.

    Branches on the vertices of a smallest unhit set; once a branch vertex is
    passed over it is forbidden downstream, so each minimal cover appears in
    exactly one branch.  Candidates are filtered to inclusion-minimal ones at
    the end (the branching alone can emit irredundant non-minimal covers).
    """
    gens = [frozenset(g) for g in generators]
    if any(not g for g in gens):
        raise ValueError("empty generator cannot be hit")
    found: set[frozenset] = set()

    def rec(chosen: frozenset, remaining: list[frozenset], forbidden: frozenset):
        if max_size is not None and len(chosen) > max_size:
            return
        if not remaining:
            found.add(chosen)
            return
        g = min(remaining, key=lambda s: len(s - forbidden))
        banned = set()
        for v in sorted(g - forbidden):
            rec(
                chosen | {v},
                [h for h in remaining if v not in h],
                forbidden | banned,
            )
            banned.add(v)

    rec(frozenset(), gens, frozenset())
    return set(minimalize(found))


def stanley_reisner_facets(ideal: SquarefreeMonomialIdeal) -> frozenset:
    """Facets of the complex whose Stanley-Reisner ideal this is.

    Facets are complements (in the full n x n vertex set) of minimal vertex
    covers of the generator hypergraph.
    """
    size_guard(ideal.n, 6, "stanley_reisner_facets")
    vertices = frozenset(
        (i, j) for i in range(1, ideal.n + 1) for j in range(1, ideal.n + 1)
    )
    if not ideal.generators:
        return frozenset([vertices])
    covers = minimal_covers(ideal.generators)
    return frozenset(vertices - c for c in covers)


def facet_complement_dreams(w: Perm) -> frozenset:
    """{D_L : L facet of the complex of J_w} as pipe dreams."""
    w = perm.validate(w)
    n = len(w)
    ideal = antidiagonal_ideal(w)
    vertices = frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    return frozenset(
        pipedream.PipeDream(n, vertices - f) for f in stanley_reisner_facets(ideal)
    )


def prime_decomposition_check(w: Perm) -> bool:
    """Facet complements of the complex of J_w equal RP(w) (brute-force)."""
    w = perm.validate(w)
    return facet_complement_dreams(w) == pipedream.rp_bruteforce(w)
