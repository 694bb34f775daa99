"""Permutations of {1..n} in one-line notation.

A permutation is a plain tuple ``w`` of the integers 1..n where ``w[i-1]``
is the image w(i).  Positions, rows, columns, and reflection indices are all
1-based to match the combinatorics conventions; only tuple access is 0-based.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def validate(w: Sequence[int]) -> Perm:
    """Return ``w`` as a tuple after checking it is a bijection of {1..n}."""
    t = tuple(w)
    if sorted(t) != list(range(1, len(t) + 1)):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t!r}")
    return t


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def long_element(n: int) -> Perm:
    """The long permutation w0 = n n-1 ... 2 1."""
    return tuple(range(n, 0, -1))


def length(w: Perm) -> int:
    """Number of inversions.

    >>> length((2, 1, 4, 3))
    2
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def multiply(u: Perm, v: Perm) -> Perm:
    """Compose permutations: (u * v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def simple_reflection(n: int, i: int) -> Perm:
    """The adjacent transposition s_i in S_n, 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"reflection index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def apply_right_transposition(w: Perm, i: int) -> Perm:
    """w * s_i: swap the entries in positions i and i+1."""
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"reflection index {i} out of range for n={len(w)}")
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def apply_left_transposition(i: int, w: Perm) -> Perm:
    """s_i * w: swap the values i and i+1 wherever they occur."""
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"reflection index {i} out of range for n={len(w)}")
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(v, v) for v in w)


def is_right_descent(w: Perm, i: int) -> bool:
    """True iff length(w * s_i) < length(w), i.e. w(i) > w(i+1)."""
    return w[i - 1] > w[i]


def descents(w: Perm) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def lehmer_code(w: Perm) -> tuple[int, ...]:
    """code(w)_i = #{j > i : w(j) < w(i)}; the code sums to length(w)."""
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)
    )


def rank_matrix(w: Perm) -> tuple[tuple[int, ...], ...]:
    """Northwest rank matrix: entry (q,p) is #{i <= q : w(i) <= p}.

    Entry access is ``rank_matrix(w)[q-1][p-1]``.
    """
    n = len(w)
    rows = []
    for q in range(1, n + 1):
        rows.append(
            tuple(sum(1 for i in range(q) if w[i] <= p) for p in range(1, n + 1))
        )
    return tuple(rows)


def permutation_from_rank_matrix(r: Sequence[Sequence[int]]) -> Perm:
    """Invert rank_matrix: w(q) is the unique p where the rank jumps by 1."""
    n = len(r)

    def entry(q: int, p: int) -> int:
        if q == 0 or p == 0:
            return 0
        return r[q - 1][p - 1]

    images = []
    for q in range(1, n + 1):
        for p in range(1, n + 1):
            if entry(q, p) - entry(q - 1, p) - entry(q, p - 1) + entry(q - 1, p - 1) == 1:
                images.append(p)
                break
        else:
            raise ValueError("not a permutation rank matrix")
    return validate(images)


def reduced_word_to_w0(w: Perm) -> tuple[int, ...]:
    """Indices i_1..i_k with w0*w = s_{i_1}...s_{i_k} and k = length(w0*w).

    Deterministic: letters are peeled off the right end of w0*w, always
    taking the smallest right descent.  Multiplying w0 on the right by
    s_{i_1}, then s_{i_2}, ... walks the weak order down from w0 to w,
    dropping length by one at each step.
    """
    n = len(w)
    u = list(multiply(long_element(n), validate(w)))
    tail = []
    while True:
        i = next((i for i in range(1, n) if u[i - 1] > u[i]), None)
        if i is None:
            break
        tail.append(i)
        u[i - 1], u[i] = u[i], u[i - 1]
    tail.reverse()
    return tuple(tail)


def permutation_from_word(n: int, word: Sequence[int]) -> Perm:
    """Multiply out s_{i_1} * s_{i_2} * ... * s_{i_k} in S_n."""
    w = identity(n)
    for i in word:
        w = apply_right_transposition(w, i)
    return w


def embed(w: Perm, m: int) -> Perm:
    """View w in S_m for m >= n, fixing the letters n+1..m."""
    if m < len(w):
        raise ValueError(f"cannot embed S_{len(w)} into S_{m}")
    return tuple(w) + tuple(range(len(w) + 1, m + 1))


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))
