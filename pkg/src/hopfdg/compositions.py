"""Streams of subsets and set compositions of a finite label set.

Labels are plain strings ordered lexicographically; that order fixes the
enumeration order everywhere, so repeated runs produce identical streams.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import SizeLimitError
from .limits import SUBSET_BOUND


def canonical_labels(labels: Iterable[str]) -> tuple[str, ...]:
    """Sorted, duplicate-free label tuple; rejects non-string labels."""
    seen = set()
    out = []
    for lab in labels:
        if not isinstance(lab, str) or not lab:
            raise ValueError(f"labels must be non-empty strings, got {lab!r}")
        if lab in seen:
            raise ValueError(f"duplicate label {lab!r}")
        seen.add(lab)
        out.append(lab)
    return tuple(sorted(out))


def subsets(labels: Iterable[str], *, bound: int = SUBSET_BOUND) -> Iterator[frozenset[str]]:
    """All subsets of the label set, empty set first.

    The order follows binary counting on the sorted labels: the subset
    containing only the smallest label comes right after the empty set.
    """
    verts = canonical_labels(labels)
    n = len(verts)
    if n > bound:
        raise SizeLimitError(f"subset enumeration over {n} labels exceeds bound {bound}")
    for mask in range(1 << n):
        yield frozenset(verts[i] for i in range(n) if mask >> i & 1)


def compositions(labels: Iterable[str], k: int) -> Iterator[tuple[frozenset[str], ...]]:
    """All ordered sequences of k non-empty disjoint blocks covering the labels.

    Enumeration order is lexicographic in the block-assignment vector over
    the sorted labels, so ({'a'}, {'b'}) precedes ({'b'}, {'a'}).  For k
    outside 1..|labels| the stream is empty, except that the empty label
    set with k = 0 yields the one empty composition.
    """
    verts = canonical_labels(labels)
    n = len(verts)
    if n == 0:
        if k == 0:
            yield ()
        return
    if k < 1 or k > n:
        return

    assignment = [0] * n
    hit = [False] * k  # which blocks already received a label

    def walk(i: int, used: int) -> Iterator[tuple[frozenset[str], ...]]:
        if k - used > n - i:
            return  # too few labels left to fill every block
        if i == n:
            blocks: list[list[str]] = [[] for _ in range(k)]
            for j, lab in enumerate(verts):
                blocks[assignment[j]].append(lab)
            yield tuple(frozenset(b) for b in blocks)
            return
        for color in range(k):
            assignment[i] = color
            fresh = not hit[color]
            hit[color] = True
            yield from walk(i + 1, used + fresh)
            if fresh:
                hit[color] = False

    yield from walk(0, 0)
