"""Weyl orbits of A_N as distinct permutations of the dominant mu tuple.

The Weyl group of A_N acts on mu tuples by permuting coordinates, so an
orbit is the set of distinct rearrangements of the dominant representative.
"""
from __future__ import annotations

from collections import Counter
from math import factorial, prod
from typing import Iterator, Sequence

import numpy as np

from .lattice import Weight, canonical, lambda_to_mu, mu_to_lambda, require_dominant, xi


def orbit_dimension(m: Sequence[int]) -> int:
    """Number of weights in the orbit of the dominant weight ``m``.

    ``(N+1)! / (xi * (N+1-i_top)!)`` where ``i_top`` is the largest index
    with a nonzero coefficient.
    """
    m = require_dominant(m)
    N = len(m)
    nonzero = [i for i, r in enumerate(m, start=1) if r]
    if not nonzero:
        return 1
    return factorial(N + 1) // (xi(m) * factorial(N + 1 - nonzero[-1]))


def multiset_permutation_count(a: Sequence[int]) -> int:
    return factorial(len(a)) // prod(factorial(c) for c in Counter(a).values())


def dominant_representative(a: Sequence[int]) -> Weight:
    """Lambda coordinates of the dominant weight in the orbit of mu tuple ``a``."""
    return mu_to_lambda(sorted(a, reverse=True))


def enumerate_orbit(m: Sequence[int]) -> Iterator[Weight]:
    """Stream the orbit of ``m`` as canonical mu tuples, lexicographically decreasing."""
    a = list(lambda_to_mu(require_dominant(m)))
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] <= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] >= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _expand_block(prefix: tuple[int, ...], values: np.ndarray,
                  counts: np.ndarray) -> np.ndarray:
    # Breadth-first over positions; np.nonzero walks rows in order and values
    # in descending order, so the output stays lexicographically decreasing.
    rows = np.array([prefix], dtype=np.int64).reshape(1, len(prefix))
    cnt = counts[None, :].copy()
    for _ in range(int(counts.sum())):
        r, d = np.nonzero(cnt > 0)
        rows = np.concatenate([rows[r], values[d][:, None]], axis=1)
        cnt = cnt[r]
        cnt[np.arange(len(r)), d] -= 1
    return rows


def iter_orbit_blocks(m: Sequence[int], *, shift: int = 0,
                      max_rows: int = 1 << 17) -> Iterator[np.ndarray]:
    """Yield the orbit of ``m`` as int64 arrays of at most ``max_rows`` rows.

    Concatenating the blocks reproduces :func:`enumerate_orbit` exactly; the
    orbit is split by leading entries so memory stays bounded.  ``shift`` is
    added to every coordinate (a gauge change).
    """
    a = lambda_to_mu(require_dominant(m))
    c = Counter(x + shift for x in a)
    values = np.array(sorted(c, reverse=True), dtype=np.int64)
    counts = np.array([c[v] for v in values], dtype=np.int64)

    def walk(prefix, counts):
        remaining = [v for v, k in zip(values.tolist(), counts.tolist()) for _ in range(k)]
        if multiset_permutation_count(remaining) <= max_rows:
            yield _expand_block(prefix, values, counts)
            return
        for d in range(len(values)):
            if counts[d]:
                sub = counts.copy()
                sub[d] -= 1
                yield from walk(prefix + (int(values[d]),), sub)

    yield from walk((), counts)


def orbit_elements(m: Sequence[int]) -> list[Weight]:
    """Materialized orbit; only for small orbits and tests."""
    return list(enumerate_orbit(m))


def is_orbit_element(a: Sequence[int], m: Sequence[int]) -> bool:
    return dominant_representative(canonical(a)) == tuple(m)
