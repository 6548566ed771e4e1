"""Weights of A_N in the two bases, partitions, and combinatorial scalars.

Weights are plain integer tuples.  A *lambda weight* ``m`` has N entries, the
coefficients on the fundamental dominant weights ``lambda_1 .. lambda_N``.
A *mu tuple* ``a`` has N+1 entries, the coefficients on the weights
``mu_1 .. mu_{N+1}`` of the defining representation, where
``lambda_i = mu_1 + ... + mu_i``.  Because the ``mu_I`` sum to zero, a mu
tuple is only defined up to a uniform shift; the canonical gauge has
``min(a) == 0``.

Partitions are non-increasing tuples of positive integers.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import InvalidWeightError

Weight = tuple[int, ...]
Partition = tuple[int, ...]


# -- weights -----------------------------------------------------------------

def _check_rank(w: Sequence[int], N: int | None, extra: int = 0) -> int:
    if N is None:
        N = len(w) - extra
    if N < 1:
        raise InvalidWeightError(f"rank must be >= 1, got {N}")
    if len(w) != N + extra:
        raise InvalidWeightError(
            f"expected {N + extra} coordinates for rank {N}, got {len(w)}")
    return N


def canonical(a: Sequence[int]) -> Weight:
    """Shift a mu tuple so that its smallest entry is zero."""
    low = min(a)
    return tuple(x - low for x in a)


def lambda_to_mu(m: Sequence[int], N: int | None = None) -> Weight:
    """Convert lambda coefficients to the canonical mu tuple.

    >>> lambda_to_mu((-1, 2, -1, 1, 1, -1, 1))
    (2, 3, 1, 2, 1, 0, 1, 0)
    """
    _check_rank(m, N)
    a = [0] * (len(m) + 1)
    for i in range(len(m) - 1, -1, -1):
        a[i] = a[i + 1] + m[i]
    return canonical(a)


def mu_to_lambda(a: Sequence[int], N: int | None = None) -> Weight:
    """Inverse of :func:`lambda_to_mu`; invariant under uniform shifts."""
    _check_rank(a, N, extra=1)
    return tuple(a[i] - a[i + 1] for i in range(len(a) - 1))


def is_dominant(m: Sequence[int]) -> bool:
    return all(x >= 0 for x in m)


def require_dominant(m: Sequence[int]) -> Weight:
    m = tuple(int(x) for x in m)
    if not m:
        raise InvalidWeightError("weight must have at least one coordinate")
    if not is_dominant(m):
        raise InvalidWeightError(f"weight {m} is not dominant")
    return m


def fundamental(i: int, N: int) -> Weight:
    """The lambda coordinates of ``lambda_i``; ``i = 0`` gives the zero weight."""
    if not 0 <= i <= N:
        raise InvalidWeightError(f"no fundamental weight lambda_{i} at rank {N}")
    return tuple(1 if j == i - 1 else 0 for j in range(N))


def height(m: Sequence[int]) -> int:
    """Sum of the canonical mu tuple, i.e. the level used to order weights."""
    return sum(lambda_to_mu(m))


def xi(m: Sequence[int]) -> int:
    """Product of factorials of the multiplicities of distinct nonzero mu entries."""
    m = require_dominant(m)
    counts = Counter(x for x in lambda_to_mu(m) if x)
    return prod(factorial(c) for c in counts.values())


def xi_from_positions(m: Sequence[int]) -> int:
    """``prod_j (i_j - i_{j-1})!`` over the positions ``i_j`` of nonzero coefficients."""
    m = require_dominant(m)
    result, prev = 1, 0
    for i, r in enumerate(m, start=1):
        if r:
            result *= factorial(i - prev)
            prev = i
    return result


# -- partitions --------------------------------------------------------------

def partitions(s: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``s`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = s
    if s == 0:
        yield ()
        return
    for first in range(min(s, max_part), 0, -1):
        for rest in partitions(s - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_partitions(s: int) -> tuple[Partition, ...]:
    return tuple(partitions(s))


def partitions_into_k(s: int, k: int) -> list[Partition]:
    return [p for p in all_partitions(s) if len(p) == k]


def partitions_no_ones(s: int) -> list[Partition]:
    """Partitions of ``s`` with every part at least 2."""
    return [p for p in all_partitions(s) if p[-1] >= 2] if s >= 2 else []


def kappa(s: int) -> int:
    """Number of partitions of ``s`` into parts >= 2."""
    return len(partitions_no_ones(s))


def partition_xi(p: Sequence[int]) -> int:
    """Product of factorials of the multiplicities of equal parts."""
    return prod(factorial(c) for c in Counter(p).values())


def multinomial(p: Sequence[int]) -> int:
    """``(p_1 + ... + p_k)! / (p_1! ... p_k!)``."""
    return factorial(sum(p)) // prod(factorial(x) for x in p)


def monomial_count(p: Sequence[int], n: int) -> int:
    """Number of distinct monomials of shape ``p`` in ``n`` variables."""
    k = len(p)
    if k > n:
        return 0
    return comb(n, k) * factorial(k) // partition_xi(p)


def parse_partition(text: str) -> Partition:
    parts = tuple(sorted((int(x) for x in text.replace(" ", "").split(",") if x),
                         reverse=True))
    if not parts or parts[-1] < 1:
        raise ValueError(f"not a partition: {text!r}")
    return parts


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)
