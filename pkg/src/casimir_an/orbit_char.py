"""Power-sum characters ``ch_s`` of Weyl orbits and their cof coefficients.

``ch_s`` of an orbit is the formal sum over its weights ``w`` of
``(sum_I w_I mu_I)^s``, written in monomial generators ``mu(s_1..s_k)``.  It
is computed two independent ways: a closed formula driven by the dominant
mu tuple alone, and a brute-force sum over the enumerated orbit.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterable, Sequence

import numpy as np

from .lattice import (Partition, Weight, all_partitions, lambda_to_mu, monomial_count,
                      multinomial, partition_xi, partitions_no_ones, require_dominant)
from .orbits import iter_orbit_blocks
from .symfun import MONOMIAL, SymExpr, drop_first_power, eval_monomial, monomial_to_power

CofVector = dict[Partition, Fraction]

FORMULA = "formula"
BRUTEFORCE = "bruteforce"


def omega(q: Sequence[int], s: int, N: int) -> SymExpr:
    """Orbit sum of ``(w . mu)^s`` times ``xi`` of the orbit, in monomial generators.

    ``q`` holds the strictly positive entries of the dominant mu tuple.  Each
    partition ``(s_1..s_k)`` of ``s`` with ``k <= len(q)`` contributes
    ``(N+1-k)! xi(parts) M(parts) q(parts) mu(parts) / (N+1-len(q))!``.
    """
    q = tuple(sorted(q, reverse=True))
    sigma = len(q)
    if any(x <= 0 for x in q):
        raise ValueError("q entries must be positive")
    if sigma > N + 1:
        raise ValueError(f"{sigma} entries exceed the N+1 = {N + 1} coordinates")
    terms = {}
    for p in all_partitions(s):
        k = len(p)
        if k > sigma:
            continue
        terms[p] = Fraction(factorial(N + 1 - k) * partition_xi(p) * multinomial(p)
                            * eval_monomial(p, q), factorial(N + 1 - sigma))
    return SymExpr(MONOMIAL, terms)


def _ch_formula(m: Weight, s: int) -> SymExpr:
    q = tuple(x for x in lambda_to_mu(m) if x)
    if not q:
        return SymExpr.zero(MONOMIAL)
    return omega(q, s, len(m)) * Fraction(1, partition_xi(q))


def _column_powers(block: np.ndarray, top: int) -> list[np.ndarray]:
    pw = [np.ones_like(block)]
    for _ in range(top):
        pw.append(pw[-1] * block)
    return pw


def _ch_bruteforce(m: Weight, s: int, shift: int = 0) -> SymExpr:
    # The orbit sum is symmetric, so the coefficient of mu(p) equals the
    # coefficient of the single monomial mu_1^{p_1} ... mu_k^{p_k}, which for
    # one weight w is M(p) w_1^{p_1} ... w_k^{p_k}.
    n = len(m) + 1
    shapes = [p for p in all_partitions(s) if len(p) <= n]
    sums = {p: 0 for p in shapes}
    bound = max(abs(x + shift) for x in lambda_to_mu(m)) ** s
    for block in iter_orbit_blocks(m, shift=shift):
        if bound * len(block) >= 2 ** 62:
            block = block.astype(object)
        pw = _column_powers(block, s)
        for p in shapes:
            col = pw[p[0]][:, 0]
            for j, e in enumerate(p[1:], start=1):
                col = col * pw[e][:, j]
            sums[p] += int(col.sum())
    return SymExpr(MONOMIAL, {p: multinomial(p) * v for p, v in sums.items()})


def ch_orbit(m: Sequence[int], s: int, method: str = FORMULA, *, shift: int = 0) -> SymExpr:
    """``ch_s`` of the Weyl orbit of the dominant weight ``m`` (rank ``len(m)``).

    ``method`` is ``"formula"`` or ``"bruteforce"``.  ``shift`` adds a constant
    to every mu coordinate before brute-force expansion; it changes the
    monomial expression but not its cof coefficients.
    """
    m = require_dominant(m)
    if s < 1:
        raise ValueError("order must be >= 1")
    if method == FORMULA:
        if shift:
            raise ValueError("shift only applies to the brute-force method")
        return _ch_formula(m, s)
    if method == BRUTEFORCE:
        return _ch_bruteforce(m, s, shift)
    raise ValueError(f"unknown method {method!r}")


def expand_weight_power(a: Sequence[int], s: int) -> dict[Partition, int]:
    """Fully expand ``(sum_I a_I mu_I)^s`` and bucket monomials by exponent shape.

    Returns ``{shape: sum of coefficients of all monomials with that shape}``.
    Zero coordinates are skipped since they cannot contribute.
    """
    support = [x for x in a if x]
    out: dict[Partition, int] = {}
    for picks in combinations_with_replacement(range(len(support)), s):
        exps: dict[int, int] = {}
        for i in picks:
            exps[i] = exps.get(i, 0) + 1
        shape = tuple(sorted(exps.values(), reverse=True))
        coeff = multinomial(shape) * prod(support[i] ** e for i, e in exps.items())
        out[shape] = out.get(shape, 0) + coeff
    return out


def ch_collection(weights: Iterable[Sequence[int]], s: int, n: int) -> SymExpr:
    """Symmetric part of ``sum_w (w . mu)^s`` for any collection of mu tuples of length n.

    For a Weyl-invariant collection (an orbit or a representation) this is
    the character itself.
    """
    totals: dict[Partition, int] = {}
    for a in weights:
        if len(a) != n:
            raise ValueError(f"expected {n} coordinates, got {len(a)}")
        for shape, v in expand_weight_power(a, s).items():
            totals[shape] = totals.get(shape, 0) + v
    return SymExpr(MONOMIAL, {p: Fraction(v, monomial_count(p, n))
                              for p, v in totals.items() if len(p) <= n})


def reduce_character(expr: SymExpr) -> SymExpr:
    """Power-basis form of a monomial-basis character with ``mu(1) = 0`` imposed."""
    return drop_first_power(monomial_to_power(expr))


def cof_extract(expr: SymExpr, s: int) -> CofVector:
    """cof coefficients of a degree-``s`` character, one per partition of s without 1s."""
    if expr.basis != MONOMIAL:
        raise ValueError("expected a monomial-basis expression")
    if expr and expr.degrees() != {s}:
        raise ValueError(f"expression is not homogeneous of degree {s}")
    reduced = reduce_character(expr)
    return {p: reduced.coefficient(p) for p in partitions_no_ones(s)}


def cof_to_json(cof: CofVector) -> dict[str, str]:
    return {",".join(map(str, p)): str(v) for p, v in cof.items()}
