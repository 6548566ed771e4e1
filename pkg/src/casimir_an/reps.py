"""Irreducible representations of A_N: dimensions, multiplicities, orbit content.

Inside the Freudenthal recursion weights are mu tuples in a *fixed-sum*
gauge (the sum of the highest weight's canonical tuple), so roots
``mu_I - mu_J`` act by moving one unit between coordinates and the
dominant weights of the representation are exactly the non-increasing
tuples dominated by the highest weight.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .lattice import Weight, canonical, lambda_to_mu, mu_to_lambda, require_dominant
from .orbit_char import CofVector, FORMULA, ch_orbit, cof_extract
from .orbits import orbit_dimension
from .symfun import MONOMIAL, SymExpr


def inner_product(a: Sequence, b: Sequence) -> Fraction:
    """Centred Euclidean pairing of mu tuples; long roots have length squared 2."""
    n = len(a)
    if len(b) != n:
        raise ValueError("tuples must have equal length")
    return (sum(Fraction(x) * y for x, y in zip(a, b))
            - Fraction(sum(a)) * sum(b) / n)


def theta(m: Sequence[int]) -> tuple[Fraction, ...]:
    """Shifted zero-sum coordinates: ``theta_i - theta_{i+1} = 1 + r_i``, ``sum theta = 0``."""
    m = require_dominant(m)
    n = len(m) + 1
    t = [Fraction(a + n - 1 - i) for i, a in enumerate(lambda_to_mu(m))]
    mean = sum(t) / n
    return tuple(x - mean for x in t)


def weyl_dim(m: Sequence[int]) -> int:
    """Dimension ``prod_{i<j} (theta_i - theta_j) / (j - i)``."""
    t = theta(m)
    d = Fraction(1)
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            d *= (t[i] - t[j]) / (j - i)
    assert d.denominator == 1
    return int(d)


def _dominated(a: Sequence[int], b: Sequence[int]) -> bool:
    """Partial sums of ``a`` never exceed those of ``b`` (equal totals assumed)."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def _dominated_tuples(top: Weight) -> Iterator[Weight]:
    n = len(top)
    bounds = []
    acc = 0
    for x in top:
        acc += x
        bounds.append(acc)
    total = acc

    def walk(prefix, acc, cap):
        i = len(prefix)
        if i == n - 1:
            last = total - acc
            if 0 <= last <= cap:
                yield tuple(prefix) + (last,)
            return
        for v in range(min(cap, bounds[i] - acc), -1, -1):
            # remaining entries are at most v each
            if acc + v + v * (n - 1 - i) < total:
                break
            yield from walk(prefix + [v], acc + v, v)

    yield from walk([], 0, top[0])


@lru_cache(maxsize=4096)
def _freudenthal_mu(top: Weight) -> tuple[tuple[Weight, int], ...]:
    n = len(top)
    rho = tuple(range(n - 1, -1, -1))

    def norm(v):
        return sum((x + r) ** 2 for x, r in zip(v, rho))

    weights = sorted(_dominated_tuples(top), key=lambda v: (-norm(v), [-x for x in v]))
    top_norm = norm(top)
    mult: dict[Weight, int] = {}
    for lam in weights:
        if lam == top:
            mult[lam] = 1
            continue
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                v = list(lam)
                while True:
                    v[i] += 1
                    v[j] -= 1
                    dom = tuple(sorted(v, reverse=True))
                    if not _dominated(dom, top):
                        break
                    total += mult.get(dom, 0) * (v[i] - v[j])
        value = Fraction(2 * total, top_norm - norm(lam))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {lam}")
        mult[lam] = int(value)
    return tuple((w, c) for w, c in mult.items() if c)


def freudenthal(m: Sequence[int]) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of the irreducible representation ``m``.

    Keys are lambda coordinates, ordered from the highest weight downwards.
    """
    m = require_dominant(m)
    return {mu_to_lambda(w): c for w, c in _freudenthal_mu(lambda_to_mu(m))}


@dataclass(frozen=True)
class OrbitalDecomposition:
    highest: Weight
    entries: tuple[tuple[Weight, int], ...]

    @property
    def rank(self) -> int:
        return len(self.highest)

    def dimension(self) -> int:
        return sum(c * orbit_dimension(w) for w, c in self.entries)

    def to_json(self) -> list[dict]:
        return [{"lambda": list(w), "mu": list(lambda_to_mu(w)), "multiplicity": c,
                 "orbit_dimension": orbit_dimension(w)} for w, c in self.entries]


def orbital_decomposition(m: Sequence[int]) -> OrbitalDecomposition:
    """The representation as a multiplicity-weighted sum of Weyl orbits."""
    m = require_dominant(m)
    return OrbitalDecomposition(m, tuple(freudenthal(m).items()))


def ch_rep(m: Sequence[int], s: int, method: str = FORMULA) -> SymExpr:
    """``ch_s`` of the irreducible representation with highest weight ``m``."""
    out = SymExpr.zero(MONOMIAL)
    for w, c in orbital_decomposition(m).entries:
        out = out + ch_orbit(w, s, method) * c
    return out


@lru_cache(maxsize=4096)
def _cof_rep(m: Weight, s: int) -> tuple:
    return tuple(cof_extract(ch_rep(m, s), s).items())


def cof_rep(m: Sequence[int], s: int) -> CofVector:
    """cof coefficients of ``ch_s`` of the representation ``m``."""
    return dict(_cof_rep(require_dominant(m), s))


def sub_dominant_weights(m: Sequence[int]) -> list[Weight]:
    """Dominant weights below ``m`` in the root order (including ``m``), as lambda tuples."""
    top = lambda_to_mu(require_dominant(m))
    return [mu_to_lambda(canonical(w)) for w in _dominated_tuples(top)]
