"""Formal symmetric functions over the coordinates ``mu_1 .. mu_{N+1}``.

Two bases are used.  In the *monomial* basis a key ``(s_1, ..., s_k)`` is the
generator ``mu(s_1, ..., s_k)``, the sum of the distinct monomials
``mu_{I_1}^{s_1} ... mu_{I_k}^{s_k}`` with pairwise different indices (each
distinct monomial counted once).  In the *power* basis a key is a multiset of
power-sum indices, so ``(4, 2, 2)`` stands for ``mu(4) mu(2)^2`` and ``()`` for
the constant 1.  The same machinery evaluates the numeric ``q`` generators of
a weight, by substituting values for the coordinates.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .errors import UndefinedGeneratorError
from .lattice import Partition, all_partitions

MONOMIAL = "monomial"
POWER = "power"


def _key(parts: Iterable[int]) -> Partition:
    return tuple(sorted(parts, reverse=True))


class SymExpr:
    """Exact rational linear combination of symmetric-function basis symbols."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Sequence[int], object] | None = None):
        if basis not in (MONOMIAL, POWER):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms: dict[Partition, Fraction] = {}
        for k, v in (terms or {}).items():
            v = Fraction(v)
            if v:
                k = _key(k)
                total = self.terms.get(k, 0) + v
                if total:
                    self.terms[k] = total
                else:
                    self.terms.pop(k, None)

    @classmethod
    def zero(cls, basis: str) -> "SymExpr":
        return cls(basis)

    @classmethod
    def symbol(cls, basis: str, key: Sequence[int], coeff=1) -> "SymExpr":
        return cls(basis, {tuple(key): coeff})

    def coefficient(self, key: Sequence[int]) -> Fraction:
        return self.terms.get(_key(key), Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), [-x for x in kv[0]]))

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def _check(self, other: "SymExpr"):
        if not isinstance(other, SymExpr):
            return NotImplemented
        if other.basis != self.basis:
            raise ValueError("cannot combine expressions in different bases")
        return None

    def __add__(self, other: "SymExpr") -> "SymExpr":
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymExpr(self.basis, out)

    def __neg__(self) -> "SymExpr":
        return SymExpr(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            if self.basis != POWER or other.basis != POWER:
                raise ValueError("products are only defined in the power basis")
            out: dict[Partition, Fraction] = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    k = _key(k1 + k2)
                    out[k] = out.get(k, 0) + v1 * v2
            return SymExpr(POWER, out)
        if isinstance(other, (int, Fraction)):
            return SymExpr(self.basis, {k: v * other for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, SymExpr):
            return self.basis == other.basis and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"SymExpr({self.basis!r}, {{{', '.join(f'{k}: {v}' for k, v in self.items())}}})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{symbol_label(self.basis, k)}" for k, v in self.items())

    def to_json(self) -> dict[str, str]:
        return {symbol_label(self.basis, k): str(v) for k, v in self.items()}


def symbol_label(basis: str, key: Sequence[int]) -> str:
    """``mu(2,1,1)`` in the monomial basis, ``mu(4)*mu(2)^2`` in the power basis."""
    if basis == MONOMIAL:
        return f"mu({','.join(map(str, key))})"
    if not key:
        return "1"
    counts = Counter(key)
    return "*".join(f"mu({j})" + (f"^{c}" if c > 1 else "")
                    for j, c in sorted(counts.items(), reverse=True))


# -- reduction to power sums ---------------------------------------------------

@lru_cache(maxsize=None)
def _reduce(p: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    if len(p) <= 1:
        return ((p, Fraction(1)),)
    # mu(a) * mu(rest) = mult(a) mu(p) + sum over distinct b in rest of mu(rest with b -> a+b);
    # a is the largest part, so a+b is strictly largest and appears once.
    head, rest = p[0], p[1:]
    out = SymExpr.symbol(POWER, (head,)) * reduce_to_power(rest)
    for b in sorted(set(rest), reverse=True):
        merged = list(rest)
        merged.remove(b)
        out = out - reduce_to_power(_key(merged + [head + b]))
    out = out * Fraction(1, p.count(head))
    return tuple(out.items())


def reduce_to_power(p: Sequence[int]) -> SymExpr:
    """Express ``mu(p)`` as a polynomial in the power sums ``mu(1), mu(2), ...``."""
    p = _key(p)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    return SymExpr(POWER, dict(_reduce(p)))


def monomial_to_power(expr: SymExpr) -> SymExpr:
    if expr.basis != MONOMIAL:
        raise ValueError("expected a monomial-basis expression")
    out = SymExpr.zero(POWER)
    for k, v in expr.terms.items():
        out = out + reduce_to_power(k) * v
    return out


def drop_first_power(expr: SymExpr) -> SymExpr:
    """Impose ``mu(1) = 0`` on a power-basis expression."""
    if expr.basis != POWER:
        raise ValueError("expected a power-basis expression")
    return SymExpr(POWER, {k: v for k, v in expr.terms.items() if 1 not in k})


# -- evaluation -----------------------------------------------------------------

def eval_monomial(p: Sequence[int], values: Sequence) -> Fraction:
    """Evaluate the monomial symmetric function ``m_p`` on ``values`` directly.

    Walks the coordinates one at a time, giving each either no part or one
    of the still-unused distinct part values, so every distinct monomial is
    produced exactly once.
    """
    p = _key(p)
    if len(p) > len(values):
        raise UndefinedGeneratorError(
            f"mu{p} needs at least {len(p)} coordinates, got {len(values)}")
    parts = sorted(Counter(p).items(), reverse=True)
    part_values = tuple(v for v, _ in parts)
    vals = [Fraction(x) for x in values]
    n = len(vals)

    @lru_cache(maxsize=None)
    def walk(i: int, remaining: tuple[int, ...]) -> Fraction:
        left = sum(remaining)
        if left == 0:
            return Fraction(1)
        if n - i < left:
            return Fraction(0)
        total = walk(i + 1, remaining)
        for d, c in enumerate(remaining):
            if c:
                nxt = remaining[:d] + (c - 1,) + remaining[d + 1:]
                total += vals[i] ** part_values[d] * walk(i + 1, nxt)
        return total

    return walk(0, tuple(c for _, c in parts))


def power_sums(values: Sequence, top: int) -> list[Fraction]:
    vals = [Fraction(x) for x in values]
    return [Fraction(len(vals))] + [sum(v ** j for v in vals) for j in range(1, top + 1)]


def eval_power_product(expr: SymExpr, values: Sequence) -> Fraction:
    """Substitute ``mu(j) = sum(values ** j)`` into a power-basis expression."""
    if expr.basis != POWER:
        raise ValueError("expected a power-basis expression")
    top = max((max(k) for k in expr.terms if k), default=0)
    ps = power_sums(values, top)
    return sum((v * prod(ps[j] for j in k) for k, v in expr.terms.items()), Fraction(0))


# -- complete symmetric functions versus elementary Schur functions ----------------

@dataclass
class SchurCheck:
    k: int
    equal: bool
    difference: dict[Partition, Fraction] = field(default_factory=dict)


def complete_homogeneous(k: int) -> SymExpr:
    """``h_k`` as the sum of all monomial generators of degree ``k``."""
    return SymExpr(MONOMIAL, {p: 1 for p in all_partitions(k)})


def schur_polynomial(k: int) -> dict[Partition, Fraction]:
    """``S_k(x)`` keyed by the multiset of x indices, e.g. ``(2, 1, 1)`` is ``x_2 x_1^2``."""
    out = {}
    for p in all_partitions(k):
        out[p] = Fraction(1, prod(factorial(c) for c in Counter(p).values()))
    return out


def schur_check(k: int) -> SchurCheck:
    """Reduce ``h_k`` to power sums, replace ``mu(s) -> s x_s``, compare with ``S_k``."""
    if k < 1:
        raise ValueError("k must be positive")
    reduced = monomial_to_power(complete_homogeneous(k))
    substituted = {key: v * prod(key) for key, v in reduced.terms.items()}
    expected = schur_polynomial(k)
    diff = {}
    for key in set(substituted) | set(expected):
        d = substituted.get(key, Fraction(0)) - expected.get(key, Fraction(0))
        if d:
            diff[key] = d
    return SchurCheck(k, not diff, diff)


# -- printed reduction rules, kept as golden fixtures --------------------------------

def _pp(terms: Mapping[Sequence[int], object], scale=1) -> SymExpr:
    return SymExpr(POWER, {k: Fraction(v) * Fraction(scale) for k, v in terms.items()})


#: Closed reductions exactly as tabulated for orders 4 and 5.
PRINTED_CLOSED_RULES: dict[Partition, SymExpr] = {
    (1, 1, 1, 1): _pp({(1, 1, 1, 1): Fraction(1, 24), (2, 1, 1): Fraction(-1, 4),
                       (2, 2): Fraction(1, 8), (3, 1): Fraction(1, 3), (4,): Fraction(-1, 4)}),
    (2, 1, 1): _pp({(2, 1, 1): Fraction(1, 2), (2, 2): Fraction(-1, 2), (3, 1): -1, (4,): 1}),
    (3, 1): _pp({(3, 1): 1, (4,): -1}),
    (2, 2): _pp({(2, 2): Fraction(1, 2), (4,): Fraction(-1, 2)}),
    (4, 1): _pp({(4, 1): 1, (5,): -1}),
    (3, 2): _pp({(3, 2): 1, (5,): -1}),
    (3, 1, 1): _pp({(3, 1, 1): 1, (3, 2): -1, (4, 1): -2, (5,): 2}, Fraction(1, 2)),
    (2, 2, 1): _pp({(2, 2, 1): 1, (3, 2): -2, (4, 1): -1, (5,): 2}, Fraction(1, 2)),
    (2, 1, 1, 1): _pp({(2, 1, 1, 1): 1, (2, 2, 1): -3, (3, 1, 1): -3, (3, 2): 5,
                       (4, 1): 6, (5,): -6}, Fraction(1, 6)),
    (1, 1, 1, 1, 1): _pp({(1, 1, 1, 1, 1): 1, (2, 1, 1, 1): -10, (2, 2, 1): 15,
                          (3, 1, 1): 20, (3, 2): -20, (4, 1): -30, (5,): 24},
                         Fraction(1, 120)),
}


def _pattern(text: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(slot.split("+")) for slot in text.split(","))


@dataclass(frozen=True)
class PrintedRule:
    """A recursive rule with symbolic parts ``a > b > c``.

    Each term is ``(coefficient, factors)``, each factor a ``q(...)`` pattern
    whose slots are sums of symbols.  ``correction`` holds terms whose
    addition turns a misprinted rule into a valid identity.
    """

    label: str
    lhs: str
    scale: Fraction
    terms: tuple[tuple[int, tuple[str, ...]], ...]
    correction: tuple[tuple[int, tuple[str, ...]], ...] = ()

    def symbols(self) -> list[str]:
        seen: list[str] = []
        for slot in _pattern(self.lhs):
            for sym in slot:
                if sym not in seen:
                    seen.append(sym)
        return seen


def _rule(label, lhs, scale, terms, correction=()):
    return PrintedRule(label, lhs, Fraction(scale),
                       tuple((c, tuple(f.split(" * "))) for c, f in terms),
                       tuple((c, tuple(f.split(" * "))) for c, f in correction))


#: The recursive block for orders above 5, transcribed term for term.
PRINTED_RECURSIVE_RULES: tuple[PrintedRule, ...] = (
    _rule("q(i1,i2) = q(i1) q(i2) - q(i1+i2)", "a,b", 1,
          [(1, "a * b"), (-1, "a+b")]),
    _rule("q(i1,i1) = 1/2 (q(i1)^2 - q(i1+i1))", "a,a", Fraction(1, 2),
          [(1, "a * a"), (-1, "a+a")]),
    _rule("q(i1,i2,i2) = q(i1) q(i2,i2) - q(i1+i2,i2)", "a,b,b", 1,
          [(1, "a * b,b"), (-1, "a+b,b")]),
    _rule("q(i1,i1,i2) = 1/2 (q(i1) q(i1,i2) - q(i1+i1,i2) - q(i1+i2,i1))", "a,a,b",
          Fraction(1, 2), [(1, "a * a,b"), (-1, "a+a,b"), (-1, "a+b,a")]),
    _rule("q(i1,i2,i3) = q(i1) q(i2,i3) - q(i1+i2,i3) - q(i1+i3,i2)", "a,b,c", 1,
          [(1, "a * b,c"), (-1, "a+b,c"), (-1, "a+c,b")]),
    _rule("q(i1,i1,i1) = 1/3 (q(i1) q(i1,i1) - q(i1+i1,i1))", "a,a,a", Fraction(1, 3),
          [(1, "a * a,a"), (-1, "a+a,a")]),
    _rule("q(i1,i2,i2,i2) = q(i1) q(i2,i2,i2) - q(i1+i2,i2,i2)", "a,b,b,b", 1,
          [(1, "a * b,b,b"), (-1, "a+b,b,b")]),
    _rule("q(i1,i1,i1,i2) = 1/3 (q(i1) q(i1,i1,i2) - q(i1+i2,i1,i1))", "a,a,a,b",
          Fraction(1, 3), [(1, "a * a,a,b"), (-1, "a+b,a,a")],
          correction=[(-1, "a+a,a,b")]),
    _rule("q(i1,i1,i2,i2) = 1/2 (q(i1) q(i1,i2,i2) - q(i1+i2,i1,i2))", "a,a,b,b",
          Fraction(1, 2), [(1, "a * a,b,b"), (-1, "a+b,a,b")],
          correction=[(-1, "a+a,b,b")]),
    _rule("q(i1,i2,i3,i3) = q(i1) q(i2,i3,i3) - q(i1+i2,i3,i3) - q(i1+i3,i2,i3)",
          "a,b,c,c", 1, [(1, "a * b,c,c"), (-1, "a+b,c,c"), (-1, "a+c,b,c")]),
    _rule("q(i1,i1,i1,i1) = 1/4 (q(i1) q(i1,i1,i1) - q(i1+i1,i1,i1))", "a,a,a,a",
          Fraction(1, 4), [(1, "a * a,a,a"), (-1, "a+a,a,a")]),
    _rule("q(i1,i2,i2,i2,i2) = q(i1) q(i2,i2,i2,i2) - q(i1+i2,i2,i2,i2)", "a,b,b,b,b", 1,
          [(1, "a * b,b,b,b"), (-1, "a+b,b,b,b")]),
    _rule("q(i1,i1,i2,i2,i2) = 1/2 (q(i1) q(i1,i2,i2,i2) - q(i1+i2,i1,i2,i2))",
          "a,a,b,b,b", Fraction(1, 2), [(1, "a * a,b,b,b"), (-1, "a+b,a,b,b")],
          correction=[(-1, "a+a,b,b,b")]),
    _rule("q(i1,i1,i1,i1,i1) = 1/5 (q(i1) q(i1,i1,i1,i1) - q(i1+i1,i1,i1,i1))",
          "a,a,a,a,a", Fraction(1, 5), [(1, "a * a,a,a,a"), (-1, "a+a,a,a,a")]),
    _rule("q(i1,i2,i2,i2,i2,i2) = q(i1) q(i2,i2,i2,i2,i2) - q(i1+i2,i2,i2,i2,i2)",
          "a,b,b,b,b,b", 1, [(1, "a * b,b,b,b,b"), (-1, "a+b,b,b,b,b")]),
    _rule("q(i1,i1,i1,i1,i1,i1) = 1/6 (q(i1) q(i1,i1,i1,i1,i1) - q(i1+i1,i1,i1,i1,i1))",
          "a,a,a,a,a,a", Fraction(1, 6), [(1, "a * a,a,a,a,a"), (-1, "a+a,a,a,a,a")]),
    _rule("q(i1,i1,i1,i1,i1,i1,i1) = 1/7 (q(i1) q(i1,i1,i1,i1,i1,i1) - q(i1+i1,i1,i1,i1,i1,i1))",
          "a,a,a,a,a,a,a", Fraction(1, 7), [(1, "a * a,a,a,a,a,a"), (-1, "a+a,a,a,a,a,a")]),
)


def _instantiate(pattern: str, values: Mapping[str, int]) -> Partition:
    return _key(sum(values[s] for s in slot) for slot in _pattern(pattern))


def _rule_rhs(terms, scale: Fraction, values: Mapping[str, int]) -> SymExpr:
    out = SymExpr.zero(POWER)
    for coeff, factors in terms:
        term = SymExpr.symbol(POWER, ())
        for f in factors:
            term = term * reduce_to_power(_instantiate(f, values))
        out = out + term * coeff
    return out * scale


@dataclass
class RuleCheck:
    rule: PrintedRule
    values: dict[str, int]
    instance: Partition
    ok: bool
    explained: bool
    difference: SymExpr


def rule_instances(rule: PrintedRule, max_order: int) -> list[dict[str, int]]:
    """All assignments with ``a > b > c >= 1`` whose left side has order <= max_order."""
    syms = rule.symbols()
    out = []
    for vals in product(range(1, max_order + 1), repeat=len(syms)):
        if any(vals[i] <= vals[i + 1] for i in range(len(vals) - 1)):
            continue
        values = dict(zip(syms, vals))
        if sum(_instantiate(rule.lhs, values)) <= max_order:
            out.append(values)
    return out


def audit_printed_rules(max_order: int = 7) -> list[RuleCheck]:
    """Check every instance of every printed recursive rule against the generic recursion."""
    checks = []
    for rule in PRINTED_RECURSIVE_RULES:
        for values in rule_instances(rule, max_order):
            lhs = _instantiate(rule.lhs, values)
            expected = reduce_to_power(lhs)
            diff = _rule_rhs(rule.terms, rule.scale, values) - expected
            explained = False
            if diff and rule.correction:
                fixed = _rule_rhs(rule.terms + rule.correction, rule.scale, values)
                explained = fixed == expected
            checks.append(RuleCheck(rule, values, lhs, not diff, explained, diff))
    return checks


def audit_closed_rules() -> dict[Partition, SymExpr]:
    """Difference between each tabulated closed reduction and the generic recursion."""
    return {p: expr - reduce_to_power(p) for p, expr in PRINTED_CLOSED_RULES.items()}
