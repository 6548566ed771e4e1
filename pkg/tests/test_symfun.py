from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from casimir_an.errors import UndefinedGeneratorError
from casimir_an.lattice import all_partitions
from casimir_an.symfun import (MONOMIAL, POWER, PRINTED_CLOSED_RULES, PRINTED_RECURSIVE_RULES,
                               SymExpr, audit_closed_rules, audit_printed_rules,
                               complete_homogeneous, eval_monomial, eval_power_product,
                               monomial_to_power, reduce_to_power, schur_check)

F = Fraction
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
partitions = st.sampled_from([p for s in range(1, 8) for p in all_partitions(s)])


def brute_monomial(p, x):
    # every distinct monomial of shape p, by distinct exponent vectors
    from itertools import permutations
    exps = set(permutations(tuple(p) + (0,) * (len(x) - len(p))))
    total = F(0)
    for e in exps:
        term = F(1)
        for xi, k in zip(x, e):
            term *= F(xi) ** k
        total += term
    return total


def test_printed_examples():
    assert reduce_to_power((2, 2)) == SymExpr(POWER, {(2, 2): F(1, 2), (4,): F(-1, 2)})
    assert reduce_to_power((4, 1)) == SymExpr(POWER, {(4, 1): 1, (5,): -1})
    five = SymExpr(POWER, {(1,) * 5: 1, (2, 1, 1, 1): -10, (2, 2, 1): 15, (3, 1, 1): 20,
                           (3, 2): -20, (4, 1): -30, (5,): 24}) * F(1, 120)
    assert reduce_to_power((1, 1, 1, 1, 1)) == five


def test_eval_monomial_examples():
    assert eval_monomial((2, 2), (2, 1, 0)) == 4
    assert eval_monomial((1, 1), (1, 1, 0)) == 1
    assert eval_monomial((5,), (1, 0, 0, 0)) == 1
    with pytest.raises(UndefinedGeneratorError):
        eval_monomial((1, 1, 1), (1, 2))


def test_eval_power_examples():
    x = (2, 1, 0)
    assert eval_power_product(SymExpr.symbol(POWER, (2,)), x) == 5
    assert eval_power_product(reduce_to_power((2, 2)), x) == 4
    assert eval_power_product(SymExpr.symbol(POWER, (1,)), (2, -1, -1)) == 0


@settings(max_examples=150, deadline=None)
@given(partitions, st.lists(rationals, min_size=3, max_size=9))
def test_reduction_oracle(p, x):
    if len(x) < len(p):
        x = x + [F(1)] * (len(p) - len(x))
    assert eval_power_product(reduce_to_power(p), x) == eval_monomial(p, x)


@settings(max_examples=60, deadline=None)
@given(partitions, st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_eval_monomial_brute(p, x):
    if len(x) < len(p):
        with pytest.raises(UndefinedGeneratorError):
            eval_monomial(p, x)
    else:
        assert eval_monomial(p, x) == brute_monomial(p, x)


@given(partitions)
def test_reduction_homogeneous(p):
    assert reduce_to_power(p).degrees() == {sum(p)}


def test_printed_closed_rules_match():
    assert len(PRINTED_CLOSED_RULES) == 10
    assert all(d == 0 for d in audit_closed_rules().values())


def test_printed_recursive_rules():
    checks = audit_printed_rules(7)
    wrong = {c.rule.label for c in checks if not c.ok}
    flagged = {r.label for r in PRINTED_RECURSIVE_RULES if r.correction}
    assert wrong == flagged and len(flagged) == 3
    assert all(c.explained for c in checks if not c.ok)


def test_schur():
    for k in range(1, 8):
        assert schur_check(k).equal
    assert complete_homogeneous(4) == SymExpr(MONOMIAL, {p: 1 for p in all_partitions(4)})


def test_symexpr_algebra():
    a = SymExpr(MONOMIAL, {(2,): 1, (1, 1): 2})
    b = SymExpr(MONOMIAL, {(1, 1): -2})
    assert a + b == SymExpr.symbol(MONOMIAL, (2,))
    assert a - a == 0
    assert not (a - a)
    assert (a * 3).coefficient((1, 1)) == 6
    assert a.to_json() == {"mu(2)": "1", "mu(1,1)": "2"}
    with pytest.raises(ValueError):
        a + SymExpr.symbol(POWER, (2,))
    with pytest.raises(ValueError):
        a * a
    assert monomial_to_power(a) == SymExpr(POWER, {(1, 1): 1})
