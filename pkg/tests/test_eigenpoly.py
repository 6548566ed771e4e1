from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from casimir_an.eigenpoly import (ERRATA, NORMALIZATIONS, PRINTED, UNIT, admissible_ranks,
                                  closed_form, eval_closed, eval_from_cof, fit_theta_polynomial,
                                  free_value, integer_roots, n_min, poly_eval, sample_weights,
                                  solve_exact, supported_classes, theta_basis, theta_power,
                                  verify_class)
from casimir_an.errors import DegenerateReferenceError, DomainError, UnsupportedClassError
from casimir_an.lattice import fundamental, kappa
from casimir_an.reps import weyl_dim

F = Fraction


def dominant(N, top=3):
    return st.lists(st.integers(0, top), min_size=N, max_size=N).map(tuple)


def test_theta_power_examples():
    assert theta_power(2, (0,)) == F(1, 2)
    assert theta_power(2, (1, 0)) == F(14, 3)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10).flatmap(dominant))
def test_theta_power_one_vanishes(m):
    assert theta_power(1, m) == 0


def test_class_inventory():
    by_order = {}
    for p in supported_classes():
        by_order.setdefault(sum(p), []).append(p)
    assert {s: len(v) for s, v in by_order.items()} == {s: kappa(s) for s in (4, 5, 6, 7)}


def test_term_lists():
    terms = {c.monomial for c in PRINTED[(7,)].coefficients}
    assert terms == {(7,), (5, 2), (4, 3), (3, 2, 2)}
    for form in PRINTED.values():
        assert all(sum(c.monomial) <= form.order for c in form.coefficients)
        assert form.free().monomial in {c.monomial for c in form.coefficients}
    absent = [(p, c.alpha) for p, f in PRINTED.items() for c in f.coefficients if not c.printed]
    assert absent == [((4,), 3), ((4,), 4), ((2, 2), 3)]


def test_k5_ratio():
    form = PRINTED[(5,)]
    for N in range(2, 12):
        ratio = form.coefficients[0].value(N) / form.coefficients[1].value(N)
        assert ratio == F(-(N + 1) * (N * N + 2 * N + 6), 5 * (N * N + 2 * N - 1))


def test_default_normalizations():
    for N in range(4, 10):
        assert free_value((4,), N) == F((N + 1) ** 2 * (N + 2) * (N + 3) * (N + 4), 720)
        assert free_value((6,), N) == 1
    assert free_value((4,), 5, UNIT) == 1
    assert free_value((4,), 5, F(3, 7)) == F(3, 7)
    assert set(NORMALIZATIONS) == {(4,), (2, 2), (5,), (3, 2)}


def test_n_min_is_mechanical():
    assert n_min((4,)) == 3
    assert n_min((5,)) == 1 and n_min((5,), "default") == 4
    assert n_min((4, 3)) == 6 and n_min((4, 3), errata=False) == 1
    assert n_min((7,)) == 1
    assert integer_roots((2, 4, -15)) == []
    assert integer_roots((1, 0, -4)) == [-2, 2]
    for p in supported_classes():
        N = n_min(p)
        form = closed_form(p)
        assert all(poly_eval(f, N + k) != 0 for f in form.denominators() for k in range(5))


def test_domain_errors():
    with pytest.raises(DomainError) as err:
        eval_closed((4,), (1, 0))
    assert err.value.factor == "(N - 2)"
    with pytest.raises(UnsupportedClassError):
        eval_closed((2,), (1, 0))
    with pytest.raises(UnsupportedClassError):
        eval_closed((8,), (1,) * 8)


def test_errata_registry():
    assert [(e.cls, e.alpha) for e in ERRATA] == [((4, 3), a) for a in (1, 2, 3, 4)]
    printed, fixed = closed_form((4, 3), errata=False), closed_form((4, 3))
    for c, d in zip(printed.coefficients, fixed.coefficients):
        if c.alpha <= 4:
            assert c.value(8) / d.value(8) == _g7(8)


def _g7(N):
    out = 1
    for i in range(-5, 8):
        out *= N + i
    return out


def test_eval_from_cof_examples():
    assert eval_from_cof((2,), (1, 1), 1) == F(9, 4)
    assert eval_from_cof((4,), fundamental(1, 5), F(7, 3)) == F(7, 3)
    assert eval_from_cof((2, 2), fundamental(2, 5), 5) == 5
    with pytest.raises(DegenerateReferenceError):
        eval_from_cof((2, 2), (1, 0, 0, 0), 1, reference=(1, 0, 0, 0))
    with pytest.raises(DegenerateReferenceError):
        eval_from_cof((2, 2, 2), (1, 1), 1)


def test_closed_form_agrees_with_cof_definition():
    # both sides share the free normalization fixed at lambda_k
    for p in [(4,), (2, 2), (5,), (3, 2)]:
        N = admissible_ranks(p)[0]
        ref = fundamental(len(p), N)
        value = eval_closed(p, ref)
        for m in sample_weights(N, 6, seed=3):
            assert eval_from_cof(p, m, value) == eval_closed(p, m)


def test_solve_exact():
    sol, rank, ok = solve_exact([[1, 1], [1, -1], [2, 0]], [3, 1, 4])
    assert sol == [2, 1] and rank == 2 and ok
    sol, rank, ok = solve_exact([[1, 1], [2, 2]], [1, 2])
    assert sol is None and rank == 1 and ok
    sol, rank, ok = solve_exact([[1, 0], [1, 0]], [1, 2])
    assert sol is None and not ok


def test_basis_sizes():
    assert [len(theta_basis(s)) for s in (4, 5, 6, 7)] == [5, 7, 11, 15]


def test_verify_examples():
    r = verify_class((4,), 5, [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (2, 0, 0, 0, 0),
                               (1, 1, 0, 0, 0)])
    assert r.tier_a and r.constant is not None
    r = verify_class((2, 2), 5)
    assert r.tier_b == "match"
    assert r.fitted[(3,)] == 0
    assert len(r.sample) >= 6


def test_verify_flags_p43_entries():
    r = verify_class((4, 3), 6, errata=False)
    assert not r.tier_a
    assert [m.entry for m in r.mismatches] == [f"k_43({a},N)" for a in (1, 2, 3, 4)]
    assert not any(m.explained for m in r.mismatches)
    r = verify_class((4, 3), 6)
    assert r.tier_a and r.tier_b == "mismatch" and not r.unexplained


def test_low_rank_underdetermined():
    r = verify_class((7,), 4)
    assert r.tier_b == "underdetermined"
    assert r.rank < len(theta_basis(7))


def test_parallel_matches_serial():
    a = verify_class((3, 2), 4, jobs=1)
    b = verify_class((3, 2), 4, jobs=2)
    assert a.to_json() == b.to_json()


def test_fit_recovers_p4():
    N = 4
    fitted, rank = fit_theta_polynomial((4,), sample_weights(N, 9))
    form = PRINTED[(4,)]
    scale = fitted[()]
    for c in form.coefficients:
        assert fitted[c.monomial] / scale == c.value(N)
    assert weyl_dim(fundamental(1, N)) == N + 1
