from fractions import Fraction
from itertools import product
from math import comb

from hypothesis import given, settings, strategies as st

from casimir_an.lattice import fundamental, partitions_no_ones
from casimir_an.orbit_char import BRUTEFORCE
from casimir_an.orbits import orbit_dimension
from casimir_an.reps import (ch_rep, cof_rep, freudenthal, inner_product, orbital_decomposition,
                             sub_dominant_weights, theta, weyl_dim)
from casimir_an.symfun import MONOMIAL, SymExpr

F = Fraction


def test_weyl_dim_examples():
    for N in range(1, 9):
        for i in range(1, N + 1):
            assert weyl_dim(fundamental(i, N)) == comb(N + 1, i)
        assert weyl_dim((0,) * N) == 1
    assert weyl_dim((1, 1)) == 8


def test_freudenthal_examples():
    assert freudenthal((1, 1)) == {(1, 1): 1, (0, 0): 2}
    assert freudenthal((1, 0, 1))[(0, 0, 0)] == 3
    assert freudenthal((2,)) == {(2,): 1, (0,): 1}
    assert freudenthal((1, 0, 0)) == {(1, 0, 0): 1}


def test_decomposition_examples():
    assert orbital_decomposition((1, 1)).entries == (((1, 1), 1), ((0, 0), 2))
    assert orbital_decomposition((1, 0, 0, 0)).entries == (((1, 0, 0, 0), 1),)


def test_ch_rep_examples():
    assert ch_rep((1, 0), 2) == SymExpr.symbol(MONOMIAL, (2,))
    assert ch_rep((1, 1), 2) == SymExpr(MONOMIAL, {(2,): 10, (1, 1): 8})
    assert cof_rep((1, 1), 2) == {(2,): 6}
    assert ch_rep((1, 1), 4, BRUTEFORCE) == ch_rep((1, 1), 4)


def test_dimension_cross_check_exhaustive():
    for N in range(1, 5):
        for m in product(range(3), repeat=N):
            assert orbital_decomposition(m).dimension() == weyl_dim(m)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda N: st.lists(st.integers(0, 2), min_size=N, max_size=N).map(tuple)))
def test_multiplicities(m):
    mult = freudenthal(m)
    assert mult[tuple(m)] == 1
    assert all(isinstance(c, int) and c > 0 for c in mult.values())
    assert set(mult) <= set(sub_dominant_weights(m))
    assert sum(c * orbit_dimension(w) for w, c in mult.items()) == weyl_dim(m)


def test_cof_vanishing_on_fundamentals():
    for N in range(1, 7):
        for s in range(2, 8):
            for p in partitions_no_ones(s):
                for i in range(1, min(len(p), N + 1)):
                    assert cof_rep(fundamental(i, N), s)[p] == 0


def test_theta_and_pairing():
    assert theta((0,)) == (F(1, 2), F(-1, 2))
    assert theta((1, 0)) == (F(5, 3), F(-1, 3), F(-4, 3))
    assert theta((0,) * 4) == tuple(F(6, 2) - i for i in range(1, 6))
    assert inner_product((1, -1, 0), (1, -1, 0)) == 2
    assert inner_product((1, 0, 0), (1, 0, 0)) == F(2, 3)
