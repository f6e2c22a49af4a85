from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

import oracles
from circpart import base_sets as bs
from circpart import cop as cp
from circpart import density as dn
from circpart.errors import EmptyCoP, PrimesNotCovered, TooSmall

P = bs.primes()
N = bs.naturals()


def test_point_density_example():
    r = dn.point_density_estimate(P, N, 100)
    assert (r.axis_hits, r.nu_total) == (19, 49)
    assert r.lower_bound <= r.estimate <= r.upper_bound
    assert r.segment_lower == Fraction(12, 49) and r.segment_upper == Fraction(25, 49)
    assert r.csv_row()[:3] == (100, 19, 49)
    with pytest.raises(EmptyCoP):
        dn.point_density_estimate(P, P, 11)


def _axis_hits_oracle(H_pred, n, M_pred):
    w = oracles.cop_weights(n, M_pred)
    return sum(1 for x in w if 2 * x < n and (H_pred(x) or H_pred(n - x)))


@given(
    st.sampled_from([P, bs.squarefree(), bs.nstar(), bs.arith(1, 4)]),
    st.sampled_from([N, bs.arith(1, 2), bs.squarefree()]),
    st.integers(3, 2000),
)
def test_density_sandwich_and_oracle(H, M, n):
    try:
        r = dn.point_density_estimate(H, M, n)
    except EmptyCoP:
        assert cp.nu(cp.build_cop(n, M)) == 0
        return
    hp = lambda x: oracles.member(H.kind, x, H.params)  # noqa: E731
    mp = lambda x: oracles.member(M.kind, x, M.params)  # noqa: E731
    assert r.axis_hits == _axis_hits_oracle(hp, n, mp)
    assert 0 <= r.lower_bound <= r.estimate <= r.upper_bound <= 1


def test_complement_identity():
    for H in (P, bs.squarefree(), bs.nstar(), bs.explicit([1, 5, 9])):
        for n in range(3, 3000, 7):
            assert dn.complement_identity_check(H, n) == 0
    with pytest.raises(TooSmall):
        dn.complement_identity_check(P, 2)


def test_two_summand_scan():
    assert dn.two_summand_scan(bs.explicit([1]), 3, 10) == list(range(3, 11))
    assert dn.two_summand_scan(P, 4, 10_000, 2) == []
    assert dn.least_summand_table(P, [4, 6, 8, 11, 100]).tolist() == [2, 3, 3, 0, 3]
    assert dn.least_summand_table(P, []).size == 0


@given(st.sampled_from([P, bs.squarefree(), bs.nstar(), bs.arith(2, 5)]), st.integers(2, 1500))
def test_least_summand_matches_brute_force(H, n):
    pred = lambda x: oracles.member(H.kind, x, H.params)  # noqa: E731
    want = next((x for x in range(1, n // 2 + 1) if pred(x) and pred(n - x)), 0)
    assert dn.least_summand_table(H, [n]).tolist() == [want]


def test_mobius_pairs():
    # frozen from the factorization oracle
    assert dn.mobius_pair_representation(4) == (2, 2)
    assert dn.mobius_pair_representation(16) == (1, 15)
    assert dn.mobius_pair_representation(2) == (1, 1)
    assert dn.mobius_pair_representation(100) == (3, 97)
    for n in (3, 17, 51):
        assert dn.mobius_pair_representation(n) is None
    with pytest.raises(TooSmall):
        dn.mobius_pair_representation(1)


@given(st.integers(2, 3000))
def test_mobius_pair_is_least(n):
    got = dn.mobius_pair_representation(n)
    want = next(
        ((z, n - z) for z in range(1, n // 2 + 1) if oracles.mobius(z) != 0 and oracles.mobius(z) == oracles.mobius(n - z)),
        None,
    )
    assert got == want


def test_coprime_pairs():
    assert [dn.coprime_pair_count(n) for n in range(3, 21)] == [1, 1, 2, 1, 3, 2, 3, 2, 5, 2, 6, 3, 4, 4, 8, 3, 9, 4]
    assert dn.coprime_pair_representation(10) == (1, 9)
    with pytest.raises(TooSmall):
        dn.coprime_pair_representation(2)


@given(st.integers(3, 2000))
def test_coprime_count_is_half_totient(n):
    phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    assert dn.coprime_pair_count(n) == phi // 2


def test_conditional_ratio():
    assert dn.conditional_ratio(P, 1000) == 1
    assert dn.conditional_ratio(N, 100) == Fraction(1, 4)
    assert dn.conditional_ratio(bs.union(bs.nstar(), bs.explicit([2, 3])), 1000) == Fraction(168, 335)
    with pytest.raises(PrimesNotCovered):
        dn.conditional_ratio(bs.nstar(), 100)


def test_progressions():
    assert dn.longest_progression([1, 2, 4, 8]) == (1, 2)
    assert dn.longest_progression([]) == ()
    assert dn.greedy_progressions([3, 5, 7, 9, 11, 20, 30, 40, 41]) == [(3, 5, 7, 9, 11), (20, 30, 40)]


@given(st.lists(st.integers(1, 200), max_size=25))
def test_greedy_progressions_are_disjoint_progressions(values):
    seen = set()
    for ap in dn.greedy_progressions(values):
        assert len(ap) >= 3 and set(ap) <= set(values)
        assert len({b - a for a, b in zip(ap, ap[1:])}) == 1
        assert not seen & set(ap)
        seen |= set(ap)
