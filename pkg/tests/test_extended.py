import math

import pytest
from hypothesis import given, strategies as st

import oracles
from circpart import base_sets as bs
from circpart import cop as cp
from circpart import extended as ex
from circpart.errors import TooSmall

P = bs.primes()


def test_build_examples():
    assert ex.build_xcop(12, P).weights == (3, 5, 7, 9)
    assert ex.build_xcop(20, P).weights == tuple(range(3, 18, 2))
    assert ex.build_xcop(12, P).to_json() == {"n": 12, "base": "primes", "weights": [3, 5, 7, 9]}
    with pytest.raises(TooSmall):
        ex.build_xcop(11, P)


@given(st.integers(3, 1000), st.sampled_from([P, bs.arith(2, 4), bs.nstar(), bs.squarefree()]))
def test_weights_match_oracle(half, base):
    n = 2 * half
    pred = lambda x: oracles.member(base.kind, x, base.params)  # noqa: E731
    x = ex.build_xcop(n, base)
    assert list(x.weights) == oracles.xcop_weights(n, pred)
    assert all(n - w in x.weight_set for w in x.weights)


def test_prime_count_lower_bound_and_nonempty():
    for n in range(8, 3001, 2):
        x = ex.build_xcop(n, P)
        odd_primes = [p for p in range(3, n - 2) if oracles.is_prime(p)]
        assert set(odd_primes) <= x.weight_set
        assert len(x.weights) >= len(odd_primes) >= 2
        assert {3, 5} <= x.weight_set


def test_progression_window():
    for a, d in [(1, 2), (2, 4), (3, 6), (5, 6)]:
        M = bs.arith(a, d)
        for n in range(2 * a, 400, d):
            if n % 2:
                continue
            plain = [w for w in cp.build_cop(n, M).weights if 2 < w < n - 2]
            assert list(ex.build_xcop(n, M).weights) == plain


def test_classify_examples():
    cls = ex.classify_axes(ex.build_xcop(20, P))
    assert cls.full_axes == (cp.Axis(3, 17), cp.Axis(7, 13)) and cls.nu == 2
    cls = ex.classify_axes(ex.build_xcop(12, P))
    assert cls.full_axes == (cp.Axis(5, 7),) and cls.half_axes == (cp.Axis(3, 9),)
    assert (cls.nu_star, cls.nu, cls.nu_bar) == (2, 1, 1)
    assert ex.classify_axes(ex.build_xcop(14, P)).center == 7


def test_axis_counts_against_plain_cop():
    for n in range(8, 10_001, 2):
        cls = ex.classify_axes(ex.build_xcop(n, P))
        plain = [w for w in cp.build_cop(n, P).weights if w > 2]
        assert cls.nu == sum(1 for w in plain if 2 * w < n)
        assert cls.nu_star == cls.nu + cls.nu_bar


def test_full_prime_axis():
    assert ex.has_full_prime_axis(6)
    assert not ex.has_full_prime_axis(4)
    for n in range(6, 5001, 2):
        assert ex.has_full_prime_axis(n) == bool(oracles.goldbach_pairs(n))


def test_family_structure():
    fam = ex.extended_family_generators(ex.build_xcop(20, P))
    assert fam == ex.predicted_family(20) == tuple(range(8, 33, 2))
    for n in range(16, 2001, 2):
        fam = ex.extended_family_generators(ex.build_xcop(n, P))
        assert fam[:3] == (8, 10, 12) and fam[-1] == 2 * n - 8
        assert fam == ex.predicted_family(n) and len(fam) == n - 7
    for n in (6, 8, 10):
        assert ex.extended_family_generators(ex.build_xcop(n, P)) == (n,)


def test_family_threshold_between_12_and_16():
    # below 16 the closed form can fail; record where it first holds for good
    holds = [n for n in range(8, 16, 2) if ex.extended_family_generators(ex.build_xcop(n, P)) == ex.predicted_family(n)]
    assert holds == [8, 12]


def test_symmetry_checks():
    assert ex.xcop_symmetry_checks(ex.build_xcop(20, P))
    assert ex.xcop_symmetry_checks(ex.build_xcop(16, P))
    assert all(ex.xcop_symmetry_checks(ex.build_xcop(n, P)) for n in range(8, 2001, 2))


def test_density_estimate():
    r = ex.xcop_density_estimate(10_000)
    assert 0.5 <= r.ratio <= 4
    assert r.reference == pytest.approx(1 / math.log(10_000))
    r8 = ex.xcop_density_estimate(8)
    assert r8.nu_star == 1 and r8.estimate == pytest.approx(1 / 3)
    with pytest.raises(TooSmall):
        ex.xcop_density_estimate(6)


def test_embedding_and_axis_checks():
    assert ex.xcop_embedding_and_axis_checks(20)
    assert ex.xcop_embedding_and_axis_checks(22)
    assert ex.xcop_embedding_and_axis_checks(20, [16])
    assert all(ex.xcop_embedding_and_axis_checks(n) for n in range(8, 400, 2))
