import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from causalstates import (
    ErrorBoundInputs,
    collective_error_bound,
    lmax_advisor,
    morph_error_bound,
)


def test_morph_error_bound_value():
    assert morph_error_bound(2, 100, 0.1) == pytest.approx(8 * math.exp(-8), abs=1e-9)
    assert morph_error_bound(2, 100, 0.1) == pytest.approx(0.002684, abs=1e-6)


def test_morph_error_bound_clamps_to_one():
    assert morph_error_bound(2, 1, 1e-9) == 1.0


def test_doubling_n_multiplies_by_exp_factor():
    ratio = morph_error_bound(2, 200, 0.1) / morph_error_bound(2, 100, 0.1)
    assert ratio == pytest.approx(math.exp(-8))


def test_collective_reduces_to_single_suffix():
    single = collective_error_bound(ErrorBoundInputs(k=2, s=1, m=100, t=0.1))
    assert single.min_based == pytest.approx(morph_error_bound(2, 100, 0.1))


def test_collective_value():
    b = collective_error_bound(ErrorBoundInputs(k=2, s=15, m=500, t=0.1))
    assert b.min_based == pytest.approx(8 * 15 * math.exp(-40), rel=1e-9)
    assert b.min_based == pytest.approx(5.1e-16, rel=0.02)


def test_per_suffix_sum_never_looser():
    inputs = ErrorBoundInputs(k=2, s=3, m=50, t=0.1, n_vec=(50, 200, 400))
    b = collective_error_bound(inputs)
    assert b.per_suffix is not None
    assert b.per_suffix <= b.min_based


def test_advisor_values():
    assert lmax_advisor(10_000, 1.0, 0.1) == 12
    assert lmax_advisor(100, 1.0, 1.0) == 3


def test_advisor_nondecreasing_in_n():
    values = [lmax_advisor(n, 1.0, 0.1) for n in (10, 100, 1000, 10_000, 100_000)]
    assert values == sorted(values)


def test_input_validation():
    with pytest.raises(ValueError):
        ErrorBoundInputs(k=2, s=1, m=1, t=0.0)
    with pytest.raises(ValueError):
        ErrorBoundInputs(k=2, s=0, m=1, t=0.1)
    with pytest.raises(ValueError):
        ErrorBoundInputs(k=2, s=1, m=1, t=0.1, p_star=1.5)
    with pytest.raises(ValueError):
        morph_error_bound(2, 0, 0.1)
    with pytest.raises(ValueError):
        lmax_advisor(1, 1.0)


@given(st.integers(2, 6), st.integers(1, 10_000), st.floats(0.001, 0.5))
def test_bound_in_unit_interval(k, n, t):
    b = morph_error_bound(k, n, t)
    assert 0.0 <= b <= 1.0
    if 8 * n * t * t < 700:  # exp() not yet underflowed
        assert b > 0.0


@given(st.integers(2, 4), st.floats(0.01, 0.3))
def test_bound_monotone_in_n(k, t):
    values = [morph_error_bound(k, n, t) for n in (10, 100, 1000, 10_000)]
    assert all(a >= b for a, b in zip(values, values[1:]))


@given(st.integers(10, 1000))
def test_bound_monotone_in_t_and_k(n):
    by_t = [morph_error_bound(2, n, t) for t in (0.01, 0.05, 0.1, 0.3)]
    assert all(a >= b for a, b in zip(by_t, by_t[1:]))
    by_k = [morph_error_bound(k, n, 0.1) for k in (2, 3, 4, 5)]
    assert all(a <= b for a, b in zip(by_k, by_k[1:]))


@given(st.integers(1, 20), st.integers(1, 500))
def test_collective_monotone_in_s_and_m(s, m):
    base = collective_error_bound(ErrorBoundInputs(k=2, s=s, m=m, t=0.1)).min_based
    more_suffixes = collective_error_bound(ErrorBoundInputs(k=2, s=s + 1, m=m, t=0.1)).min_based
    more_data = collective_error_bound(ErrorBoundInputs(k=2, s=s, m=m + 50, t=0.1)).min_based
    assert more_suffixes >= base
    assert more_data <= base
