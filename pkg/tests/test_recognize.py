"""Pattern recognition, the brute-force oracle and sum distinction."""

import math

import pytest
from hypothesis import given, strategies as st

from swstem.blocks import (
    K3,
    EllipticSurface,
    HomotopySphereLike,
    SymplecticGeneric,
    recognizable_set,
)
from swstem.errors import InvalidParameters, NotAnEllipticPattern
from swstem.recognize import (
    DistinctionVerdict,
    Pattern,
    distinguish,
    recognize,
    recognize_oracle,
)


def odd_coprime_grid(p_g_max=7, n_max=5):
    for p_g in range(1, p_g_max + 1, 2):
        for m in range(1, n_max + 1):
            for n in range(m, n_max + 1):
                if math.gcd(m, n) == 1:
                    yield p_g, m, n


def test_pattern_normalizes():
    assert Pattern.of([2, -2, 2]).multiples == (-2, 2)
    assert Pattern.of((0,)).multiples == (0,)


def test_pattern_rejects_asymmetry_and_emptiness():
    with pytest.raises(InvalidParameters):
        Pattern.of([1, 2, -1])
    with pytest.raises(InvalidParameters):
        Pattern.of([])


def test_recognize_k3():
    result = recognize(Pattern.of([0]))
    assert result.triple == (1, 1, 1)
    assert result.validated


def test_recognize_e3():
    result = recognize(Pattern.of([-2, 2]))
    assert result.triple == (3, 1, 1)
    assert result.validated
    assert result.diagnostics == ()


def test_recognize_small_log_transforms():
    assert recognize(Pattern.of([-1, 1])).triple == (1, 1, 2)
    assert recognize(Pattern.of([-2, 0, 2])).triple == (1, 1, 3)
    assert recognize(Pattern.of([-7, -3, -1, 1, 3, 7])).triple == (1, 2, 3)


def test_recognize_rejects_mixed_parity():
    with pytest.raises(NotAnEllipticPattern):
        recognize(Pattern.of([-2, -1, 1, 2]))


def test_recognize_unvalidated_candidate():
    # (-3, 3) derives the candidate (4, 1, 1), whose table disagrees
    result = recognize(Pattern.of([-3, 3]))
    assert not result.validated
    assert result.diagnostics


def test_round_trip_on_grid():
    for p_g, m, n in odd_coprime_grid():
        pattern = Pattern.of(recognizable_set(p_g, m, n))
        result = recognize(pattern)
        assert result.triple == (p_g, m, n)
        assert result.validated


def test_even_genus_patterns_collapse_to_odd_representatives():
    # even-genus tables repeat odd-genus fingerprints; recognition lands on
    # the odd representative and validates
    assert recognize(Pattern.of(recognizable_set(2, 1, 1))).triple == (1, 1, 2)
    assert recognize(Pattern.of(recognizable_set(4, 1, 1))).triple == (1, 1, 4)
    assert recognize(Pattern.of(recognizable_set(6, 1, 1))).triple == (3, 1, 2)


def test_oracle_agrees_on_grid():
    for p_g, m, n in odd_coprime_grid():
        pattern = Pattern.of(recognizable_set(p_g, m, n))
        assert recognize_oracle(pattern, (7, 5)) == ((p_g, m, n),)


def test_oracle_default_bounds_contain_the_generator():
    assert recognize_oracle(Pattern.of([-2, 2])) == ((3, 1, 1),)
    assert recognize_oracle(Pattern.of([0])) == ((1, 1, 1),)


def test_oracle_empty_for_non_elliptic_pattern():
    assert recognize_oracle(Pattern.of([-3, 3]), (9, 5)) == ()


def test_oracle_bounds_validation():
    with pytest.raises(InvalidParameters):
        recognize_oracle(Pattern.of([0]), (0, 5))


@given(
    st.sets(st.integers(1, 25), max_size=6),
    st.booleans(),
)
def test_fuzz_soundness(halves, include_zero):
    """Whatever recognize returns as validated must regenerate the input."""
    values = {x for h in halves for x in (h, -h)}
    if include_zero or not values:
        values.add(0)
    pattern = Pattern.of(values)
    try:
        result = recognize(pattern)
    except NotAnEllipticPattern:
        return
    if result.validated:
        assert recognizable_set(*result.triple) == pattern.multiples


E3 = EllipticSurface(3, 1, 1)


def test_distinguish_same_multiset():
    assert (
        distinguish([K3, E3], [E3, K3]) is DistinctionVerdict.SAME_SUMMANDS
    )


def test_distinguish_ignores_sphere_summands():
    assert (
        distinguish([K3, HomotopySphereLike()], [K3])
        is DistinctionVerdict.SAME_SUMMANDS
    )


def test_distinguish_different_summands():
    assert distinguish([K3], [E3]) is DistinctionVerdict.DIFFERENT_SUMMANDS
    assert (
        distinguish([K3, K3], [EllipticSurface(1, 1, 2), K3])
        is DistinctionVerdict.DIFFERENT_SUMMANDS
    )


def test_distinguish_four_summands_needs_congruence():
    four_k3 = [K3] * 4
    assert distinguish(four_k3, four_k3) is DistinctionVerdict.SAME_SUMMANDS
    # four E(3)s: total b+ = 28 = 4 (mod 8), still in regime
    four_e3 = [E3] * 4
    assert distinguish(four_e3, [E3] * 3 + [K3]) is (
        DistinctionVerdict.DIFFERENT_SUMMANDS
    )
    # three K3s and one E(3): total b+ = 16 = 0 (mod 8), out on both sides
    off = [K3, K3, K3, E3]
    assert distinguish(off, off) is DistinctionVerdict.OUT_OF_REGIME


def test_distinguish_one_side_in_regime_suffices():
    assert distinguish([K3], [K3] * 5) is DistinctionVerdict.DIFFERENT_SUMMANDS


def test_distinguish_out_of_regime():
    assert distinguish([K3] * 5, [K3] * 5) is DistinctionVerdict.OUT_OF_REGIME
    assert (
        distinguish([EllipticSurface(2, 1, 1)], [EllipticSurface(2, 1, 1)])
        is DistinctionVerdict.OUT_OF_REGIME
    )
    assert (
        distinguish([SymplecticGeneric(3)], [K3])
        is DistinctionVerdict.OUT_OF_REGIME
    )
