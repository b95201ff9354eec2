"""The Verlinde oracle: closed-form cross-checks and structural invariants."""

import itertools

import pytest

from conftest import su3_level1_group_ring

from orbitfusion import (
    NumericalDrift,
    Params,
    ParamsMismatch,
    RangeError,
    TOLERANCE,
    Weight,
    enumerate_level_weights,
    fusion_coefficient,
    fusion_coefficient_raw,
    label_count,
    su2_fusion_closed_form,
)
from orbitfusion.fusion import _round_checked


def weight(coeffs, level):
    return Weight(tuple(coeffs), level)


def test_enumerate_level_weights_examples():
    assert [w.coeffs for w in enumerate_level_weights(Params(2, 2))] == [(0,), (1,), (2,)]
    assert [w.coeffs for w in enumerate_level_weights(Params(3, 1))] == [
        (0, 0),
        (1, 0),
        (0, 1),
    ]


def test_enumerate_level_weights_counts():
    for modulus in (2, 3, 4):
        for level in range(1, 7):
            params = Params(modulus, level)
            weights = list(enumerate_level_weights(params))
            assert len(weights) == label_count(params)
            assert len(set(weights)) == len(weights)
            assert all(sum(w.coeffs) <= level for w in weights)


def test_su2_closed_form_examples():
    assert su2_fusion_closed_form(1, 1, 0, 1) == 1
    assert su2_fusion_closed_form(1, 1, 2, 1) == 0
    for level in range(1, 5):
        assert su2_fusion_closed_form(1, 1, 1, level) == 0
    with pytest.raises(RangeError):
        su2_fusion_closed_form(3, 0, 0, 2)


def test_su2_verlinde_examples():
    assert fusion_coefficient(weight((1,), 1), weight((1,), 1), weight((0,), 1)) == 1
    assert fusion_coefficient(weight((1,), 2), weight((1,), 2), weight((2,), 2)) == 1


def test_su2_verlinde_matches_closed_form():
    for level in range(1, 7):
        for a, b, c in itertools.product(range(level + 1), repeat=3):
            expected = su2_fusion_closed_form(a, b, c, level)
            got = fusion_coefficient(weight((a,), level), weight((b,), level), weight((c,), level))
            assert got == expected, (level, a, b, c)


def test_su3_level1_is_group_ring():
    weights = list(enumerate_level_weights(Params(3, 1)))
    assert fusion_coefficient(weight((1, 0), 1), weight((1, 0), 1), weight((0, 1), 1)) == 1
    for lam, mu, nu in itertools.product(weights, repeat=3):
        expected = su3_level1_group_ring(lam.coeffs, mu.coeffs, nu.coeffs)
        assert fusion_coefficient(lam, mu, nu) == expected


def test_vacuum_is_identity():
    for modulus in (2, 3):
        for level in range(1, 4):
            params = Params(modulus, level)
            vacuum = weight((0,) * (modulus - 1), level)
            for lam, nu in itertools.product(enumerate_level_weights(params), repeat=2):
                expected = 1 if lam == nu else 0
                assert fusion_coefficient(vacuum, lam, nu) == expected


def test_symmetry_in_first_two_weights():
    for modulus in (2, 3):
        for level in range(1, 4):
            weights = list(enumerate_level_weights(Params(modulus, level)))
            for lam, mu in itertools.combinations(weights, 2):
                for nu in weights:
                    assert fusion_coefficient(lam, mu, nu) == fusion_coefficient(mu, lam, nu)


def test_charge_conservation():
    size = lambda w: sum((i + 1) * c for i, c in enumerate(w.coeffs))
    for modulus in (2, 3):
        for level in range(1, 5):
            weights = list(enumerate_level_weights(Params(modulus, level)))
            for lam, mu, nu in itertools.product(weights, repeat=3):
                if fusion_coefficient(lam, mu, nu) != 0:
                    assert (size(lam) + size(mu)) % modulus == size(nu) % modulus


def test_raw_sums_are_near_integers():
    for modulus in (2, 3):
        for level in range(1, 5):
            weights = list(enumerate_level_weights(Params(modulus, level)))
            for lam, mu, nu in itertools.product(weights, repeat=3):
                raw = fusion_coefficient_raw(lam, mu, nu)
                assert abs(raw.imag) <= TOLERANCE
                assert abs(raw.real - round(raw.real)) <= TOLERANCE
                assert round(raw.real) >= 0


def test_round_checked_guards():
    assert _round_checked(1.0000000001 + 0j) == 1
    assert _round_checked(-1e-9 + 1e-9j) == 0
    with pytest.raises(NumericalDrift):
        _round_checked(0.5 + 0j)
    with pytest.raises(NumericalDrift):
        _round_checked(1.0 + 1e-3j)
    with pytest.raises(NumericalDrift):
        _round_checked(-0.7 + 0j)


def test_mixed_levels_rejected():
    with pytest.raises(ParamsMismatch):
        fusion_coefficient(weight((1,), 1), weight((1,), 2), weight((0,), 1))
    with pytest.raises(ParamsMismatch):
        fusion_coefficient(weight((1,), 2), weight((1, 0), 2), weight((1,), 2))
