import math

import numpy as np
import pytest

from fsdet.caratheodory import AtomMixture, Lemma3Params, lemma2_check, lemma3_coeffs, \
    lemma3_invert, mixture_coeffs, normalize_rotation, random_mixture
from fsdet.rng import SplitMix64


def test_single_atom_is_moebius():
    c = mixture_coeffs(AtomMixture((1.0,), (0.0,)), 6)
    np.testing.assert_allclose(c, 2)


def test_two_opposite_atoms():
    c = mixture_coeffs(AtomMixture((0.5, 0.5), (0.0, math.pi)), 6)
    np.testing.assert_allclose(c, [0, 2, 0, 2, 0, 2], atol=1e-15)


def test_rotated_atom():
    c = mixture_coeffs(AtomMixture((1.0,), (math.pi,)), 5)
    np.testing.assert_allclose(c, [2 * (-1) ** k for k in range(1, 6)], atol=1e-14)


def test_mixture_weights_validated():
    with pytest.raises(ValueError, match="not a probability vector"):
        AtomMixture((0.5, 0.6), (0, 1))
    with pytest.raises(ValueError, match="not a probability vector"):
        AtomMixture((1.5, -0.5), (0, 1))


@pytest.mark.parametrize("params, expected", [
    (Lemma3Params(2.0, 0.3 + 0.1j, -0.5j), [2, 2, 2]),
    (Lemma3Params(0.0, 1.0, 0.7), [0, 2, 0]),
    (Lemma3Params(0.0, 0.0, 1.0), [0, 0, 2]),
])
def test_parametrization_examples(params, expected):
    np.testing.assert_allclose(lemma3_coeffs(params), expected, atol=1e-15)


def test_parametrization_matches_mixtures():
    # oracle: the two-atom and single-atom mixtures give the same triples
    two = mixture_coeffs(AtomMixture((0.5, 0.5), (0.0, math.pi)), 3)
    np.testing.assert_allclose(lemma3_coeffs(Lemma3Params(0.0, 1.0, 0.2)), two, atol=1e-15)


def test_parametrization_domain():
    with pytest.raises(ValueError, match="outside Lemma 3 domain"):
        Lemma3Params(2.5, 0, 0)
    with pytest.raises(ValueError, match="outside Lemma 3 domain"):
        Lemma3Params(1.0, 1.1, 0)
    with pytest.raises(ValueError, match="outside Lemma 3 domain"):
        Lemma3Params(1.0, 0.2, 1.5j)


def test_invert_examples():
    p = lemma3_invert([0, 2, 0])
    assert p.x == 1 and p.z is None
    p = lemma3_invert([0, 0, 2])
    assert p.x == 0 and p.z == 1
    with pytest.raises(ValueError, match="degenerate"):
        lemma3_invert([2, 2, 2])


def test_invert_rejects_non_representable():
    with pytest.raises(ValueError, match="P-representable"):
        lemma3_invert([0, 2.5, 0])


def test_invert_requires_real_c1():
    with pytest.raises(ValueError, match="rotate first"):
        lemma3_invert([1j, 0, 0])


def test_round_trip_after_rotation():
    rng = SplitMix64(5)
    checked = 0
    for _ in range(500):
        c = mixture_coeffs(random_mixture(rng, 3), 3)
        if abs(c[0]) > 1.9:
            continue
        rotated, phi = normalize_rotation(c)
        p = lemma3_invert(rotated)
        assert abs(p.x) <= 1 + 1e-9
        if abs(p.x) < 1 - 1e-6:
            np.testing.assert_allclose(lemma3_coeffs(p), rotated, atol=1e-10)
            checked += 1
        # undoing the rotation restores the input
        np.testing.assert_allclose(rotated * np.exp(1j * np.arange(1, 4) * phi), c, atol=1e-13)
    assert checked > 100


@pytest.mark.parametrize("c, sigma, expected", [
    ([2, 2], 0, (2, 2)),
    ([0, 2], 1, (2, 2)),
    ([2, 2], 3, (4, 4)),
])
def test_c2_sigma_inequality_examples(c, sigma, expected):
    assert lemma2_check(c, sigma) == pytest.approx(expected, abs=1e-15)


def test_random_mixture_is_valid():
    rng = SplitMix64(0)
    for m in range(1, 7):
        mix = random_mixture(rng, m)
        assert mix.m == m
        assert abs(sum(mix.weights) - 1) <= 1e-12
        assert all(0 <= a < 2 * math.pi for a in mix.angles)
