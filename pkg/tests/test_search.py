import numpy as np
import pytest

from fsdet.caratheodory import AtomMixture, Lemma3Params
from fsdet.determinants import Functional
from fsdet.search import SearchConfig, evaluate_witness, sharpness_sweep, sup_over_atoms, \
    sup_over_lemma3

SMALL = SearchConfig(restarts=8, max_iters=120)
COARSE = SearchConfig(grid=25)


def test_config_validation():
    for bad in ({"atoms": 0}, {"restarts": 0}, {"max_iters": 0}, {"tol": 0.0}, {"seed": -1},
                {"workers": 0}):
        with pytest.raises(ValueError):
            SearchConfig(**bad)


def test_fekete_szego_zero_finds_koebe():
    r = sup_over_atoms(Functional.fekete_szego(0), SMALL)
    assert r.value == pytest.approx(3, abs=1e-3)
    assert max(r.witness.weights) >= 1 - 1e-3
    assert r.attained


def _is_koebe_or_two_symmetric(mix):
    w = np.array(mix.weights)
    u = np.exp(1j * np.array(mix.angles))
    # rotated Koebe: the weights concentrate on one direction
    if abs(np.sum(w * u)) >= 1 - 1e-3:
        return True
    # z/(1-z^2) up to rotation: half the mass on each of two antipodal directions
    return abs(np.sum(w * u)) <= 1e-2 and abs(abs(np.sum(w * u * u)) - 1) <= 1e-2


def test_h2_2_one_value_and_extremals():
    phi = Functional.h2_2(1)
    r = sup_over_atoms(phi, SearchConfig(atoms=2, restarts=16, max_iters=200))
    assert r.value == pytest.approx(1, abs=1e-3)
    assert _is_koebe_or_two_symmetric(r.witness)
    two_sym = AtomMixture((0.5, 0.5), (0.0, np.pi))
    assert evaluate_witness(phi, two_sym) == pytest.approx(1, abs=1e-12)
    assert _is_koebe_or_two_symmetric(two_sym)


def test_witness_reproduces_value():
    for phi in (Functional.fekete_szego(0.6), Functional.b2_1(2), Functional.h3(1, 2, 1)):
        r = sup_over_atoms(phi, SMALL)
        assert evaluate_witness(phi, r.witness) == pytest.approx(r.value, rel=1e-9)
        assert r.value >= 0


def test_values_respect_bounds():
    for phi in (Functional.fekete_szego(0.6), Functional.h2_2(0.5), Functional.b2_1(2),
                Functional.h3(1, 1, 2)):
        r = sup_over_atoms(phi, SMALL)
        assert r.value <= r.bound.value + 1e-9


def test_invalid_parameters():
    with pytest.raises(ValueError):
        sup_over_atoms(Functional.b2_1(-1), SMALL)


def test_deterministic_and_worker_invariant():
    phi = Functional.h2_2(0.8)
    base = sup_over_atoms(phi, SMALL)
    again = sup_over_atoms(phi, SMALL)
    assert base.as_dict() == again.as_dict()
    for workers in (2, 3, 8):
        cfg = SearchConfig(restarts=8, max_iters=120, workers=workers)
        assert sup_over_atoms(phi, cfg).as_dict() == base.as_dict()


def test_seed_changes_starts():
    phi = Functional.h2_2(0.8)
    a = sup_over_atoms(phi, SearchConfig(restarts=2, max_iters=1, seed=1))
    b = sup_over_atoms(phi, SearchConfig(restarts=2, max_iters=1, seed=2))
    assert a.witness != b.witness


def test_parametrization_examples():
    r = sup_over_lemma3(Functional.b2_1(0), COARSE)
    assert r.value == pytest.approx(6, abs=1e-4)
    assert isinstance(r.witness, Lemma3Params)
    assert evaluate_witness(Functional.b2_1(0), r.witness) == pytest.approx(r.value, rel=1e-9)
    assert sup_over_lemma3(Functional.h2_2(0), COARSE).value == pytest.approx(8, abs=1e-4)


def test_parametrization_backend_rejects_h3():
    with pytest.raises(ValueError, match="not representable by Lemma 3 alone"):
        sup_over_lemma3(Functional.h3(1, 1, 1), COARSE)


@pytest.mark.parametrize("phi", [Functional.b2_1(0.5), Functional.h2_2(1.5)])
def test_backends_agree(phi):
    atoms = sup_over_atoms(phi, SearchConfig(atoms=3, restarts=16, max_iters=200))
    grid = sup_over_lemma3(phi, SearchConfig(grid=33))
    assert abs(atoms.value - grid.value) <= 1e-3


def test_sweep_flags():
    report = sharpness_sweep("h2_2", [0.7, 1.0], SMALL, backends=["atoms"])
    low, one = report.entries
    assert low.value >= 8 - 9 * 0.7 - 1e-6
    assert low.exceeds_alt and low.status == "attained"
    assert not one.exceeds_alt
    assert report.as_dict()["atoms"] == 4


def test_sweep_uses_both_backends_when_possible():
    report = sharpness_sweep("fekete_szego", [0.0], SearchConfig(restarts=2, max_iters=40, grid=17))
    assert set(report.entries[0].results) == {"atoms", "lemma3"}
    report = sharpness_sweep("h3", [(1, 1, 1)], SearchConfig(restarts=2, max_iters=40))
    assert set(report.entries[0].results) == {"atoms"}


def test_sweep_empty():
    with pytest.raises(ValueError):
        sharpness_sweep("h2_2", [], SMALL)


def test_result_dict_is_plain():
    r = sup_over_atoms(Functional.fekete_szego(1), SearchConfig(restarts=2, max_iters=20))
    d = r.as_dict()
    assert d["functional"] == str(Functional.fekete_szego(1))
    assert isinstance(r.witness, AtomMixture)
    assert d["gap"] == pytest.approx(r.bound.value - r.value)
