"""Seeded randomized property suites for the coefficient inequalities and determinant identities."""

import math
from dataclasses import dataclass

import numpy as np

from .caratheodory import TWO_PI, lemma2_check, lemma3_coeffs, lemma3_invert, lemma3_kernel, \
    mixture_kernel, normalize_rotation, random_mixture
from .determinants import DeterminantSpec, Functional, functional_eval, h3_expand, \
    hankel_lambda, triangle_rhs
from .proofcheck import verify_claims
from .rng import SplitMix64
from .starlike import lift_kernel, lift_starlike, rotate

MAX_ATOMS = 6
SIGMAS = (-2.0, -1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0)


@dataclass
class SuiteResult:
    name: str
    checks: int
    violations: int
    max_excess: float
    tolerance: float

    @property
    def passed(self):
        return self.violations == 0

    def as_dict(self):
        return {"name": self.name, "checks": self.checks, "violations": self.violations,
                "max_excess": self.max_excess, "tolerance": self.tolerance, "pass": self.passed}


def _result(name, excess, tol):
    excess = np.asarray(excess, dtype=float).ravel()
    return SuiteResult(name, len(excess), int(np.sum(excess > tol)), float(excess.max()), tol)


def _random_mixtures(rng, samples):
    """Weights and angles padded to MAX_ATOMS atoms (padding has zero weight)."""
    W = np.zeros((samples, MAX_ATOMS))
    A = np.zeros((samples, MAX_ATOMS))
    for s in range(samples):
        m = 1 + rng.next_u64() % MAX_ATOMS
        mix = random_mixture(rng, m)
        W[s, :m] = mix.weights
        A[s, :m] = mix.angles
    return W, A


def lemma_suite(samples=10_000, seed=1):
    """|c_k| <= 2, the c2 - sigma c1^2/2 inequality, |a_n| <= n and the (c1, x, z) round trip."""
    rng = SplitMix64(seed)
    W, A = _random_mixtures(rng, samples)
    c = mixture_kernel(W, A, 8)
    results = [_result("|c_k| <= 2", np.abs(c) - 2.0, 1e-12)]

    lhs = np.abs(c[:, 1, None] - np.array(SIGMAS) * c[:, 0, None] ** 2 / 2)
    bound = np.array([2 * max(1.0, abs(s - 1)) for s in SIGMAS])
    results.append(_result("|c2 - sigma c1^2/2| <= 2max{1,|sigma-1|}", lhs - bound, 1e-12))

    a = lift_kernel(c[:, :5], 6)
    n = np.arange(1, 7)
    results.append(_result("starlike: |a_n| <= n", np.abs(a[:, 1:]) - n, 1e-9))

    x_excess, trip_err = [], []
    for row in c[np.abs(c[:, 0]) <= 1.9]:
        rotated, _ = normalize_rotation(row[:3])
        p = lemma3_invert(rotated)
        x_excess.append(abs(p.x) - 1.0)
        if abs(p.x) < 1 - 1e-6:
            trip_err.append(np.max(np.abs(lemma3_coeffs(p)[1:] - rotated[1:3])))
    results.append(_result("(c1, x, z) inverse: |x| <= 1", x_excess, 1e-9))
    results.append(_result("(c1, x, z) round trip reproduces c2, c3", trip_err, 1e-10))
    return results


def lemma3_grid_suite(n=50):
    """|c2|, |c3| <= 2 for parametrized outputs over a grid of (c1, |x|, arg x, arg z)."""
    c1 = np.linspace(0, 2, n)[:, None, None, None]
    r = np.linspace(0, 1, n)[None, :, None, None]
    ph = np.linspace(0, TWO_PI, n, endpoint=False)
    x = r * np.exp(1j * ph)[None, None, :, None]
    z = np.exp(1j * ph)[None, None, None, :]
    c = lemma3_kernel(c1, x, z)
    return _result("(c1, x, z) grid: |c2|, |c3| <= 2", np.abs(c[..., 1:]) - 2.0, 1e-12)


def random_coefficients(rng, samples, N=5):
    """Sequences with a_1 = 1 and |a_n| <= n (uniform modulus and phase)."""
    a = np.zeros((samples, N + 1), dtype=complex)
    a[:, 1] = 1.0
    for s in range(samples):
        for k in range(2, N + 1):
            a[s, k] = k * rng.uniform() * complex(math.cos(t := rng.uniform(0, TWO_PI)), math.sin(t))
    return a


def identity_suite(samples=1_000, seed=1):
    """H_3 expansion vs determinant, the triangle majorant and rotation invariance."""
    rng = SplitMix64(seed)
    a = random_coefficients(rng, samples)
    lams = np.array([[rng.uniform(0.1, 3.0) for _ in range(3)] for _ in range(samples)])
    rel, tri = [], []
    for row, lam in zip(a, lams):
        det = hankel_lambda(row, DeterminantSpec("H", 1, 3, lam))
        exp = h3_expand(row, *lam)
        rhs = triangle_rhs(row, *lam)
        rel.append(abs(exp - det) / max(1.0, rhs))
        tri.append(abs(exp) - rhs)
    results = [
        _result("h3 expansion equals the 3x3 determinant (relative)", rel, 1e-12),
        _result("|H3| <= triangle majorant", tri, 1e-12),
    ]

    W, A = _random_mixtures(rng, samples)
    c = mixture_kernel(W, A, 4)
    rot = []
    for s in range(samples):
        f = lift_starlike(c[s], 5)
        eta = complex(math.cos(t := rng.uniform(0, TWO_PI)), math.sin(t))
        g = rotate(f, eta)
        params = [rng.uniform(0.1, 3.0) for _ in range(5)]
        for phi in (Functional.fekete_szego(params[0]), Functional.h2_2(params[1]),
                    Functional.b2_1(params[2]), Functional.h3(params[3], params[4], params[0])):
            u, v = abs(functional_eval(f, phi)), abs(functional_eval(g, phi))
            rot.append(abs(u - v) / max(1.0, u))
    results.append(_result("rotation preserves functional moduli", rot, 1e-12))
    return results


def proof_suite(grid=512):
    return [verify_claims("T2", grid), verify_claims("T3", grid)]


def run_suite(name, samples=None, seed=1, grid=512):
    """Run a named suite ("lemmas", "identities", "proofs" or "all").

    Returns ``(passed, rows)``; each row is a flat dict, one per check (proof
    claims get one row each, informational ones never fail the suite).
    """
    if name not in ("lemmas", "identities", "proofs", "all"):
        raise ValueError(f"unknown suite {name!r}")
    rows, passed = [], True

    def add(suite, results):
        nonlocal passed
        for r in results:
            rows.append({"suite": suite, **r.as_dict()})
            passed = passed and r.passed

    if name in ("lemmas", "all"):
        add("lemmas", lemma_suite(samples or 10_000, seed) + [lemma3_grid_suite()])
    if name in ("identities", "all"):
        add("identities", identity_suite(samples or 1_000, seed))
    if name in ("proofs", "all"):
        for report in proof_suite(grid):
            for c in report.claims:
                rows.append({"suite": f"proofs:{report.theorem}", "name": c.label,
                             "checks": c.grid_size, "violations": int(not c.passed),
                             "max_excess": c.max_deviation, "tolerance": c.tolerance,
                             "pass": c.passed, "informational": c.informational,
                             "location": c.location})
            passed = passed and report.passed
    return passed, rows
