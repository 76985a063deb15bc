"""Grid replay of the one-variable calculus behind the B_2 and H_2(2) bounds.

Notation follows the proofs: ``c`` is the real first coefficient of p in
[0, 2], ``rho = |x|`` from the (c1, x, z) parametrization of c2 and c3.
"""

from dataclasses import dataclass, field

import numpy as np

from .caratheodory import lemma3_kernel
from .determinants import Functional, functional_eval
from .starlike import lift_kernel

DEFAULT_GRID = 512
IDENTITY_TOL = 1e-12
LOCATION_TOL = 1e-8
FD_STEP = 1e-5
FD_TOL = 1e-6
ALPHA_SPLIT = 10.0 / 9.0


@dataclass
class Claim:
    label: str
    grid_size: int
    max_deviation: float
    tolerance: float
    location: dict = None
    informational: bool = False

    @property
    def passed(self):
        return self.max_deviation <= self.tolerance


@dataclass
class ProofReport:
    theorem: str
    claims: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.claims if not c.informational)

    def failures(self):
        return [c for c in self.claims if not c.passed and not c.informational]

    def as_dict(self):
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "claims": [
                {"label": c.label, "grid_size": c.grid_size, "max_deviation": c.max_deviation,
                 "tolerance": c.tolerance, "pass": c.passed, "informational": c.informational,
                 "location": c.location}
                for c in self.claims
            ],
        }


def _check_range(name, v, lo, hi=None):
    v = np.asarray(v, dtype=float)
    if np.any(v < lo) or (hi is not None and np.any(v > hi)):
        raise ValueError(f"{name} out of range")


# -- B_2^beta(1), beta in [0, 1] ---------------------------------------------

def t2_F(c, rho, beta):
    d = 4 - c * c
    return ((2 - beta) * c**3 / 4 + beta * d / 6 + (beta * c * d / 6) * rho
            + (beta * (c - 2) * d / 12) * rho**2)


def t2_dF(c, rho, beta):
    d = 4 - c * c
    return beta * c * d / 6 + (beta * (c - 2) * d / 6) * rho


def t2_G1(c, beta):
    return (2 - beta) * c**3 / 4 + beta * (4 - c * c) / 6


def t2_G2(c, beta):
    return (1 - beta) * c**3 / 2 + beta * c


def t2_G3(c, beta):
    return (3 - beta) * c**3 / 6 + 2 * beta / 3


def thm2_profile(c, rho, beta):
    """F(rho), G1, G2 and (for c <= 1) G3 of the B_2 bound argument."""
    _check_range("c", c, 0, 2)
    _check_range("rho", rho, 0, 1)
    _check_range("beta", beta, 0, 1)
    return {
        "F": t2_F(c, rho, beta),
        "G1": t2_G1(c, beta),
        "G2": t2_G2(c, beta),
        "G3": t2_G3(c, beta) if c <= 1 else None,
    }


# -- H_2^alpha(2), alpha >= 0 --------------------------------------------------

def _t3_linear_coeff(alpha):
    # the rho-coefficient flips sign once 9 alpha exceeds 10
    return np.where(alpha < ALPHA_SPLIT, 10 - 9 * alpha, 9 * alpha - 10)


def t3_F(c, rho, alpha):
    d = 4 - c * c
    return ((9 * alpha - 8) * c**4 / 16 + c * d / 6
            + (_t3_linear_coeff(alpha) * c * c * d / 24) * rho
            + (d * (c - 2) * ((4 - 3 * alpha) * c - 6 * alpha) / 48) * rho**2)


def t3_Fprime(c, rho, alpha):
    d = 4 - c * c
    return (_t3_linear_coeff(alpha) * c * c * d / 24
            + (d * (c - 2) * ((4 - 3 * alpha) * c - 6 * alpha) / 24) * rho)


def t3_G(c, alpha):
    low = (alpha - 1) * c**4 - 2 * (alpha - 1) * c * c + alpha
    high = (3 * alpha - 2) * c**4 / 12 + (3 * alpha - 4) * c * c / 3 + alpha
    return np.where(alpha < ALPHA_SPLIT, low, high)


def thm3_profile(c, rho, alpha):
    """F(rho), F'(rho) and G(c) = F(1) of the H_2(2) bound argument.

    Below alpha = 10/9 this is the F used in the argument; at and above it the variant
    with the rho-coefficient 9 alpha - 10.
    """
    _check_range("c", c, 0, 2)
    _check_range("rho", rho, 0, 1)
    _check_range("alpha", alpha, 0)
    return {
        "F": float(t3_F(c, rho, alpha)),
        "Fprime": float(t3_Fprime(c, rho, alpha)),
        "G": float(t3_G(c, alpha)),
    }


# -- claim sweeps ---------------------------------------------------------------

class _Tracker:
    """Running max of a deviation array with the location of the worst point."""

    def __init__(self, label, grid, tol, informational=False):
        self.claim = Claim(label, grid, 0.0, tol, None, informational)

    def update(self, dev, **coords):
        dev = np.broadcast_to(np.asarray(dev, dtype=float), np.broadcast_shapes(
            np.shape(dev), *(np.shape(v) for v in coords.values())))
        i = int(np.argmax(dev))
        worst = float(dev.flat[i])
        if worst > self.claim.max_deviation:
            self.claim.max_deviation = worst
            self.claim.location = {k: float(np.broadcast_to(v, dev.shape).flat[i])
                                   for k, v in coords.items()}


def _verify_t2(grid):
    c = np.linspace(0, 2, grid)
    rho = np.linspace(0, 1, grid)
    betas = np.linspace(0, 1, grid)
    C, R = c[:, None], rho[None, :]
    c_low = c[c <= 1]
    t = {name: _Tracker(label, grid, tol) for name, label, tol in [
        ("fd", "dF/drho matches a centered finite difference of F", FD_TOL),
        ("g1", "F(0) = G1(c)", IDENTITY_TOL),
        ("g2", "F(1) = G2(c) = (1-beta)c^3/2 + beta c", IDENTITY_TOL),
        ("g3", "F(c/(2-c)) = G3(c) = (3-beta)c^3/6 + 2beta/3 on c in [0,1]", IDENTITY_TOL),
        ("chain1", "G1(c) <= G2(c) on c in [0,2]", IDENTITY_TOL),
        ("chain2", "G2(c) <= G2(2) = 4 - 2beta", IDENTITY_TOL),
        ("g3max", "G3(c) <= G3(1) = (1+beta)/2 on c in [0,1]", IDENTITY_TOL),
        ("crit", "dF/drho vanishes and changes sign at rho = c/(2-c)", LOCATION_TOL),
        ("fmax", "max of F over c, rho is 4 - 2beta", IDENTITY_TOL),
    ]}
    R_lo, R_hi = np.clip(R - FD_STEP, 0, 1), np.clip(R + FD_STEP, 0, 1)
    for beta in betas:
        fd = (t2_F(C, R_hi, beta) - t2_F(C, R_lo, beta)) / (R_hi - R_lo)
        t["fd"].update(np.abs(fd - t2_dF(C, (R_hi + R_lo) / 2, beta)), c=C, rho=R, beta=beta)
        t["g1"].update(np.abs(t2_F(c, 0.0, beta) - t2_G1(c, beta)), c=c, beta=beta)
        t["g2"].update(np.abs(t2_F(c, 1.0, beta) - t2_G2(c, beta)), c=c, beta=beta)
        star = c_low / (2 - c_low)
        t["g3"].update(np.abs(t2_F(c_low, star, beta) - t2_G3(c_low, beta)), c=c_low, beta=beta)
        t["chain1"].update(t2_G1(c, beta) - t2_G2(c, beta), c=c, beta=beta)
        top = 4 - 2 * beta
        t["chain2"].update(t2_G2(c, beta) - t2_G2(2.0, beta), c=c, beta=beta)
        t["chain2"].update(abs(t2_G2(2.0, beta) - top), c=2.0, beta=beta)
        g3_top = (1 + beta) / 2
        t["g3max"].update(t2_G3(c_low, beta) - t2_G3(1.0, beta), c=c_low, beta=beta)
        t["g3max"].update(abs(t2_G3(1.0, beta) - g3_top), c=1.0, beta=beta)
        if beta > 0:
            eps = 1e-6
            t["crit"].update(np.abs(t2_dF(c_low, star, beta)), c=c_low, beta=beta)
            # strictly inside (0, 1) the derivative must go from >= 0 to <= 0
            inner = (star > eps) & (star < 1 - eps)
            below = -t2_dF(c_low[inner], star[inner] - eps, beta)
            above = t2_dF(c_low[inner], star[inner] + eps, beta)
            t["crit"].update(np.maximum(below, above), c=c_low[inner], beta=beta)
        t["fmax"].update(t2_F(C, R, beta) - top, c=C, rho=R, beta=beta)
        t["fmax"].update(abs(t2_F(2.0, 1.0, beta) - top), c=2.0, beta=beta)
    return ProofReport("T2", [tr.claim for tr in t.values()])


def _h22_lemma3_modulus(c, rho, alpha, phases=16):
    """max over arg x, arg z of |a2 a4 - alpha a3^2| under the (c1, x, z) substitution."""
    ang = 2 * np.pi * np.arange(phases) / phases
    x = rho[..., None, None] * np.exp(1j * ang)[:, None]
    z = np.exp(1j * ang)[None, :]
    coeffs = lemma3_kernel(c[..., None, None], x, z)
    a = lift_kernel(coeffs, 4)
    return np.abs(functional_eval(a, Functional.h2_2(alpha))).max(axis=(-2, -1))


def _verify_t3(grid):
    c = np.linspace(0, 2, grid)
    rho = np.linspace(0, 1, grid)
    C, R = c[:, None], rho[None, :]
    R_lo, R_hi = np.clip(R - FD_STEP, 0, 1), np.clip(R + FD_STEP, 0, 1)
    t = {name: _Tracker(label, grid, tol) for name, label, tol in [
        ("fd", "F'(rho) matches a centered finite difference of F", FD_TOL),
        ("g", "F(1) = G(c) (both alpha cases)", IDENTITY_TOL),
        ("mono", "F'(rho) >= 0 for 2/3 <= alpha <= 10/9", IDENTITY_TOL),
        ("low", "max of G on [0,2] is G(1) = 1 for 2/3 <= alpha <= 1", IDENTITY_TOL),
        ("mid", "max of G on [0,2] is G(2) = 9alpha - 8 for 1 <= alpha <= 10/9", IDENTITY_TOL),
        ("high", "max of G on [0,2] is G(2) = 9alpha - 8 for alpha >= 10/9", IDENTITY_TOL),
    ]}
    dom = _Tracker("F(rho) majorizes |a2a4 - alpha a3^2| over (x, z) phases (not claimed; "
                   "fails where 9alpha - 8 < 0)", grid, IDENTITY_TOL, informational=True)
    scale = lambda v: np.maximum(1.0, np.abs(v))  # noqa: E731
    for alpha in np.linspace(2.0 / 3.0, 2.0, grid):
        fd = (t3_F(C, R_hi, alpha) - t3_F(C, R_lo, alpha)) / (R_hi - R_lo)
        t["fd"].update(np.abs(fd - t3_Fprime(C, (R_hi + R_lo) / 2, alpha)), c=C, rho=R, alpha=alpha)
        G = t3_G(c, alpha)
        t["g"].update(np.abs(t3_F(c, 1.0, alpha) - G) / scale(G), c=c, alpha=alpha)
    for alpha in np.linspace(2.0 / 3.0, ALPHA_SPLIT, grid, endpoint=False):
        t["mono"].update(-t3_Fprime(C, R, alpha), c=C, rho=R, alpha=alpha)
    for alpha in np.linspace(2.0 / 3.0, 1.0, grid):
        G1 = float(t3_G(1.0, alpha))
        t["low"].update(t3_G(c, alpha) - G1, c=c, alpha=alpha)
        t["low"].update(abs(G1 - 1.0), c=1.0, alpha=alpha)
    for key, lo, hi, endpoint in (("mid", 1.0, ALPHA_SPLIT, False), ("high", ALPHA_SPLIT, 2.0, True)):
        for alpha in np.linspace(lo, hi, grid, endpoint=endpoint):
            G2 = float(t3_G(2.0, alpha))
            t[key].update(t3_G(c, alpha) - G2, c=c, alpha=alpha)
            t[key].update(abs(G2 - (9 * alpha - 8)) / scale(G2), c=2.0, alpha=alpha)
    coarse_c = np.linspace(0, 2, 33)
    coarse_rho = np.linspace(0, 1, 17)
    Cc, Rc = np.meshgrid(coarse_c, coarse_rho, indexing="ij")
    for alpha in np.linspace(2.0 / 3.0, 2.0, 41):
        dom.update(_h22_lemma3_modulus(Cc, Rc, alpha) - t3_F(Cc, Rc, alpha),
                   c=Cc, rho=Rc, alpha=alpha)
    return ProofReport("T3", [tr.claim for tr in t.values()] + [dom.claim])


def verify_claims(theorem, grid=DEFAULT_GRID):
    """Check each maximum/monotonicity step of a proof on a uniform grid.

    ``theorem`` is "T2" (beta in [0, 1]) or "T3" (alpha in [2/3, 2]).
    """
    if grid < 100:
        raise ValueError("grid must have at least 100 points per axis")
    if theorem == "T2":
        return _verify_t2(grid)
    if theorem == "T3":
        return _verify_t3(grid)
    raise ValueError(f"unknown theorem {theorem!r}")
