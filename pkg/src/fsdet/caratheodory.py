"""Functions of positive real part, p(z) = 1 + c1 z + c2 z^2 + ...

Coefficient arrays in this module hold ``(c1, ..., cN)``; the constant term 1
is implicit, so ``c[k - 1]`` is ``c_k``.
"""

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi
X_BOUNDARY_TOL = 1e-9
Z_SLACK = 1e-12


@dataclass(frozen=True)
class AtomMixture:
    """Convex combination of Moebius kernels (1 + e^{i theta} z) / (1 - e^{i theta} z)."""

    weights: tuple
    angles: tuple

    def __post_init__(self):
        w = tuple(float(t) for t in self.weights)
        th = tuple(float(t) for t in self.angles)
        if len(w) == 0 or len(w) != len(th):
            raise ValueError("weights and angles must be nonempty and of equal length")
        if any(t < 0 for t in w) or abs(math.fsum(w) - 1.0) > 1e-12:
            raise ValueError("not a probability vector")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "angles", tuple(t % TWO_PI for t in th))

    @property
    def m(self):
        return len(self.weights)


@dataclass(frozen=True)
class Lemma3Params:
    """(c1, x, z) with c1 in [0, 2] and x, z in the closed unit disk.

    ``z=None`` means z is unconstrained, which only happens when |x| = 1 and
    the z-term drops out.
    """

    c1: float
    x: complex
    z: complex = None

    def __post_init__(self):
        c1 = float(self.c1)
        x = complex(self.x)
        z = None if self.z is None else complex(self.z)
        ok = -1e-12 <= c1 <= 2 + 1e-12 and abs(x) <= 1 + 1e-12
        if z is None:
            ok = ok and abs(abs(x) - 1) <= X_BOUNDARY_TOL
        else:
            ok = ok and abs(z) <= 1 + 1e-12
        if not ok:
            raise ValueError("outside Lemma 3 domain")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)


def mixture_kernel(weights, angles, N):
    """Vectorized c_k = 2 sum_j t_j exp(i k theta_j); leading axes broadcast."""
    t = np.asarray(weights, dtype=float)
    th = np.asarray(angles, dtype=float)
    k = np.arange(1.0, N + 1.0)
    e = np.exp(1j * (th[..., None, :] * k[:, None]))
    return 2.0 * np.einsum("...j,...kj->...k", t, e)


def mixture_coeffs(mix, N):
    """Coefficients c1..cN of the mixture; a single atom at 0 is (1+z)/(1-z)."""
    return mixture_kernel(mix.weights, mix.angles, N)


def lemma3_kernel(c1, x, z):
    """Vectorized (c1, c2, c3) from the (c1, x, z) parametrization, stacked on the last axis."""
    c1 = np.asarray(c1, dtype=float)
    x = np.asarray(x, dtype=complex)
    z = np.asarray(z, dtype=complex)
    d = 4.0 - c1 * c1
    c2 = (c1 * c1 + x * d) / 2.0
    c3 = (c1**3 + 2.0 * x * c1 * d - x * x * c1 * d
          + 2.0 * (1.0 - (x.real**2 + x.imag**2)) * d * z) / 4.0
    c1, c2, c3 = np.broadcast_arrays(c1 + 0j, c2, c3)
    return np.stack([c1, c2, c3], axis=-1)


def lemma3_coeffs(p):
    z = 0j if p.z is None else p.z
    return lemma3_kernel(p.c1, p.x, z)


def normalize_rotation(c):
    """Rotate p(z) -> p(e^{-i phi} z) so that c1 becomes real and nonnegative.

    Returns ``(rotated, phi)`` with ``rotated[k-1] = c_k e^{-i k phi}``.
    """
    c = np.asarray(c, dtype=complex)
    phi = float(np.angle(c[0])) if abs(c[0]) > 0 else 0.0
    k = np.arange(1, len(c) + 1)
    rotated = c * np.exp(-1j * k * phi)
    rotated[0] = abs(c[0])
    return rotated, phi


def lemma3_invert(c):
    """Recover (c1, x, z) from (c1, c2, c3); c1 must be real in [0, 2).

    Use :func:`normalize_rotation` first for complex c1.
    """
    c = np.asarray(c, dtype=complex)
    if len(c) < 3:
        raise ValueError("need at least c1, c2, c3")
    c1, c2, c3 = c[0], c[1], c[2]
    if abs(c1) >= 2:
        raise ValueError("degenerate: c1 on boundary")
    if abs(c1.imag) > 1e-12 or c1.real < -1e-12:
        raise ValueError("c1 must be real and nonnegative; rotate first")
    c1 = max(c1.real, 0.0)
    d = 4.0 - c1 * c1
    x = (2.0 * c2 - c1 * c1) / d
    if abs(x) > 1 + X_BOUNDARY_TOL:
        raise ValueError("input not in P-representable range")
    if abs(x) >= 1 - X_BOUNDARY_TOL:
        return Lemma3Params(c1, x / abs(x), None)
    z = (4.0 * c3 - c1**3 - 2.0 * x * c1 * d + x * x * c1 * d) / (2.0 * (1.0 - abs(x) ** 2) * d)
    if abs(z) > 1:
        # rounding is amplified by 1 / (1 - |x|^2) near the boundary
        if abs(z) > 1 + Z_SLACK / (1.0 - abs(x) ** 2):
            raise ValueError("input not in P-representable range")
        z = z / abs(z)
    return Lemma3Params(c1, x, z)


def lemma2_check(c, sigma):
    """(|c2 - sigma c1^2 / 2|, 2 max{1, |sigma - 1|})."""
    c = np.asarray(c, dtype=complex)
    if len(c) < 2:
        raise ValueError("need at least c1, c2")
    lhs = abs(c[1] - sigma * c[0] ** 2 / 2.0)
    return float(lhs), 2.0 * max(1.0, abs(sigma - 1.0))


def random_mixture(rng, m):
    """Dirichlet-uniform weights (normalized exponentials) and uniform angles."""
    e = [rng.exponential() for _ in range(m)]
    total = math.fsum(e)
    weights = [v / total for v in e]
    # absorb rounding so the weights sum to 1 well inside the 1e-12 check
    weights[-1] = max(0.0, 1.0 - math.fsum(weights[:-1]))
    angles = rng.uniforms(m, 0.0, TWO_PI)
    return AtomMixture(tuple(weights), tuple(angles))
