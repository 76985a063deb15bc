"""Starlike functions f(z) = z + a2 z^2 + ... built from p = z f'/f.

Coefficient arrays are index-aligned with powers of z: ``a[0] = 0`` and
``a[1] = 1``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .series import DEFAULT_ORDER, series_binomial_pow

SPOT_CHECK_RADIUS = 0.99
SPOT_CHECK_POINTS = 720


@dataclass(frozen=True, eq=False)
class StarlikeCoeffs:
    a: np.ndarray
    provenance: str = ""
    suspect: bool = False

    def __post_init__(self):
        a = np.asarray(self.a, dtype=complex)
        if a.ndim != 1 or len(a) < 2:
            raise ValueError("need coefficients through a1")
        if a[1] != 1:
            raise ValueError("a1 must equal 1")
        a = a.copy()
        a[0] = 0
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def N(self):
        return len(self.a) - 1

    def __getitem__(self, n):
        return self.a[n]


def lift_kernel(c, N):
    """Vectorized lift: (n-1) a_n = sum_{k=1}^{n-1} a_k c_{n-k}, a_1 = 1.

    ``c`` has c1..c_{N-1} on its last axis; the result has a_0..a_N.
    """
    c = np.asarray(c, dtype=complex)
    if c.shape[-1] < N - 1:
        raise ValueError(f"need c1..c{N - 1} for order {N}")
    a = np.zeros(c.shape[:-1] + (N + 1,), dtype=complex)
    a[..., 1] = 1.0
    for n in range(2, N + 1):
        # sum_{k=1}^{n-1} a_k c_{n-k} as one dot product over k
        a[..., n] = np.einsum("...k,...k->...", a[..., 1:n], c[..., n - 2::-1][..., : n - 1]) / (n - 1)
    return a


def lift_starlike(c, N=DEFAULT_ORDER, provenance="lift"):
    """Starlike f with z f'/f = 1 + c1 z + c2 z^2 + ..., to order N."""
    return StarlikeCoeffs(lift_kernel(c, N), provenance)


def caratheodory_of(f):
    """Inverse of the lift: c1..c_{N-1} from the coefficients of f."""
    a = f.a if isinstance(f, StarlikeCoeffs) else np.asarray(f, dtype=complex)
    N = len(a) - 1
    c = np.zeros(N - 1, dtype=complex)
    for n in range(2, N + 1):
        acc = (n - 1) * a[n]
        for k in range(2, n):
            acc -= a[k] * c[n - k - 1]
        c[n - 2] = acc
    return c


# name -> (u, k, p) for f(z) = z (1 - u z^k)^p
def _catalog_shape(name, param):
    if name == "koebe":
        return 1.0, 1, -2.0
    if name == "two_symmetric":
        return 1.0, 2, -1.0
    if name == "kfold":
        if param is None or int(param) != param or param < 1:
            raise ValueError("kfold needs a positive integer k")
        k = int(param)
        return 1.0, k, -2.0 / k
    if name == "paper_thm2_literal":
        return 1.0, 3, -2.0
    if name == "paper_thm3_literal":
        if param is None or param <= 0:
            raise ValueError("paper_thm3_literal needs alpha > 0")
        return 1.0 / math.sqrt(param), 2, -1.0
    raise ValueError(f"unknown catalog function {name!r}")


CATALOG_NAMES = ("koebe", "two_symmetric", "kfold", "paper_thm2_literal", "paper_thm3_literal")
_LITERAL_NAMES = {"paper_thm2_literal", "paper_thm3_literal"}


def starlike_spot_check(u, k, p, radius=SPOT_CHECK_RADIUS, points=SPOT_CHECK_POINTS):
    """Minimum of Re[z f'/f] on |z| = radius for f = z (1 - u z^k)^p.

    Uses z f'/f = 1 - p k u z^k / (1 - u z^k) directly: a truncated series does
    not converge at this radius.  Returns -inf when 1 - u z^k vanishes inside
    the unit disk, since f is then not analytic there.
    """
    if abs(u) > 1:
        return -math.inf
    z = radius * np.exp(2j * np.pi * np.arange(points) / points)
    w = u * z**k
    q = 1 - p * k * w / (1 - w)
    return float(q.real.min())


def catalog(name, param=None, N=DEFAULT_ORDER):
    """Named extremal candidates, f(z) = z (1 - u z^k)^p.

    The two ``*_literal`` entries, claimed extremals that are not starlike, are always
    flagged suspect; any entry failing the starlikeness spot check is too.
    """
    u, k, p = _catalog_shape(name, param)
    a = np.zeros(N + 1, dtype=complex)
    a[1:] = series_binomial_pow(u, k, p, N - 1)
    label = name if param is None else f"{name}({param:g})"
    suspect = name in _LITERAL_NAMES or starlike_spot_check(u, k, p) < 0
    return StarlikeCoeffs(a, label, suspect)


def rotate(f, eta):
    """f -> conj(eta) f(eta z), i.e. a_n -> eta^(n-1) a_n."""
    eta = complex(eta)
    if abs(abs(eta) - 1) > 1e-12:
        raise ValueError("rotation factor must have modulus 1")
    n = np.arange(len(f.a))
    a = f.a * eta ** np.maximum(n - 1, 0)
    return StarlikeCoeffs(a, f"rotate({f.provenance})", f.suspect)
