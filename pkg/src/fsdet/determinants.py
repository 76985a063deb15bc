"""Coefficient determinants with Fekete-Szego-type parameters.

Coefficient inputs may be :class:`~fsdet.starlike.StarlikeCoeffs` or plain
index-aligned arrays (``a[n]`` multiplies ``z**n``).  Arrays may carry
leading batch axes; every evaluator here broadcasts over them.
"""

from dataclasses import dataclass

import numpy as np

from .starlike import StarlikeCoeffs


def _coeffs(f):
    a = f.a if isinstance(f, StarlikeCoeffs) else np.asarray(f, dtype=complex)
    return a


def _cofactor_det(M):
    q = M.shape[-1]
    if q == 1:
        return M[..., 0, 0]
    if q == 2:
        return M[..., 0, 0] * M[..., 1, 1] - M[..., 0, 1] * M[..., 1, 0]
    total = 0
    for j in range(q):
        minor = np.delete(M[..., 1:, :], j, axis=-1)
        term = M[..., 0, j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _elimination_det(M):
    A = np.array(M, dtype=complex)
    q = A.shape[0]
    det = 1.0 + 0j
    for col in range(q):
        piv = col + int(np.argmax(np.abs(A[col:, col])))
        if A[piv, col] == 0:
            return 0j
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            det = -det
        det *= A[col, col]
        A[col + 1:, col:] -= np.outer(A[col + 1:, col] / A[col, col], A[col, col:])
    return det


def det_eval(M, method=None):
    """Determinant of a square complex matrix (or a stack of them).

    Cofactor expansion for q <= 4, partial-pivot elimination otherwise;
    ``method`` ("cofactor" or "elimination") forces one route.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim < 2 or M.shape[-1] != M.shape[-2]:
        raise ValueError("matrix must be square")
    q = M.shape[-1]
    method = method or ("cofactor" if q <= 4 else "elimination")
    if method == "cofactor":
        return _cofactor_det(M)
    if method != "elimination":
        raise ValueError(f"unknown method {method!r}")
    if M.ndim == 2:
        return _elimination_det(M)
    flat = M.reshape((-1, q, q))
    return np.array([_elimination_det(m) for m in flat]).reshape(M.shape[:-2])


@dataclass(frozen=True)
class DeterminantSpec:
    kind: str
    n: int
    q: int
    lambdas: tuple

    def __post_init__(self):
        if self.kind not in ("H", "B"):
            raise ValueError("kind must be 'H' or 'B'")
        if self.n < 1 or self.q < 1:
            raise ValueError("n and q must be >= 1")
        lambdas = tuple(float(v) for v in self.lambdas)
        if len(lambdas) != self.q:
            raise ValueError("need exactly q parameters")
        object.__setattr__(self, "lambdas", lambdas)

    @property
    def max_index(self):
        if self.kind == "H":
            return self.n + 2 * (self.q - 1)
        return self.n + self.q * self.q - 1

    def matrix(self, f):
        a = _coeffs(f)
        if a.shape[-1] <= self.max_index:
            raise ValueError(f"insufficient coefficients: need a_{self.max_index}")
        n, q = self.n, self.q
        i, j = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
        if self.kind == "H":
            M = a[..., n + i + j]
            M[..., 0, :] *= np.asarray(self.lambdas)
        else:
            M = a[..., n + i * q + j]
            M[..., :, q - 1] *= np.asarray(self.lambdas)
        return M

    def evaluate(self, f):
        return det_eval(self.matrix(f))


def hankel_lambda(f, spec):
    """Hankel determinant whose first row carries the parameters lambda_j."""
    if spec.kind != "H":
        raise ValueError("hankel_lambda needs kind='H'")
    return spec.evaluate(f)


def b_lambda(f, spec):
    """Row-stride-q determinant whose last column carries the parameters."""
    if spec.kind != "B":
        raise ValueError("b_lambda needs kind='B'")
    return spec.evaluate(f)


@dataclass(frozen=True)
class Functional:
    """One of the named coefficient functionals.

    ``fekete_szego``: a3 - gamma a2^2;  ``h2_2``: a2 a4 - alpha a3^2;
    ``b2_1``: a2 a3 - beta a4 (conventional sign; the determinant itself is the
    negative);  ``h3``: the 3x3 determinant with first-row parameters.
    """

    kind: str
    params: tuple

    ARITY = {"fekete_szego": 1, "h2_2": 1, "b2_1": 1, "h3": 3}

    def __post_init__(self):
        if self.kind not in self.ARITY:
            raise ValueError(f"unknown functional {self.kind!r}")
        params = tuple(float(v) for v in self.params)
        if len(params) != self.ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {self.ARITY[self.kind]} parameter(s)")
        object.__setattr__(self, "params", params)

    @classmethod
    def fekete_szego(cls, gamma):
        return cls("fekete_szego", (gamma,))

    @classmethod
    def h2_2(cls, alpha):
        return cls("h2_2", (alpha,))

    @classmethod
    def b2_1(cls, beta):
        return cls("b2_1", (beta,))

    @classmethod
    def h3(cls, l1, l2, l3):
        return cls("h3", (l1, l2, l3))

    @property
    def max_index(self):
        return 5 if self.kind == "h3" else 4

    def __call__(self, f):
        return functional_eval(f, self)

    def __str__(self):
        return f"{self.kind}({','.join(f'{p:g}' for p in self.params)})"


def functional_eval(f, which):
    a = _coeffs(f)
    if a.shape[-1] <= which.max_index:
        raise ValueError(f"insufficient coefficients: need a_{which.max_index}")
    a2, a3, a4 = a[..., 2], a[..., 3], a[..., 4]
    if which.kind == "fekete_szego":
        (g,) = which.params
        return a3 - g * a2 * a2
    if which.kind == "h2_2":
        (al,) = which.params
        return a2 * a4 - al * a3 * a3
    if which.kind == "b2_1":
        (be,) = which.params
        return a2 * a3 - be * a4
    return hankel_lambda(a, DeterminantSpec("H", 1, 3, which.params))


def _ratios(l1, l2, l3):
    if l1 == 0 or l2 == 0 or l3 == 0:
        raise ValueError("ratio undefined; use hankel_lambda directly")
    return l3 / l2, l1 / l3, l2 / l1


def h3_expand(f, l1, l2, l3):
    """Three-term expansion of H_3(1) through the 2x2 functionals (needs a1 = 1)."""
    alpha, beta, gamma = _ratios(l1, l2, l3)
    a = _coeffs(f)
    a2, a3, a4, a5 = a[..., 2], a[..., 3], a[..., 4], a[..., 5]
    return (l2 * a3 * (a2 * a4 - alpha * a3 * a3)
            + l3 * a4 * (a2 * a3 - beta * a4)
            + l1 * a5 * (a3 - gamma * a2 * a2))


def triangle_rhs(f, l1, l2, l3):
    """Triangle-inequality majorant of |H_3(1)| from the same expansion."""
    alpha, beta, gamma = _ratios(l1, l2, l3)
    a = _coeffs(f)
    a2, a3, a4, a5 = a[..., 2], a[..., 3], a[..., 4], a[..., 5]
    return (abs(l1) * np.abs(a5) * np.abs(a3 - gamma * a2 * a2)
            + abs(l2) * np.abs(a3) * np.abs(a2 * a4 - alpha * a3 * a3)
            + abs(l3) * np.abs(a4) * np.abs(a2 * a3 - beta * a4))
