"""Numerical suprema of |functional| over the starlike class.

Two backends:

* ``atoms``: coordinate-wise golden-section ascent over mixtures of m
  Moebius atoms (m angles plus m softmax logits), many seeded restarts.
* ``lemma3``: dense grid over (c1, |x|, arg x, arg z) with |z| = 1, then a
  golden-section polish of the best cell.  Only for functionals of a2..a4.

Restarts are run in lockstep as numpy batches.  Every operation is
elementwise along the restart axis, so a restart's trajectory depends only on
its own seed, never on how restarts are batched or threaded.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import bound_for
from .caratheodory import TWO_PI, AtomMixture, Lemma3Params, lemma3_coeffs, lemma3_kernel, \
    mixture_coeffs, mixture_kernel
from .determinants import Functional, functional_eval
from .rng import SplitMix64
from .starlike import lift_kernel, lift_starlike

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
ATTAINED_GAP = 1e-3
LOGIT_HALF_WIDTH = 12.0
LINE_XTOL = 1e-9
EXTRAPOLATE_MAX = 4.0


@dataclass(frozen=True)
class SearchConfig:
    atoms: int = 4
    restarts: int = 64
    max_iters: int = 400
    tol: float = 1e-10
    seed: int = 42
    grid: int = 65
    workers: int = 1

    def __post_init__(self):
        for name in ("atoms", "restarts", "max_iters", "grid", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass
class SearchResult:
    functional: Functional
    backend: str
    value: float
    witness: object
    bound: object
    seed: int
    restarts: int
    iterations: int
    atoms: int = None

    @property
    def gap(self):
        return self.bound.value - self.value

    @property
    def attained(self):
        return self.gap <= ATTAINED_GAP

    def as_dict(self):
        w = self.witness
        if isinstance(w, AtomMixture):
            witness = {"weights": list(w.weights), "angles": list(w.angles)}
        else:
            witness = {"c1": w.c1, "x": [w.x.real, w.x.imag],
                       "z": None if w.z is None else [w.z.real, w.z.imag]}
        return {
            "functional": str(self.functional),
            "backend": self.backend,
            "value": self.value,
            "bound": self.bound.as_dict(),
            "gap": self.gap,
            "attained": self.attained,
            "witness": witness,
            "seed": self.seed,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "atoms": self.atoms,
        }


def evaluate_witness(functional, witness):
    """|functional| of the starlike function generated by a witness, via the public pipeline."""
    N = functional.max_index
    if isinstance(witness, AtomMixture):
        c = mixture_coeffs(witness, N - 1)
    else:
        c = lemma3_coeffs(witness)
    return float(abs(functional_eval(lift_starlike(c, N), functional)))


def _check_functional(functional):
    # raises on parameters outside the theorem hypothesis
    return bound_for(functional)


# -- golden-section coordinate ascent -------------------------------------------

def _golden_line(fun, X, i, lo, hi):
    """Vectorized golden-section maximization of coordinate i on [lo, hi].

    Returns the bracket midpoint after a fixed number of steps.  Bracket
    widths are the same for every row, so the step count does not depend on
    which restarts share the batch.
    """
    steps = int(math.ceil(math.log(LINE_XTOL / float(np.max(hi - lo))) / math.log(INV_PHI)))
    a, b = lo.copy(), hi.copy()
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)

    def at(xi):
        Y = X.copy()
        Y[:, i] = xi
        return fun(Y)

    f1, f2 = at(x1), at(x2)
    for _ in range(max(steps, 1)):
        left = f1 >= f2
        # keep [a, x2] when f1 >= f2, else [x1, b]
        b = np.where(left, x2, b)
        a = np.where(left, a, x1)
        x2_new = np.where(left, x1, a + INV_PHI * (b - a))
        x1_new = np.where(left, b - INV_PHI * (b - a), x2)
        f_move = np.where(left, f1, f2)
        x1, x2 = x1_new, x2_new
        f_new = at(np.where(left, x1, x2))
        f1, f2 = np.where(left, f_new, f_move), np.where(left, f_move, f_new)
    return (a + b) / 2


def _sweep(fun, X, f, brackets):
    """One cycle of coordinate line searches followed by an extrapolation step."""
    X = X.copy()
    X_start = X.copy()
    for i in range(X.shape[1]):
        lo, hi = brackets(X, i)
        Y = X.copy()
        Y[:, i] = _golden_line(fun, X, i, lo, hi)
        fy = fun(Y)
        better = fy > f
        X[better] = Y[better]
        f = np.where(better, fy, f)
    # coordinate ascent crawls along curved ridges; a line search along the
    # sweep's net displacement (t in [0, EXTRAPOLATE_MAX]) gets it moving
    d = X - X_start
    T = np.zeros((len(X), 1))
    t = _golden_line(lambda T_: fun(X_start + T_ * d), T, 0,
                     np.zeros(len(X)), np.full(len(X), EXTRAPOLATE_MAX))
    Y = X_start + t[:, None] * d
    fy = fun(Y)
    better = fy > f
    X[better] = Y[better]
    return X, np.where(better, fy, f)


def _coordinate_ascent(fun, X, brackets, max_iters, tol):
    """Sweep until a sweep gains < tol or max_iters sweeps; converged rows drop out."""
    X = np.array(X, dtype=float)
    f = fun(X)
    active = np.ones(len(X), dtype=bool)
    sweeps = np.zeros(len(X), dtype=int)
    for _ in range(max_iters):
        idx = np.flatnonzero(active)
        if len(idx) == 0:
            break
        Xa, fa = _sweep(fun, X[idx], f[idx], lambda Z, i: brackets(Z, i))
        gain = fa - f[idx]
        X[idx], f[idx] = Xa, fa
        sweeps[idx] += 1
        active[idx[gain < tol]] = False
    return X, f, sweeps


# -- atom-mixture backend ---------------------------------------------------------

def _softmax(u):
    e = np.exp(u - u.max(axis=-1, keepdims=True))
    return e / e.sum(axis=-1, keepdims=True)


def _atom_objective(functional, m):
    N = functional.max_index

    def fun(X):
        c = mixture_kernel(_softmax(X[:, m:]), X[:, :m], N - 1)
        return np.abs(functional_eval(lift_kernel(c, N), functional))

    return fun


def _atom_start(seed, m):
    rng = SplitMix64(seed)
    angles = rng.uniforms(m, 0.0, TWO_PI)
    logits = [math.log(rng.exponential()) for _ in range(m)]
    return angles + logits


def _run_atom_chunk(functional, cfg, restart_ids):
    m = cfg.atoms
    X0 = np.array([_atom_start((cfg.seed + r) % 2**64, m) for r in restart_ids])

    def brackets(X, i):
        half = math.pi if i < m else LOGIT_HALF_WIDTH
        return X[:, i] - half, X[:, i] + half

    return _coordinate_ascent(_atom_objective(functional, m), X0, brackets, cfg.max_iters, cfg.tol)


def _best_index(values, X):
    key = [(-float(v), tuple(round(float(x), 12) for x in row)) for v, row in zip(values, X)]
    return min(range(len(key)), key=key.__getitem__)


def _chunks(n, workers):
    bounds = np.linspace(0, n, min(workers, n) + 1).astype(int)
    return [list(range(lo, hi)) for lo, hi in zip(bounds[:-1], bounds[1:])]


def sup_over_atoms(functional, cfg=SearchConfig()):
    """Estimate sup |functional| over starlike functions whose z f'/f is an m-atom mixture."""
    bound = _check_functional(functional)
    chunks = _chunks(cfg.restarts, cfg.workers)
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(lambda ids: _run_atom_chunk(functional, cfg, ids), chunks))
    else:
        parts = [_run_atom_chunk(functional, cfg, ids) for ids in chunks]
    X = np.concatenate([p[0] for p in parts])
    f = np.concatenate([p[1] for p in parts])
    sweeps = np.concatenate([p[2] for p in parts])
    best = _best_index(f, X)
    m = cfg.atoms
    angles = X[best, :m] % TWO_PI
    weights = _softmax(X[best, m:])
    witness = AtomMixture(tuple(weights), tuple(angles))
    return SearchResult(functional, "atoms", evaluate_witness(functional, witness), witness,
                        bound, cfg.seed, cfg.restarts, int(sweeps.sum()), m)


# -- (c1, x, z) grid backend ----------------------------------------------------

def _lemma3_values(functional, c1, x, z):
    return np.abs(functional_eval(lift_kernel(lemma3_kernel(c1, x, z), 4), functional))


def sup_over_lemma3(functional, cfg=SearchConfig()):
    """Estimate sup |functional| over the (c1, x, z) box for functionals of a2..a4.

    |z| = 1 suffices: the functional is affine in z, so its modulus peaks on
    the boundary circle.
    """
    if functional.max_index > 4:
        raise ValueError("not representable by Lemma 3 alone")
    bound = _check_functional(functional)
    n = cfg.grid
    c1 = np.linspace(0.0, 2.0, n)
    r = np.linspace(0.0, 1.0, n)
    ph = np.linspace(0.0, TWO_PI, n, endpoint=False)
    x = (r[:, None] * np.exp(1j * ph)[None, :])[:, :, None]
    z = np.exp(1j * ph)[None, None, :]
    best_val, best_idx = -1.0, None
    for i, c in enumerate(c1):
        vals = _lemma3_values(functional, c, x, z)
        j = int(np.argmax(vals))
        if vals.flat[j] > best_val:
            best_val, best_idx = float(vals.flat[j]), (i, *np.unravel_index(j, vals.shape))
    i, j, k, l = best_idx
    X0 = np.array([[c1[i], r[j], ph[k], ph[l]]])
    steps = np.array([c1[1] - c1[0], r[1] - r[0], ph[1] - ph[0], ph[1] - ph[0]])
    limits = [(0.0, 2.0), (0.0, 1.0), (-np.inf, np.inf), (-np.inf, np.inf)]

    def fun(X):
        return _lemma3_values(functional, X[:, 0], X[:, 1] * np.exp(1j * X[:, 2]), np.exp(1j * X[:, 3]))

    def brackets(X, idx):
        lo_lim, hi_lim = limits[idx]
        lo = np.maximum(X[:, idx] - steps[idx], lo_lim)
        hi = np.minimum(X[:, idx] + steps[idx], hi_lim)
        return lo, hi

    X, _, sweeps = _coordinate_ascent(fun, X0, brackets, cfg.max_iters, cfg.tol)
    cc, rr, px, pz = X[0]
    witness = Lemma3Params(min(max(cc, 0.0), 2.0), min(rr, 1.0) * np.exp(1j * px), np.exp(1j * pz))
    return SearchResult(functional, "lemma3", evaluate_witness(functional, witness), witness,
                        bound, cfg.seed, 1, int(sweeps.sum()))


BACKENDS = {"atoms": sup_over_atoms, "lemma3": sup_over_lemma3}


# -- sweeps -----------------------------------------------------------------------

@dataclass
class SweepEntry:
    param: tuple
    results: dict

    @property
    def best(self):
        return max(self.results.values(), key=lambda r: r.value)

    @property
    def value(self):
        return self.best.value

    @property
    def bound(self):
        return self.best.bound

    @property
    def status(self):
        return "attained" if self.best.attained else "open"

    @property
    def exceeds_alt(self):
        """Observed value beats the case-wise form of the bound."""
        alt = self.bound.alt_value
        return alt is not None and self.value > alt + 1e-9

    def as_dict(self):
        return {
            "param": list(self.param),
            "value": self.value,
            "bound": self.bound.as_dict(),
            "gap": self.best.gap,
            "status": self.status,
            "exceeds_alt": self.exceeds_alt,
            "backends": {k: v.as_dict() for k, v in self.results.items()},
        }


@dataclass
class SweepReport:
    kind: str
    config: SearchConfig
    entries: list = field(default_factory=list)

    def as_dict(self):
        return {"functional": self.kind, "atoms": self.config.atoms,
                "entries": [e.as_dict() for e in self.entries]}


def sharpness_sweep(kind, params, cfg=SearchConfig(), backends=None):
    """Search every parameter value; both backends where the functional allows."""
    if not params:
        raise ValueError("empty parameter list")
    report = SweepReport(kind, cfg)
    for p in params:
        p = tuple(p) if isinstance(p, (tuple, list)) else (p,)
        functional = Functional(kind, p)
        names = backends or (["atoms", "lemma3"] if functional.max_index <= 4 else ["atoms"])
        report.entries.append(SweepEntry(p, {name: BACKENDS[name](functional, cfg) for name in names}))
    return report
