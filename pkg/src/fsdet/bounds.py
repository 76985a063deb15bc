"""Closed-form bounds over the starlike class, with the active case reported."""

from dataclasses import dataclass

TOL = 1e-12


@dataclass(frozen=True)
class RatioParams:
    gamma: float
    alpha: float
    beta: float

    @classmethod
    def from_lambdas(cls, l1, l2, l3):
        if l1 == 0 or l2 == 0 or l3 == 0:
            raise ValueError("ratios need nonzero parameters")
        return cls(gamma=l2 / l1, alpha=l3 / l2, beta=l1 / l3)


@dataclass(frozen=True)
class BoundValue:
    """``alt_value`` is set where a bound also has a case-wise closed form."""

    value: float
    branch: str
    alt_value: float = None
    consistent: bool = True

    def as_dict(self):
        return {"value": self.value, "branch": self.branch,
                "alt_value": self.alt_value, "consistent": self.consistent}


def _require_nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"outside theorem hypothesis: {name} < 0")


def thm1_bound(gamma):
    """max{1, |4 gamma - 3|} for |a3 - gamma a2^2|."""
    value = max(1.0, abs(4.0 * gamma - 3.0))
    return BoundValue(value, "unit" if 0.5 <= gamma <= 1.0 else "koebe")


def thm2_piecewise(beta):
    if beta < 1:
        return 6.0 - 4.0 * beta, "[0,1]"
    if beta < 3:
        return 2.0 * beta, "[1,3]"
    return 4.0 * beta - 6.0, "[3,inf)"


def thm2_bound(beta):
    """2 max{beta, |3 - 2 beta|} for |a2 a3 - beta a4|.

    The closed form and the three-case form are both evaluated; they agree
    exactly in floating point, which sets ``consistent``.
    """
    _require_nonneg(beta=beta)
    value = 2.0 * max(beta, abs(3.0 - 2.0 * beta))
    piece, branch = thm2_piecewise(beta)
    return BoundValue(value, branch, piece, bool(value == piece))


def thm3_piecewise(alpha):
    if alpha <= 2.0 / 3.0:
        return 8.0 - 9.0 * alpha, "[0,2/3]"
    if alpha < 1:
        return 1.0, "(2/3,1]"
    return 9.0 * alpha - 8.0, "[1,inf)"


def thm3_bound(alpha):
    """max{1, |9 alpha - 8|} for |a2 a4 - alpha a3^2|, alongside the case-wise form.

    The two forms disagree on (2/3, 7/9), where the case-wise value 1
    is beaten by the Koebe function (8 - 9 alpha > 1); ``consistent`` is
    False there.
    """
    _require_nonneg(alpha=alpha)
    value = max(1.0, abs(9.0 * alpha - 8.0))
    piece, branch = thm3_piecewise(alpha)
    return BoundValue(value, branch, piece, bool(abs(value - piece) <= TOL))


def thm4_bound(l1, l2, l3):
    """5 max{l1, |4 l2 - 3 l1|} + 8 max{l1, |3 l3 - 2 l1|} + 3 max{l2, |9 l3 - 8 l2|}."""
    _require_nonneg(lambda1=l1, lambda2=l2, lambda3=l3)
    terms = [
        (5, l1, abs(4 * l2 - 3 * l1), "l1", "|4l2-3l1|"),
        (8, l1, abs(3 * l3 - 2 * l1), "l1", "|3l3-2l1|"),
        (3, l2, abs(9 * l3 - 8 * l2), "l2", "|9l3-8l2|"),
    ]
    value = 0.0
    labels = []
    for weight, left, right, left_name, right_name in terms:
        value += weight * max(left, right)
        labels.append(f"{weight}*{left_name if left >= right else right_name}")
    return BoundValue(float(value), " + ".join(labels))


def bound_for(functional):
    """Bound matching a :class:`~fsdet.determinants.Functional`."""
    p = functional.params
    return {
        "fekete_szego": lambda: thm1_bound(*p),
        "b2_1": lambda: thm2_bound(*p),
        "h2_2": lambda: thm3_bound(*p),
        "h3": lambda: thm4_bound(*p),
    }[functional.kind]()


COROLLARY4_PRINTED = (
    ((1, 1, 1), 16.0),
    ((1, 1, 2), 81.0),
    ((1, 2, 1), 51.5),
    ((2, 1, 1), 29.0),
    ((1, 2, 2), 63.0),
    ((2, 1, 2), 78.0),
    ((2, 2, 1), 52.5),
    ((1, 3, 2), 105.0),
)


@dataclass(frozen=True)
class TableRow:
    lambdas: tuple
    printed: float
    recomputed: float
    match: bool


def corollary4_table():
    """Tabulated constants next to the three-term bound evaluated directly."""
    rows = []
    for lambdas, printed in COROLLARY4_PRINTED:
        recomputed = thm4_bound(*lambdas).value
        rows.append(TableRow(lambdas, printed, recomputed, abs(recomputed - printed) <= TOL))
    return rows
