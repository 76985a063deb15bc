"""Truncated Taylor series with complex coefficients.

A series is a 1-D complex numpy array ``s`` where ``s[k]`` multiplies ``z**k``;
its truncation order is ``len(s) - 1``.  Everything here is double precision.
"""

import csv
import io

import numpy as np

DEFAULT_ORDER = 10


def as_series(coeffs, N=None):
    """Return ``coeffs`` as a complex array, optionally truncated to order N."""
    s = np.asarray(coeffs, dtype=complex)
    if s.ndim != 1:
        raise ValueError("series must be one-dimensional")
    if not np.all(np.isfinite(s)):
        raise ValueError("series has non-finite coefficients")
    if N is not None:
        if len(s) < N + 1:
            raise ValueError(f"series of order {len(s) - 1} is shorter than N={N}")
        s = s[: N + 1]
    return s


def series_lincomb(terms, N):
    """Coefficient-wise sum of ``scalar * series`` pairs, truncated to order N."""
    if not terms:
        raise ValueError("no terms")
    out = np.zeros(N + 1, dtype=complex)
    for scalar, s in terms:
        out += complex(scalar) * as_series(s, N)
    return out


def series_mul(a, b, N):
    """Cauchy product truncated to order N."""
    a = as_series(a, N)
    b = as_series(b, N)
    return np.convolve(a, b)[: N + 1]


def series_binomial_pow(u, k, p, N):
    """Coefficients of ``(1 - u z**k)**p`` through ``z**N``.

    The binomial coefficient binom(p, m) is accumulated as a running product,
    so real (non-integer) exponents work and nothing overflows.
    """
    if k < 1:
        raise ValueError("monomial degree must be >= 1")
    if N < 0:
        raise ValueError("order must be nonnegative")
    out = np.zeros(N + 1, dtype=complex)
    binom = 1.0
    neg_u = -complex(u)
    term = 1.0 + 0j
    for m in range(N // k + 1):
        out[k * m] = term * binom
        binom = binom * (p - m) / (m + 1)
        term = term * neg_u
    return out


def write_csv(coeffs, fh=None):
    """Write the ``k,re,im`` CSV; returns the text when ``fh`` is None."""
    s = as_series(coeffs)
    buf = io.StringIO() if fh is None else fh
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "re", "im"])
    for k, c in enumerate(s):
        writer.writerow([k, repr(float(c.real)), repr(float(c.imag))])
    if fh is None:
        return buf.getvalue()


def read_csv(fh):
    """Read a ``k,re,im`` CSV into a dense series (missing indices are zero)."""
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["k", "re", "im"]:
        raise ValueError("coefficient CSV must start with header 'k,re,im'")
    entries = {}
    for row in reader:
        if not row:
            continue
        if len(row) != 3:
            raise ValueError(f"malformed row: {row!r}")
        k = int(row[0])
        if k < 0 or k in entries:
            raise ValueError(f"bad or repeated index {k}")
        entries[k] = complex(float(row[1]), float(row[2]))
    if not entries:
        raise ValueError("coefficient CSV has no rows")
    out = np.zeros(max(entries) + 1, dtype=complex)
    for k, v in entries.items():
        out[k] = v
    return as_series(out)
