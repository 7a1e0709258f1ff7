"""Monic three-term recurrences and their zeros.

A table holds the coefficients of

    P_k(x) = (x - c_k) P_{k-1}(x) - lam_k P_{k-2}(x),   P_{-1} = 0, P_0 = 1,

so ``c[0]`` is c_1 (the step that produces P_1) and ``lam[0]`` is lam_2.
In the usual orthogonal-polynomial notation, c_{n+1} and lam_{n+1} enter the
step producing P_{n+1}; they are stored at ``c[n]`` and ``lam[n-1]``.

Zeros are the eigenvalues of the symmetric tridiagonal (Jacobi) matrix with
diagonal c_1..c_n and off-diagonal sqrt(lam_2)..sqrt(lam_n). They are located
by Sturm-count bisection and then polished with Newton steps on the recurrence.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeOutOfRangeError, InvalidTableError, NumericalFailureError

BISECTION_TOL = 1e-13
MAX_BISECTION_STEPS = 200
MAX_NEWTON_STEPS = 8
MULTISECTION = 63

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class RecurrenceTable:
    c: np.ndarray
    lam: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=float).ravel()
        lam = np.array(self.lam, dtype=float).ravel()
        if c.size < 1:
            raise InvalidTableError("a recurrence table needs at least one centre")
        if lam.size != c.size - 1:
            raise InvalidTableError(
                f"expected {c.size - 1} recurrence weights for max degree {c.size}, got {lam.size}"
            )
        if not (np.all(np.isfinite(c)) and np.all(np.isfinite(lam))):
            raise InvalidTableError("recurrence coefficients must be finite")
        bad = np.flatnonzero(lam <= 0)
        if bad.size:
            k = int(bad[0]) + 2
            raise InvalidTableError(f"lam_{k} = {lam[bad[0]]!r} is not positive")
        c.flags.writeable = False
        lam.flags.writeable = False
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "lam", lam)

    @property
    def max_degree(self) -> int:
        return self.c.size

    def truncated(self, n: int) -> RecurrenceTable:
        _check_degree(self, n, lo=1)
        return RecurrenceTable(self.c[:n], self.lam[: n - 1])


@dataclass(frozen=True)
class ZeroSet:
    """Strictly increasing zeros of a degree-``degree`` polynomial."""

    degree: int
    zeros: tuple

    def __post_init__(self):
        zs = tuple(float(z) for z in self.zeros)
        if len(zs) != self.degree:
            raise ValueError(f"degree {self.degree} but {len(zs)} zeros given")
        if any(b <= a for a, b in zip(zs, zs[1:])):
            raise ValueError("zeros must be strictly increasing")
        object.__setattr__(self, "zeros", zs)

    @classmethod
    def from_values(cls, values) -> ZeroSet:
        values = tuple(values)
        return cls(len(values), values)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.zeros, dtype=float)

    def __len__(self):
        return self.degree

    def __iter__(self):
        return iter(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]


def _check_degree(table: RecurrenceTable, n: int, lo: int = 0):
    if not lo <= n <= table.max_degree:
        raise DegreeOutOfRangeError(
            f"degree {n} outside [{lo}, {table.max_degree}] for this table"
        )


def _eval_scalar(c, lam, n, x):
    p_prev, p, d_prev, d = 0.0, 1.0, 0.0, 0.0
    for k in range(n):
        lam_k = lam[k - 1] if k >= 1 else 0.0
        shift = x - c[k]
        d_prev, d = d, p + shift * d - lam_k * d_prev
        p_prev, p = p, shift * p - lam_k * p_prev
    return p, d


def eval_monic(table: RecurrenceTable, n: int, x):
    """Value of the monic degree-``n`` polynomial at ``x`` (scalar or array)."""
    _check_degree(table, n)
    if np.ndim(x) == 0:
        return _eval_scalar(table.c.tolist(), table.lam.tolist(), n, float(x))[0]
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for k in range(1, n + 1):
        lam_k = table.lam[k - 2] if k >= 2 else 0.0
        p_prev, p = p, (x - table.c[k - 1]) * p - lam_k * p_prev
    return p


def eval_monic_with_derivative(table: RecurrenceTable, n: int, x):
    """Return ``(P_n(x), P_n'(x))`` using the differentiated recurrence."""
    _check_degree(table, n)
    if np.ndim(x) == 0:
        return _eval_scalar(table.c.tolist(), table.lam.tolist(), n, float(x))
    x = np.asarray(x, dtype=float)
    p_prev, p = np.zeros_like(x), np.ones_like(x)
    d_prev, d = np.zeros_like(x), np.zeros_like(x)
    for k in range(1, n + 1):
        lam_k = table.lam[k - 2] if k >= 2 else 0.0
        shift = x - table.c[k - 1]
        d_prev, d = d, p + shift * d - lam_k * d_prev
        p_prev, p = p, shift * p - lam_k * p_prev
    return p, d


def sturm_count(table: RecurrenceTable, n: int, x) -> np.ndarray:
    """Number of zeros of P_n strictly less than each point of ``x``.

    Counts negative pivots of the LDL^T factorisation of J_n - x I.
    """
    _check_degree(table, n, lo=1)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    d = table.c
    e2 = table.lam
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(e2[: n - 1], initial=0.0)))
    q = d[0] - x
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count = (q < 0).astype(int)
    for i in range(1, n):
        q = (d[i] - x) - e2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count


def gershgorin_bounds(table: RecurrenceTable, n: int) -> tuple[float, float]:
    d = table.c[:n]
    off = np.sqrt(table.lam[: n - 1])
    radius = np.zeros(n)
    radius[:-1] += off
    radius[1:] += off
    return float(np.min(d - radius)), float(np.max(d + radius))


def _bisect_all(table: RecurrenceTable, n: int):
    """Brackets [lo, hi] for every zero, narrowed until width <= tolerance.

    Each pass evaluates MULTISECTION interior points per bracket in a single
    vectorised Sturm count, so a pass shrinks a bracket by a factor of
    MULTISECTION + 1 instead of 2.
    """
    lo_bound, hi_bound = gershgorin_bounds(table, n)
    pad = 1e-12 * max(1.0, abs(lo_bound), abs(hi_bound))
    lo = np.full(n, lo_bound - pad)
    hi = np.full(n, hi_bound + pad)
    target = np.arange(1, n + 1)[:, None]
    frac = np.arange(1, MULTISECTION + 1) / (MULTISECTION + 1)
    for _ in range(MAX_BISECTION_STEPS):
        width = hi - lo
        tol = np.maximum(BISECTION_TOL, 4 * _EPS * np.maximum(np.abs(lo), np.abs(hi)))
        active = width > tol
        if not active.any():
            return lo, hi
        pts = lo[:, None] + width[:, None] * frac
        pts = np.minimum(np.maximum(pts, lo[:, None]), hi[:, None])
        cnt = sturm_count(table, n, pts.ravel()).reshape(pts.shape)
        above = cnt >= target
        has = above.any(axis=1)
        j = np.where(has, above.argmax(axis=1), MULTISECTION)
        rows = np.arange(n)
        new_hi = np.where(has, pts[rows, np.minimum(j, MULTISECTION - 1)], hi)
        new_lo = np.where(j > 0, pts[rows, np.maximum(j - 1, 0)], lo)
        new_lo = np.where(active, new_lo, lo)
        new_hi = np.where(active, new_hi, hi)
        if np.array_equal(new_lo, lo) and np.array_equal(new_hi, hi):
            # interval exhausted at floating-point resolution
            return lo, hi
        lo, hi = new_lo, new_hi
    width = hi - lo
    tol = np.maximum(BISECTION_TOL, 4 * _EPS * np.maximum(np.abs(lo), np.abs(hi)))
    failed = np.flatnonzero(width > tol)
    raise NumericalFailureError(
        f"bisection did not converge for zero {int(failed[0]) + 1} of degree {n}",
        index=int(failed[0]) + 1,
    )


def refine_zero(table: RecurrenceTable, n: int, z0: float, max_iter: int = MAX_NEWTON_STEPS) -> float:
    """Newton polish of a simple zero of P_n starting at ``z0``.

    Returns the iterate with the smallest residual. Raises
    :class:`NumericalFailureError` if the steps neither settle nor cut the
    starting residual by a factor of 1e3 within ``max_iter`` iterations.
    """
    _check_degree(table, n, lo=1)
    c, lam = table.c.tolist(), table.lam.tolist()
    z = float(z0)
    if not np.isfinite(z):
        raise NumericalFailureError(f"non-finite starting point {z0!r}")
    r0 = abs(_eval_scalar(c, lam, n, z)[0])
    best_z, best_r = z, r0
    settled = r0 == 0.0
    for _ in range(max_iter):
        if settled:
            break
        p, dp = _eval_scalar(c, lam, n, z)
        if p == 0.0:
            best_z, best_r, settled = z, 0.0, True
            break
        if dp == 0.0 or not np.isfinite(dp):
            break
        step = p / dp
        z = z - step
        if not np.isfinite(z):
            break
        r = abs(_eval_scalar(c, lam, n, z)[0])
        if r < best_r:
            best_z, best_r = z, r
        settled = abs(step) <= 2 * _EPS * max(1.0, abs(z))
    if not settled and best_r > 1e-3 * r0:
        raise NumericalFailureError(f"Newton iteration from {z0!r} did not converge in {max_iter} steps")
    return best_z


def zeros(table: RecurrenceTable, n: int) -> ZeroSet:
    """All ``n`` zeros of P_n in increasing order."""
    _check_degree(table, n)
    if n == 0:
        return ZeroSet(0, ())
    lo, hi = _bisect_all(table, n)
    mids = 0.5 * (lo + hi)
    out = []
    for i, (z0, a, b) in enumerate(zip(mids, lo, hi)):
        try:
            z = refine_zero(table, n, z0)
        except NumericalFailureError:
            z = z0
        # Newton may only move within the bisection bracket (plus rounding slack)
        slack = 4 * _EPS * max(1.0, abs(z0))
        if not (a - slack <= z <= b + slack):
            z = z0
        out.append(float(z))
    for i in range(1, n):
        if out[i] <= out[i - 1]:
            raise NumericalFailureError(
                f"zeros {i} and {i + 1} of degree {n} are not separated", index=i + 1
            )
    return ZeroSet(n, tuple(out))
