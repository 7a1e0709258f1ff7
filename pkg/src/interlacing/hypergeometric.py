"""Terminating 2F1 series and the monomial expansions built from them.

These give a second, recurrence-free route to the three polynomial families.
Everything is summed in complex arithmetic with running Pochhammer products and
only converted to real coefficients at the very end, after checking that the
discarded imaginary parts are negligible.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import InvalidParameterError, RealizationError

IMAG_TOL = 1e-9
MONIC_TOL = 1e-8


@dataclass(frozen=True)
class MonomialPoly:
    degree: int
    coeffs: tuple  # ascending powers
    imag_residue: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("need degree + 1 coefficients")

    def __call__(self, x):
        out = npoly.polyval(np.asarray(x, dtype=float), self.coeffs)
        return float(out) if np.ndim(out) == 0 else out

    def abs_scale(self, x):
        """Sum of |c_k| |x|^k: the natural size of rounding error in evaluation."""
        out = npoly.polyval(np.abs(np.asarray(x, dtype=float)), np.abs(self.coeffs))
        return float(out) if np.ndim(out) == 0 else out

    def roots(self, polish: bool = True) -> np.ndarray:
        r = np.sort(np.roots(self.coeffs[::-1]).real)
        if not polish:
            return r
        der = npoly.polyder(self.coeffs)
        for _ in range(5):
            r = r - npoly.polyval(r, self.coeffs) / npoly.polyval(r, der)
        return np.sort(r)


def pochhammer(a, k: int):
    out = 1.0 + 0j if isinstance(a, complex) else 1.0
    for j in range(k):
        out *= a + j
    return out


def _check_terminating(a, n_terms):
    if n_terms < 0 or abs(a + n_terms) > 1e-12:
        raise InvalidParameterError(
            f"first parameter {a!r} does not terminate the series at {n_terms} terms"
        )


def hyp2f1_terminating(a_c, b_c, c_c, z, n_terms: int) -> complex:
    """Sum of the 2F1 series whose first parameter is ``-n_terms``.

    Terms are generated left to right; a zero in the lower Pochhammer symbol
    before the series terminates raises :class:`InvalidParameterError`.
    """
    _check_terminating(a_c, n_terms)
    total = 1.0 + 0j
    term = 1.0 + 0j
    for k in range(n_terms):
        denom = (c_c + k) * (k + 1)
        if denom == 0:
            raise InvalidParameterError(f"pole: (c)_{k + 1} vanishes for c = {c_c!r}")
        term *= (a_c + k) * (b_c + k) / denom * z
        total += term
    return complex(total)


def _series_coeffs(n: int, b_lin, c_c, z_lin) -> np.ndarray:
    """Monomial coefficients of 2F1(-n, b(x); c; z(x)) for b, z affine in x."""
    b_lin = np.asarray(b_lin, dtype=complex)
    z_lin = np.asarray(z_lin, dtype=complex)
    total = np.array([1.0 + 0j])
    term = np.array([1.0 + 0j])
    for k in range(n):
        denom = (c_c + k) * (k + 1)
        if denom == 0:
            raise InvalidParameterError(f"pole: (c)_{k + 1} vanishes for c = {c_c!r}")
        shifted = b_lin.copy()
        shifted[0] += k
        term = npoly.polymul(npoly.polymul(term, shifted), z_lin) * ((-n + k) / denom)
        total = npoly.polyadd(total, term)
    out = np.zeros(n + 1, dtype=complex)
    out[: total.size] = total[: n + 1]
    return out


def _realize(coeffs: np.ndarray, n: int) -> MonomialPoly:
    scale = float(np.max(np.abs(coeffs)))
    residue = float(np.max(np.abs(coeffs.imag)))
    if residue > IMAG_TOL * scale:
        raise RealizationError(
            f"imaginary residue {residue:.3e} exceeds {IMAG_TOL:g} x max|coefficient| ({scale:.3e})"
        )
    lead = coeffs[-1].real
    if abs(lead - 1.0) > MONIC_TOL:
        raise RealizationError(f"leading coefficient {lead!r} is not 1")
    return MonomialPoly(n, tuple(coeffs.real), residue)


def mp_poly(n: int, lam: float, phi: float) -> MonomialPoly:
    """Monic Meixner-Pollaczek polynomial from its 2F1 representation."""
    if not lam > 0:
        raise InvalidParameterError(f"lambda must be positive, got {lam!r}")
    if not 0 < phi < math.pi:
        raise InvalidParameterError(f"phi must lie in (0, pi), got {phi!r}")
    e2 = cmath.exp(2j * phi)
    pre = (1j ** n) * pochhammer(2 * lam, n) * (e2 / (e2 - 1)) ** n
    coeffs = _series_coeffs(n, [lam, 1j], 2 * lam, [1 - 1 / e2])
    return _realize(pre * coeffs, n)


def pj_poly(n: int, a: float, b: float) -> MonomialPoly:
    """Monic Pseudo-Jacobi polynomial from its 2F1 representation."""
    if not a < -n:
        raise InvalidParameterError(
            f"degree {n} needs a < {-n}, got a = {a!r}", reason="orthogonality-range"
        )
    low = pochhammer(2 * a + n + 1, n)
    if low == 0:
        raise InvalidParameterError(f"(2a+n+1)_n vanishes for a = {a!r}")
    pre = 2 ** n * pochhammer(complex(a + 1, b), n) / ((1j ** n) * low)
    coeffs = _series_coeffs(n, [2 * a + n + 1], complex(a + 1, b), [0.5, -0.5j])
    return _realize(pre * coeffs, n)


def jacobi_poly_oracle(n: int, alpha: float, beta: float) -> MonomialPoly:
    """Monic Jacobi polynomial from (a+1)_n/n! 2F1(-n, n+a+b+1; a+1; (1-x)/2)."""
    if not (alpha > -1 and beta > -1):
        raise InvalidParameterError(f"need alpha, beta > -1, got ({alpha!r}, {beta!r})")
    coeffs = _series_coeffs(n, [n + alpha + beta + 1], alpha + 1, [0.5, -0.5])
    standard = pochhammer(alpha + 1, n) / math.factorial(n) * coeffs
    lead = pochhammer(n + alpha + beta + 1, n) / (2 ** n * math.factorial(n))
    return _realize(standard / lead, n)


def relative_discrepancy(poly: MonomialPoly, values, x) -> float:
    """Largest |poly(x) - values| over the grid, relative to the local size of poly.

    The local size at each x is the larger of sum |c_k| |x|^k and the largest
    |poly| on the grid, so points where poly nearly cancels are not judged
    against a vanishing scale.
    """
    x = np.asarray(x, dtype=float)
    own = np.asarray(poly(x))
    scale = np.maximum(poly.abs_scale(x), np.max(np.abs(own)))
    return float(np.max(np.abs(own - np.asarray(values)) / scale))
