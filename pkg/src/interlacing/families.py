"""Jacobi, Meixner-Pollaczek and Pseudo-Jacobi families.

For each family this module builds the monic recurrence table, computes the
two extra points (the real zeros of the family's quadratic), decides whether
they exist, and evaluates the mixed relation

    A P_n(x) = B(x) G_{n+1}(x) -/+ (x - E1)(x - E2) Q_n(x)

with P_n the family at its base parameters, and G_{n+1}, Q_n the family at
shifted parameters: Jacobi (a+1, b+1), Meixner-Pollaczek lambda+1,
Pseudo-Jacobi a+1. Jacobi uses the minus sign, the other two the plus sign.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, NamedTuple, Union

import numpy as np

from . import recurrence as rc
from .errors import (
    ComplexRootsError,
    DiscriminantNegativeError,
    InvalidParameterError,
)

MINUS = "minus"
PLUS = "plus"

B_NONZERO_TOL = 1e-10
COMMON_ZERO_TOL = 1e-8


# --------------------------------------------------------------------------
# family specs


@dataclass(frozen=True)
class Jacobi:
    alpha: float
    beta: float

    kind: ClassVar[str] = "jacobi"
    variant: ClassVar[str] = MINUS

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise InvalidParameterError(
                f"Jacobi needs alpha, beta > -1, got ({self.alpha!r}, {self.beta!r})"
            )

    def params(self):
        return {"alpha": self.alpha, "beta": self.beta}

    def shifted(self):
        return Jacobi(self.alpha + 1, self.beta + 1)

    def recurrence(self, N):
        return jacobi_recurrence(self.alpha, self.beta, N)

    def extra_points(self, n):
        return jacobi_extra_points(n, self.alpha, self.beta)


@dataclass(frozen=True)
class MeixnerPollaczek:
    lam: float
    phi: float

    kind: ClassVar[str] = "mp"
    variant: ClassVar[str] = PLUS

    def __post_init__(self):
        if not self.lam > 0:
            raise InvalidParameterError(f"Meixner-Pollaczek needs lambda > 0, got {self.lam!r}")
        if not 0 < self.phi < math.pi:
            raise InvalidParameterError(f"Meixner-Pollaczek needs 0 < phi < pi, got {self.phi!r}")

    def params(self):
        return {"lambda": self.lam, "phi": self.phi}

    def shifted(self):
        return MeixnerPollaczek(self.lam + 1, self.phi)

    def recurrence(self, N):
        return mp_recurrence(self.lam, self.phi, N)

    def extra_points(self, n):
        return mp_extra_points(n, self.lam, self.phi)


@dataclass(frozen=True)
class PseudoJacobi:
    a: float
    b: float

    kind: ClassVar[str] = "pj"
    variant: ClassVar[str] = PLUS

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidParameterError("Pseudo-Jacobi parameters must be finite")

    def params(self):
        return {"a": self.a, "b": self.b}

    def shifted(self):
        return PseudoJacobi(self.a + 1, self.b)

    def recurrence(self, N):
        return pj_recurrence(self.a, self.b, N)

    def extra_points(self, n):
        return pj_extra_points(n, self.a, self.b)


FamilySpec = Union[Jacobi, MeixnerPollaczek, PseudoJacobi]

FAMILIES = {"jacobi": Jacobi, "mp": MeixnerPollaczek, "pj": PseudoJacobi}


def make_family(kind: str, **params) -> FamilySpec:
    """Build a family from its short name and parameter names as printed."""
    if kind == "jacobi":
        return Jacobi(float(params["alpha"]), float(params["beta"]))
    if kind == "mp":
        return MeixnerPollaczek(float(params["lambda"]), float(params["phi"]))
    if kind == "pj":
        return PseudoJacobi(float(params["a"]), float(params["b"]))
    raise InvalidParameterError(f"unknown family {kind!r}", reason="unknown-family")


_ANGLE = re.compile(
    r"""^\s*(?:
        (?P<p1>[-+]?\d+)\s*/\s*(?P<q1>\d+)\s*\*?\s*pi         # 7/9pi
      | (?P<p2>[-+]?\d*)\s*\*?\s*pi\s*(?:/\s*(?P<q2>\d+))?    # 7pi/9, pi/4, pi
    )\s*$""",
    re.VERBOSE | re.IGNORECASE,
)


def angle_fraction(text: str) -> Fraction | None:
    """The rational multiple of pi written in ``text``, or None for plain radians."""
    m = _ANGLE.match(str(text))
    if not m:
        return None
    if m.group("p1") is not None:
        return Fraction(int(m.group("p1")), int(m.group("q1")))
    p = m.group("p2")
    p = 1 if p in ("", "+") else (-1 if p == "-" else int(p))
    return Fraction(p, int(m.group("q2") or 1))


def parse_angle(text) -> float:
    """Parse ``"7/9pi"``, ``"7pi/9"``, ``"pi/4"`` or plain radians."""
    if isinstance(text, (int, float)):
        return float(text)
    frac = angle_fraction(text)
    if frac is not None:
        return frac.numerator * math.pi / frac.denominator
    try:
        return float(text)
    except ValueError:
        raise InvalidParameterError(f"cannot parse angle {text!r}", reason="bad-angle") from None


# --------------------------------------------------------------------------
# recurrence tables


def _check_N(N):
    if int(N) != N or N < 1:
        raise InvalidParameterError(f"max degree must be a positive integer, got {N!r}")


def _finite_table(c, lam, what):
    if not (np.all(np.isfinite(c)) and np.all(np.isfinite(lam))):
        raise InvalidParameterError(f"non-finite {what} recurrence coefficients")
    return rc.RecurrenceTable(c, lam)


def jacobi_recurrence(alpha: float, beta: float, N: int) -> rc.RecurrenceTable:
    Jacobi(alpha, beta)
    _check_N(N)
    s = alpha + beta
    c = np.empty(N)
    lam = np.empty(N - 1)
    for n in range(N):
        if n == 0:
            # (b^2 - a^2) / ((a+b)(a+b+2)) with the common factor a+b cancelled
            c[0] = (beta - alpha) / (s + 2)
        else:
            # factored so nearly equal alpha, beta keep full relative accuracy
            c[n] = (beta - alpha) * s / ((2 * n + s) * (2 * n + s + 2))
        if n == 1:
            # n + a + b cancels against 2n + a + b - 1; stays finite as a + b -> -1
            lam[0] = 4 * (1 + alpha) * (1 + beta) / ((2 + s) ** 2 * (3 + s))
        elif n >= 2:
            lam[n - 1] = (
                4 * n * (n + alpha) * (n + beta) * (n + s)
                / ((2 * n + s) ** 2 * (2 * n + s + 1) * (2 * n + s - 1))
            )
    return _finite_table(c, lam, "Jacobi")


def mp_recurrence(lam: float, phi: float, N: int) -> rc.RecurrenceTable:
    MeixnerPollaczek(lam, phi)
    _check_N(N)
    cot = math.cos(phi) / math.sin(phi)
    sin2 = math.sin(phi) ** 2
    k = np.arange(N, dtype=float)
    c = -(k + lam) * cot
    m = k[1:]
    weights = m * (m + 2 * lam - 1) / (4 * sin2)
    return _finite_table(c, weights, "Meixner-Pollaczek")


def pj_recurrence(a: float, b: float, N: int) -> rc.RecurrenceTable:
    """Monic Pseudo-Jacobi recurrence for degrees up to N (needs a < -N).

    Obtained from the Jacobi coefficients at alpha = a + ib, beta = a - ib via
    P_n(x; a, b) = (-i)^n J_n(ix); checked against :func:`pj_poly`.
    """
    PseudoJacobi(a, b)
    _check_N(N)
    if not a < -N:
        raise InvalidParameterError(
            f"degrees up to {N} need a < {-N}, got a = {a!r}", reason="orthogonality-range"
        )
    k = np.arange(N, dtype=float)
    c = -a * b / ((k + a) * (k + a + 1))
    m = k[1:]
    weights = -m * ((m + a) ** 2 + b * b) * (m + 2 * a) / (
        (m + a) ** 2 * (2 * m + 2 * a + 1) * (2 * m + 2 * a - 1)
    )
    return _finite_table(c, weights, "Pseudo-Jacobi")


# --------------------------------------------------------------------------
# extra points


@dataclass(frozen=True)
class ExtraPoints:
    e1: float
    e2: float
    family: FamilySpec
    n: int
    discriminant: float

    def __post_init__(self):
        if self.e1 > self.e2:
            raise ValueError("extra points must satisfy e1 <= e2")

    def as_tuple(self):
        return (self.e1, self.e2)


def _stable_roots(s: float, p: float, disc: float) -> tuple[float, float]:
    """Sorted roots of x^2 - s x + p given disc = s^2 - 4p >= 0."""
    root = math.sqrt(disc)
    if s == 0.0:
        big = 0.5 * root
        return -big, big
    big = 0.5 * (s + math.copysign(root, s))
    small = p / big if big != 0.0 else 0.0
    return (small, big) if small <= big else (big, small)


def jacobi_quadratic(n: int, alpha: float, beta: float) -> tuple[float, float]:
    """(sum, product) of the zeros of T for the Jacobi pair."""
    s = alpha + beta
    b_root = (alpha - beta) / (2 * n + s + 2)
    c_shift = (beta - alpha) * (s + 2) / ((2 * n + s + 2) * (2 * n + s + 4))
    # ((2n+s+1)/n) * lam_{n+1} at (alpha+1, beta+1), common factors cancelled
    k = 4 * (n + alpha + 1) * (n + beta + 1) * (n + s + 2) / ((2 * n + s + 2) ** 2 * (2 * n + s + 3))
    return b_root + c_shift, b_root * c_shift - k


def jacobi_discriminant(n: int, alpha: float, beta: float) -> float:
    s = alpha + beta
    lin = 2 * (n + 1) * (alpha - beta) / ((2 * n + s + 4) * (2 * n + s + 2))
    bracket = (alpha - beta) ** 2 * (s + 2) / (2 * n + s + 4) + 4 * (n + alpha + 1) * (
        n + beta + 1
    ) * (n + s + 2) / (2 * n + s + 3)
    return lin * lin + 4 / (2 * n + s + 2) ** 2 * bracket


def jacobi_extra_points(n: int, alpha: float, beta: float) -> ExtraPoints:
    fam = Jacobi(alpha, beta)
    _check_n(n)
    s, p = jacobi_quadratic(n, alpha, beta)
    disc = jacobi_discriminant(n, alpha, beta)
    if not disc >= 0:
        raise DiscriminantNegativeError(
            f"Jacobi discriminant {disc!r} < 0 at n={n}, alpha={alpha}, beta={beta}",
            reason="discriminant-negative",
        )
    e1, e2 = _stable_roots(s, p, disc)
    return ExtraPoints(e1, e2, fam, n, disc)


def mp_window_theta(n: int, lam: float) -> float:
    return 0.5 * math.acos((2 * lam - n - 1) / (2 * lam + n + 1))


def mp_phi_window(n: int, lam: float):
    """The two open phi-intervals on which the quadratic T has distinct real zeros."""
    _check_n(n)
    MeixnerPollaczek(lam, math.pi / 2)
    theta = mp_window_theta(n, lam)
    return (0.0, theta), (math.pi - theta, math.pi)


def in_mp_phi_window(n: int, lam: float, phi: float) -> bool:
    (lo1, hi1), (lo2, hi2) = mp_phi_window(n, lam)
    return lo1 < phi < hi1 or lo2 < phi < hi2


def mp_quadratic(n: int, lam: float, phi: float) -> tuple[float, float, float]:
    """Coefficients (x^2, x, 1) of T_{n,lambda,phi}."""
    cos2 = math.cos(2 * phi)
    one_minus = 2 * math.sin(phi) ** 2
    return one_minus, (n + 1) * math.sin(2 * phi), lam * lam - (lam * lam + n * lam + lam) * cos2


def mp_discriminant(n: int, lam: float, phi: float) -> float:
    """Discriminant D of T in factored form (n+1+2l)^2 (1-cos2phi)(cos2phi - r)."""
    ratio = (2 * lam - n - 1) / (2 * lam + n + 1)
    return (n + 1 + 2 * lam) ** 2 * (2 * math.sin(phi) ** 2) * (math.cos(2 * phi) - ratio)


def mp_extra_points(n: int, lam: float, phi: float) -> ExtraPoints:
    fam = MeixnerPollaczek(lam, phi)
    _check_n(n)
    disc = mp_discriminant(n, lam, phi)
    if not disc > 0:
        theta = mp_window_theta(n, lam)
        raise ComplexRootsError(
            f"phi = {phi!r} is outside the window (0, {theta:.6g}) u ({math.pi - theta:.6g}, pi)"
            f" for n={n}, lambda={lam}",
            reason="phi-outside-window",
        )
    qa, qb, qc = mp_quadratic(n, lam, phi)
    e1, e2 = _stable_roots(-qb / qa, qc / qa, disc / (qa * qa))
    return ExtraPoints(e1, e2, fam, n, disc)


class Admissibility(NamedTuple):
    ok: bool
    reason: str | None
    discriminant: float
    b_threshold: float
    closed_form_ok: bool


def pj_a_bound(n: int) -> float:
    return (-3 * n - 5 - math.sqrt(n * n + 2 * n + 5)) / 4


def pj_b_threshold(n: int, a: float) -> float:
    """Closed-form |b| threshold, read with absolute values in the radicand."""
    u = a + n + 1
    num = 4 * u * u * (u + 1) ** 2 * (2 * a + n + 2)
    den = (n + 1) * (4 * u * u - (2 * n - 2) * u - (n + 1))
    if den == 0:
        return math.inf
    return math.sqrt(abs(num) / abs(den))


def pj_quadratic(n: int, a: float, b: float) -> tuple[float, float]:
    """(sum, product) of the zeros of R_{n,a,b}."""
    u = a + n + 1
    uu = u * (u + 1)
    return b * (n + 1) / uu, (uu * (2 * a + n + 2) + b * b * (n + 1)) / (uu * (2 * a + 2 * n + 3))


def pj_discriminant(n: int, a: float, b: float) -> float:
    """Discriminant of R_{n,a,b}, written as N / (u^2 (u+1)^2 (2u+1))."""
    u = a + n + 1
    k = -4 * u * u + (2 * n - 2) * u + (n + 1)
    big_n = b * b * (n + 1) * k - 4 * u * u * (u + 1) ** 2 * (2 * u - n)
    return big_n / (u * u * (u + 1) ** 2 * (2 * u + 1))


def pj_admissible(n: int, a: float, b: float) -> Admissibility:
    """Whether R_{n,a,b} has real zeros under the bound on a.

    The decision uses the direct discriminant sign; the closed-form |b|
    threshold is reported alongside as a cross-check.
    """
    if math.isclose(a, -n - 2, rel_tol=0.0, abs_tol=1e-12):
        return Admissibility(False, "pj-excluded-point", math.nan, math.nan, False)
    thr = pj_b_threshold(n, a)
    if not a < pj_a_bound(n):
        return Admissibility(False, "pj-a-above-bound", math.nan, thr, False)
    disc = pj_discriminant(n, a, b)
    closed = abs(b) >= thr
    if not disc >= 0:
        return Admissibility(False, "pj-b-below-threshold", disc, thr, closed)
    return Admissibility(True, None, disc, thr, closed)


def pj_extra_points(n: int, a: float, b: float) -> ExtraPoints:
    fam = PseudoJacobi(a, b)
    _check_n(n)
    adm = pj_admissible(n, a, b)
    if not adm.ok:
        raise ComplexRootsError(
            f"R_{{n,a,b}} has no real zeros for n={n}, a={a}, b={b} ({adm.reason})",
            reason=adm.reason,
        )
    s, p = pj_quadratic(n, a, b)
    e1, e2 = _stable_roots(s, p, adm.discriminant)
    return ExtraPoints(e1, e2, fam, n, adm.discriminant)


def extra_points(family: FamilySpec, n: int) -> ExtraPoints:
    return family.extra_points(n)


def _check_n(n):
    if int(n) != n or n < 1:
        raise InvalidParameterError(f"degree n must be a positive integer, got {n!r}")


# --------------------------------------------------------------------------
# mixed relation


@dataclass(frozen=True, eq=False)
class MixedRelation:
    """A P_n = B G_{n+1} -/+ (x - E1)(x - E2) Q_n with B(x) = b_slope (x - b_root)."""

    family: FamilySpec
    n: int
    variant: str
    a_coeff: float
    b_slope: float
    b_root: float
    extra: ExtraPoints
    p_table: rc.RecurrenceTable
    g_table: rc.RecurrenceTable

    def b_value(self, x):
        return self.b_slope * (np.asarray(x, dtype=float) - self.b_root)

    def terms(self, x):
        """(A P_n, B G_{n+1}, (x-E1)(x-E2) Q_n) evaluated at ``x``."""
        x = np.asarray(x, dtype=float)
        n = self.n
        lhs = self.a_coeff * rc.eval_monic(self.p_table, n, x)
        bterm = self.b_value(x) * rc.eval_monic(self.g_table, n + 1, x)
        qterm = (x - self.extra.e1) * (x - self.extra.e2) * rc.eval_monic(self.g_table, n, x)
        return lhs, bterm, qterm

    def residual(self, x):
        lhs, bterm, qterm = self.terms(x)
        rhs = bterm - qterm if self.variant == MINUS else bterm + qterm
        return np.abs(lhs - rhs)

    def scale(self, x):
        lhs, bterm, qterm = self.terms(x)
        return np.abs(lhs) + np.abs(bterm) + np.abs(qterm)


def _a_factors(family: FamilySpec, n: int):
    """Numerator and denominator factors of the constant A."""
    if isinstance(family, Jacobi):
        s = family.alpha + family.beta
        lam_next = family.shifted().recurrence(n + 1).lam[n - 1]
        return [n + s + 1, lam_next], [n]
    if isinstance(family, MeixnerPollaczek):
        lam = family.lam
        return [2 * lam + n, 2 * lam + n + 1], [2, 2 * math.sin(family.phi) ** 2]
    a, b = family.a, family.b
    u = a + n + 1
    return [2, 2 * a + n + 1, 2 * a + n + 2, u * u + b * b], [
        u,
        2 * a + 2 * n + 1,
        2 * a + 2 * n + 2,
        2 * a + 2 * n + 3,
    ]


def mixed_relation(family: FamilySpec, n: int) -> MixedRelation:
    _check_n(n)
    ep = family.extra_points(n)
    num, den = _a_factors(family, n)
    a_coeff = math.prod(num) / math.prod(den)
    if isinstance(family, Jacobi):
        s = family.alpha + family.beta
        slope, root = 1.0, (family.alpha - family.beta) / (2 * n + s + 2)
    elif isinstance(family, MeixnerPollaczek):
        # -2 sin^2(phi) / (1 - cos 2phi) = -1
        slope, root = -1.0, family.lam * math.cos(family.phi) / math.sin(family.phi)
    else:
        slope, root = -1.0, family.b / (n + family.a + 1)
    p_table = family.recurrence(max(n, 1))
    g_table = family.shifted().recurrence(n + 1)
    return MixedRelation(family, n, family.variant, a_coeff, slope, root, ep, p_table, g_table)


def mixed_residual(family: FamilySpec, n: int, x):
    """|LHS - RHS| of the family's mixed relation at ``x``."""
    return mixed_relation(family, n).residual(x)


class SignChecks(NamedTuple):
    A_positive: bool
    B_nonzero_at_E: bool
    no_common_zero: bool


def sign_checks(family: FamilySpec, n: int) -> SignChecks:
    rel = mixed_relation(family, n)
    num, den = _a_factors(family, n)
    signs = [np.sign(f) for f in num + den]
    a_pos = all(sg != 0 for sg in signs) and math.prod(signs) > 0
    b_vals = np.abs(rel.b_value([rel.extra.e1, rel.extra.e2]))
    b_ok = bool(np.all(b_vals > B_NONZERO_TOL))
    p = rc.zeros(rel.p_table, n).array
    g = rc.zeros(rel.g_table, n + 1).array
    gap = float(np.min(np.abs(p[:, None] - g[None, :]))) if p.size else math.inf
    return SignChecks(bool(a_pos), b_ok, gap > COMMON_ZERO_TOL)
