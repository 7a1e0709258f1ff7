"""Parameter sweeps, table reproduction and counterexample searches.

A sweep is described by a :class:`SweepSpec`, usually read from a flat
key-value file::

    # Meixner-Pollaczek, both phi-windows
    family = mp
    n = 2..10
    lambda = 0.5
    lambda = 2
    phi_frac = 0.25      # phi = 0.25 * theta (lower window)
    phi_frac = -0.25     # phi = pi - 0.25 * theta (upper window)
    seed = 0
    random_draws = 0

Keys may repeat; each occurrence adds a grid point, and one line may hold
several comma-separated values. Recognised grid keys:

* ``jacobi``: ``alpha``, ``beta``
* ``mp``: ``lambda``; ``phi`` (radians or ``p/qpi``) or ``phi_frac`` (signed
  fraction of the window half-width theta(n, lambda))
* ``pj``: ``a`` or ``a_offset`` (a = -n - 2 - offset); ``b`` or ``b_factor``
  (b = factor * |b|-threshold(n, a), sign taken from the factor)

``random_draws`` adds that many extra draws per degree, sampled uniformly
between the smallest and largest grid value of each dimension using ``seed``.
"""
from __future__ import annotations

import itertools
import json
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import families as fm
from . import recurrence as rc
from .errors import (
    DegenerateConfigurationError,
    HypothesisError,
    InterlacingError,
    InvalidParameterError,
    NumericalFailureError,
)
from .interlace import InterlaceReport, Verdict, classify
from .tables import TABLES, TOLERANCES

log = logging.getLogger(__name__)

MAX_DEGREE = 30
SIG_DIGITS = 15

_GRID_KEYS = {
    "jacobi": (("alpha",), ("beta",)),
    "mp": (("lambda",), ("phi", "phi_frac")),
    "pj": (("a", "a_offset"), ("b", "b_factor")),
}


class SpecError(InvalidParameterError):
    def __init__(self, message):
        super().__init__(message, reason="bad-spec")


# --------------------------------------------------------------------------
# sweep specification


@dataclass(frozen=True)
class SweepSpec:
    family: str
    n_values: tuple
    grids: dict  # key -> tuple of floats, insertion order = dimension order
    seed: int = 0
    random_draws: int = 0

    def __post_init__(self):
        if self.family not in _GRID_KEYS:
            raise SpecError(f"unknown family {self.family!r}")
        for n in self.n_values:
            if not 1 <= n <= MAX_DEGREE:
                raise SpecError(f"degree {n} outside 1..{MAX_DEGREE}")
        dims = self.dimensions()
        for key in self.grids:
            if not any(key in d for d in _GRID_KEYS[self.family]):
                raise SpecError(f"key {key!r} does not apply to family {self.family!r}")
        if len(dims) != len(_GRID_KEYS[self.family]) and self.grids:
            raise SpecError(f"{self.family} sweeps need one key from each of {_GRID_KEYS[self.family]}")

    def dimensions(self) -> tuple:
        out = []
        for choices in _GRID_KEYS[self.family]:
            found = [k for k in choices if k in self.grids]
            if len(found) > 1:
                raise SpecError(f"keys {found} are alternatives; use one")
            out.extend(found)
        return tuple(out)

    @classmethod
    def parse(cls, text: str) -> SweepSpec:
        family = None
        n_values: list[int] = []
        grids: dict[str, list[float]] = {}
        seed, random_draws = 0, 0
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not value:
                raise SpecError(f"line {lineno}: expected 'key = value', got {raw!r}")
            try:
                if key == "family":
                    family = value
                elif key == "n":
                    for part in value.split(","):
                        lo, dots, hi = part.strip().partition("..")
                        n_values.extend(range(int(lo), int(hi) + 1) if dots else [int(lo)])
                elif key == "seed":
                    seed = int(value)
                elif key == "random_draws":
                    random_draws = int(value)
                elif key == "phi":
                    grids.setdefault(key, []).extend(fm.parse_angle(v.strip()) for v in value.split(","))
                else:
                    grids.setdefault(key, []).extend(float(v) for v in value.split(","))
            except ValueError as exc:
                raise SpecError(f"line {lineno}: {exc}") from None
        if family is None:
            raise SpecError("missing 'family' key")
        return cls(family, tuple(n_values), {k: tuple(v) for k, v in grids.items()}, seed, random_draws)

    @classmethod
    def from_file(cls, path) -> SweepSpec:
        return cls.parse(Path(path).read_text())

    def points(self):
        """Yield ``(n, {key: value})`` in grid order, then the random draws."""
        dims = self.dimensions()
        axes = [self.grids[k] for k in dims]
        if not dims or not all(axes):
            return  # an empty grid has no draws
        for n in self.n_values:
            for combo in itertools.product(*axes):
                yield n, dict(zip(dims, combo))
        if self.random_draws:
            rng = np.random.default_rng(self.seed)
            for n in self.n_values:
                for _ in range(self.random_draws):
                    yield n, {k: float(rng.uniform(min(a), max(a))) for k, a in zip(dims, axes)}


def default_spec(name: str) -> SweepSpec:
    """One of the grid files shipped with the package, e.g. ``"conjecture1"``."""
    path = resources.files("interlacing") / "grids" / f"{name}.grid"
    if not path.is_file():
        raise SpecError(f"no default grid named {name!r}")
    return SweepSpec.parse(path.read_text())


def resolve(kind: str, n: int, coords: dict):
    """Absolute family parameters for one draw, or raise InvalidParameterError."""
    if kind == "jacobi":
        return fm.Jacobi(coords["alpha"], coords["beta"])
    if kind == "mp":
        lam = coords["lambda"]
        if "phi" in coords:
            return fm.MeixnerPollaczek(lam, coords["phi"])
        f = coords["phi_frac"]
        fm.MeixnerPollaczek(lam, math.pi / 2)
        theta = fm.mp_window_theta(n, lam)
        phi = f * theta if f > 0 else math.pi + f * theta
        return fm.MeixnerPollaczek(lam, phi)
    a = coords["a"] if "a" in coords else -n - 2 - coords["a_offset"]
    if "b" in coords:
        b = coords["b"]
    else:
        b = coords["b_factor"] * fm.pj_b_threshold(n, a)
    return fm.PseudoJacobi(a, b)


def filter_reason(family, n: int) -> str | None:
    """Why a draw is outside the region a sweep is meant to cover (None if inside)."""
    if isinstance(family, fm.MeixnerPollaczek):
        if not fm.in_mp_phi_window(n, family.lam, family.phi):
            return "phi-outside-window"
    elif isinstance(family, fm.PseudoJacobi):
        adm = fm.pj_admissible(n, family.a, family.b)
        if not adm.ok:
            return adm.reason
        if not family.a < -n - 2:
            # a+1 < -(n+1) keeps degree n+1 orthogonal at the shifted parameter
            return "orthogonality-range"
    return None


# --------------------------------------------------------------------------
# one draw


def _round(x):
    return float(f"{x:.{SIG_DIGITS}g}")


def _clean(obj):
    if isinstance(obj, float):
        return _round(obj) if math.isfinite(obj) else str(obj)
    if isinstance(obj, (np.floating, np.integer)):
        return _clean(obj.item())
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_clean(v) for v in obj]
    return obj


def report_dict(rep: InterlaceReport) -> dict:
    return {
        "variant": rep.variant.value,
        "placement_e1": str(rep.placement_e1),
        "placement_e2": str(rep.placement_e2),
        "verdict": rep.verdict.value,
        "checked": rep.checked,
        "chain": rep.chain,
        "chains": dict(rep.chains),
        "statements": list(rep.statements),
        "detail": rep.detail,
        "mismatch": rep.mismatch,
    }


@dataclass(frozen=True, eq=False)
class Record:
    family: fm.FamilySpec
    n: int
    extra: fm.ExtraPoints
    report: InterlaceReport
    checks: fm.SignChecks
    p_zeros: rc.ZeroSet
    g_zeros: rc.ZeroSet

    @property
    def params(self) -> dict:
        return {"family": self.family.kind, "n": self.n, **self.family.params()}

    @property
    def distinct_gaps(self) -> bool:
        p1, p2 = self.report.placement_e1, self.report.placement_e2
        return p1.kind == p2.kind == "gap" and p1.k != p2.k

    @property
    def conjecture_holds(self) -> bool:
        ch = self.report.chains
        return bool(ch.get("(x-E1)G ≺ (x-E2)P") or ch.get("(x-E2)G ≺ (x-E1)P"))

    @property
    def defective(self) -> bool:
        """A theorem-sweep defect: the prediction was not confirmed on the zeros."""
        return not self.report.checked or self.report.verdict in (
            Verdict.INCONCLUSIVE,
            Verdict.IMPOSSIBLE_CONFIG,
        )

    def to_dict(self, with_zeros: bool = False) -> dict:
        out = {
            "params": self.params,
            "e1": self.extra.e1,
            "e2": self.extra.e2,
            "discriminant": self.extra.discriminant,
            "sign_checks": self.checks._asdict(),
            "report": report_dict(self.report),
        }
        if with_zeros:
            out["p_zeros"] = list(self.p_zeros)
            out["g_zeros"] = list(self.g_zeros)
        return out


def run_draw(family: fm.FamilySpec, n: int) -> Record:
    """recurrences -> zeros -> extra points -> classify (which also verifies the chain).

    Raises :class:`HypothesisError` when the sign checks fail, since the
    theorems then make no claim.
    """
    ep = family.extra_points(n)
    p = rc.zeros(family.recurrence(n), n)
    g = rc.zeros(family.shifted().recurrence(n + 1), n + 1)
    checks = fm.sign_checks(family, n)
    for ok, reason in zip(checks, ("hypothesis-A-sign", "hypothesis-B-at-E", "hypothesis-common-zero")):
        if not ok:
            raise HypothesisError(f"{family} at n={n} fails {reason}", reason)
    rep = classify(family.variant, p, g, ep.e1, ep.e2)
    return Record(family, n, ep, rep, checks, p, g)


def _attempt(task):
    kind, n, coords = task
    try:
        family = resolve(kind, n, coords)
    except InvalidParameterError as exc:
        return None, {"n": n, **coords}, exc.reason
    params = {"family": kind, "n": n, **family.params()}
    reason = filter_reason(family, n)
    if reason:
        return None, params, reason
    try:
        return run_draw(family, n), params, None
    except HypothesisError as exc:
        return None, params, exc.reason
    except DegenerateConfigurationError:
        return None, params, "degenerate-configuration"
    except NumericalFailureError:
        return None, params, "numerical-failure"
    except InvalidParameterError as exc:
        return None, params, exc.reason
    except InterlacingError as exc:
        return None, params, type(exc).__name__


# draws that sit outside the intended region; anything else is a failure
FILTER_REASONS = frozenset(
    {
        "invalid-parameter",
        "phi-outside-window",
        "orthogonality-range",
        "pj-excluded-point",
        "pj-a-above-bound",
        "pj-b-below-threshold",
        "inadmissible",
        "hypothesis-A-sign",
        "hypothesis-B-at-E",
        "hypothesis-common-zero",
    }
)


# --------------------------------------------------------------------------
# results


@dataclass
class ScanResult:
    kind: str
    records: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    skipped: list = field(default_factory=list)  # (params, reason)

    @property
    def summary(self) -> dict:
        verdicts = Counter(r.report.verdict.value for r in self.records)
        return {
            "records": len(self.records),
            "counterexamples": len(self.counterexamples),
            "verdicts": {v.value: verdicts.get(v.value, 0) for v in Verdict},
            "skipped": dict(sorted(Counter(reason for _, reason in self.skipped).items())),
        }

    @property
    def failures(self) -> list:
        """Skipped draws whose reason is not a region filter (degenerate, numerical)."""
        return [s for s in self.skipped if s[1] not in FILTER_REASONS]

    def to_dict(self) -> dict:
        return _clean(
            {
                "kind": self.kind,
                "summary": self.summary,
                "records": [r.to_dict() for r in self.records],
                "counterexamples": [r.to_dict(with_zeros=True) for r in self.counterexamples],
                "skipped": [{"params": p, "reason": why} for p, why in self.skipped],
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, indent=1)


def _sweep(spec: SweepSpec, workers: int = 1):
    tasks = [(spec.family, n, coords) for n, coords in spec.points()]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps grid order, so output is independent of scheduling
            yield from pool.map(_attempt, tasks, chunksize=max(1, len(tasks) // (8 * workers)))
    else:
        yield from map(_attempt, tasks)


def _collect(kind: str, spec: SweepSpec, workers: int, is_counterexample) -> ScanResult:
    out = ScanResult(kind)
    for record, params, reason in _sweep(spec, workers):
        if record is None:
            log.debug("skipped %s: %s", params, reason)
            out.skipped.append((params, reason))
            continue
        out.records.append(record)
        if is_counterexample(record):
            out.counterexamples.append(record)
    return out


def _conjecture(kind, family, spec, workers):
    if spec.family != family:
        raise SpecError(f"{kind} needs a {family!r} sweep, got {spec.family!r}")
    return _collect(kind, spec, workers, lambda r: r.distinct_gaps and not r.conjecture_holds)


def scan_conjecture1(spec: SweepSpec, workers: int = 1) -> ScanResult:
    """Meixner-Pollaczek: with E1, E2 in distinct gaps, one of the crossed chains holds."""
    return _conjecture("conjecture1", "mp", spec, workers)


def scan_conjecture2(spec: SweepSpec, workers: int = 1) -> ScanResult:
    """Pseudo-Jacobi analogue of :func:`scan_conjecture1`."""
    return _conjecture("conjecture2", "pj", spec, workers)


def theorem_sweep(spec: SweepSpec, variant=None, workers: int = 1) -> ScanResult:
    """Full pipeline per draw; unconfirmed verdicts are collected as counterexamples."""
    expected = {"jacobi": fm.MINUS}.get(spec.family, fm.PLUS)
    if variant is not None and getattr(variant, "value", variant) != expected:
        raise SpecError(f"family {spec.family!r} satisfies the {expected} relation")
    return _collect("theorem", spec, workers, lambda r: r.defective)


# --------------------------------------------------------------------------
# table reproduction


def pj_parameters_from_extra_points(n: int, e1: float, e2: float, a_hint: float):
    """(a, b) whose extra points are exactly e1, e2; the root nearest ``a_hint`` is used."""
    s, p = e1 + e2, e1 * e2
    m = n + 1
    roots = np.roots([s * s, s * s + 2 * m - 2 * p * m, -n * m - p * m])
    roots = roots[np.isreal(roots)].real
    u = float(roots[np.argmin(np.abs(roots - (a_hint + n + 1)))])
    return u - n - 1, s * u * (u + 1) / m


def _deviations(computed, printed, mode):
    computed, printed = np.asarray(computed), np.asarray(printed)
    dev = np.abs(computed - printed)
    rel = dev / np.abs(printed)
    return dev, rel, (dev if mode == "abs" else rel)


@dataclass
class BlockReport:
    params: dict
    n: int
    computed: dict  # e, z, y
    printed: dict
    max_abs: float
    max_rel: float
    worst: list  # cells over tolerance: (name, printed, computed, deviation)
    verdict: str
    expected_verdict: str
    statements: list
    expected_statements: list
    extras: dict = field(default_factory=dict)

    @property
    def verdict_match(self) -> bool:
        return self.verdict == self.expected_verdict

    @property
    def statements_match(self) -> bool:
        return self.statements == self.expected_statements

    @property
    def values_ok(self) -> bool:
        return not self.worst

    @property
    def ok(self) -> bool:
        return self.values_ok and self.verdict_match and self.statements_match

    def to_dict(self):
        return _clean(
            {
                "params": self.params,
                "n": self.n,
                "computed": self.computed,
                "printed": self.printed,
                "max_abs_deviation": self.max_abs,
                "max_rel_deviation": self.max_rel,
                "out_of_tolerance": [list(w) for w in self.worst],
                "verdict": self.verdict,
                "expected_verdict": self.expected_verdict,
                "verdict_match": self.verdict_match,
                "statements": self.statements,
                "expected_statements": self.expected_statements,
                "statements_match": self.statements_match,
                "ok": self.ok,
                **self.extras,
            }
        )


@dataclass
class TableReport:
    table_id: str
    tolerance: tuple
    blocks: list

    @property
    def ok(self) -> bool:
        return all(b.ok for b in self.blocks)

    def to_dict(self):
        return {
            "table": self.table_id,
            "tolerance": {"mode": self.tolerance[0], "value": self.tolerance[1]},
            "ok": self.ok,
            "blocks": [b.to_dict() for b in self.blocks],
        }


def _compare_block(family, n, printed_e, printed_z, printed_y, mode, tol):
    rec = run_draw(family, n)
    names, comp, prin = [], [], []
    for label, c, p in (
        ("E", rec.extra.as_tuple(), printed_e),
        ("z", rec.p_zeros.zeros, printed_z),
        ("y", rec.g_zeros.zeros, printed_y),
    ):
        for i, (ci, pi) in enumerate(zip(c, p), start=1):
            names.append(f"{label}{i}")
            comp.append(ci)
            prin.append(pi)
    dev, rel, judged = _deviations(comp, prin, mode)
    worst = [(nm, pv, cv, float(d)) for nm, pv, cv, d in zip(names, prin, comp, judged) if d > tol]
    return rec, float(dev.max()), float(rel.max()), worst


def reproduce_table(table_id: str) -> TableReport:
    """Recompute every printed cell of a table and compare at its tolerance."""
    if table_id not in TABLES:
        raise InvalidParameterError(f"unknown table {table_id!r}", reason="unknown-table")
    mode, tol = TOLERANCES[table_id]
    blocks = []
    for blk in TABLES[table_id]:
        rec, max_abs, max_rel, worst = _compare_block(
            blk.family, blk.n, blk.e, blk.z, blk.y, mode, tol
        )
        extras = {}
        if isinstance(blk.family, fm.PseudoJacobi):
            a, b, n = blk.family.a, blk.family.b, blk.n
            predicted = b * (n + 1) / ((a + n + 1) * (a + n + 2))
            got = rec.extra.e1 + rec.extra.e2
            extras["root_sum"] = {
                "computed": got,
                "formula": predicted,
                "rel_error": abs(got - predicted) / abs(predicted),
            }
            # the printed digits were produced from unrounded parameters; recover them
            ra, rb = pj_parameters_from_extra_points(n, *blk.e, a_hint=a)
            _, r_abs, r_rel, r_worst = _compare_block(
                fm.PseudoJacobi(ra, rb), n, blk.e, blk.z, blk.y, "abs", 1e-4
            )
            extras["recovered_parameters"] = {
                "a": ra,
                "b": rb,
                "max_abs_deviation": r_abs,
                "max_rel_deviation": r_rel,
                "within_1e-4_abs": not r_worst,
            }
        blocks.append(
            BlockReport(
                params=dict(blk.params),
                n=blk.n,
                computed={"e": list(rec.extra.as_tuple()), "z": list(rec.p_zeros), "y": list(rec.g_zeros)},
                printed={"e": list(blk.e), "z": list(blk.z), "y": list(blk.y)},
                max_abs=max_abs,
                max_rel=max_rel,
                worst=worst,
                verdict=rec.report.verdict.value,
                expected_verdict=blk.verdict,
                statements=list(rec.report.statements),
                expected_statements=list(blk.statements),
                extras=extras,
            )
        )
    return TableReport(table_id, (mode, tol), blocks)
