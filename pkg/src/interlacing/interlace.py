"""Interlacing predicates and the verdict engine for completed interlacing.

Notation follows the usual convention: ``A ≺ B`` means the zeros of A and B
alternate starting with a zero of A, where deg A is either deg B + 1
(interlacing) or deg B (alternation). P has degree n with zeros z, G has
degree n+1 with zeros y, and E1 <= E2 are the extra points.

:func:`classify` places E1 and E2 on the zeros of G, predicts which chain must
hold from the sign of the mixed relation (``minus`` or ``plus``), and then
confirms the prediction on the actual zeros.
"""
from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import ArityError, DegenerateConfigurationError, OrderingError
from .recurrence import ZeroSet

SEPARATION = 1e-12
COINCIDENCE_TOL = 1e-10


class Variant(str, enum.Enum):
    MINUS = "minus"
    PLUS = "plus"


class Verdict(str, enum.Enum):
    TWO_POINT_COMPLETED = "TwoPointCompleted"
    G_FULLY_INTERLACES_P = "GFullyInterlacesP"
    ONE_POINT_LEFT = "OnePointLeft"
    ONE_POINT_RIGHT = "OnePointRight"
    CROSS_AUGMENTED_I = "CrossAugmented_i"
    CROSS_AUGMENTED_II = "CrossAugmented_ii"
    IMPOSSIBLE_CONFIG = "ImpossibleConfig"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Placement:
    """Where a point sits on the zeros y_1 < ... < y_{n+1} of G.

    kind is ``"left"``, ``"right"``, ``"gap"`` (strictly between y_k and
    y_{k+1}) or ``"zero"`` (within 1e-10 of y_k).
    """

    kind: str
    k: int | None = None

    def __str__(self):
        return {
            "left": "LeftOfAll",
            "right": "RightOfAll",
            "gap": f"Gap({self.k})",
            "zero": f"CoincidesWithZero({self.k})",
        }[self.kind]

    @classmethod
    def parse(cls, text: str) -> Placement:
        if text == "LeftOfAll":
            return LEFT
        if text == "RightOfAll":
            return RIGHT
        name, _, rest = text.partition("(")
        kind = {"Gap": "gap", "CoincidesWithZero": "zero"}[name]
        return cls(kind, int(rest.rstrip(")")))


LEFT = Placement("left")
RIGHT = Placement("right")


def Gap(k: int) -> Placement:
    return Placement("gap", k)


def _values(zs) -> np.ndarray:
    if isinstance(zs, ZeroSet):
        return zs.array
    return np.asarray(list(zs), dtype=float)


def merge(zs, extra) -> np.ndarray:
    return np.sort(np.concatenate([_values(zs), np.asarray(extra, dtype=float)]))


def precedes(left, right, sep: float = SEPARATION) -> bool:
    """``left ≺ right``: left[0] < right[0] < left[1] < ... with gaps > ``sep``."""
    a, b = _values(left), _values(right)
    if len(a) == len(b) + 1:
        seq = np.empty(len(a) + len(b))
        seq[0::2] = a
        seq[1::2] = b
    elif len(a) == len(b):
        seq = np.empty(2 * len(a))
        seq[0::2] = a
        seq[1::2] = b
    else:
        raise ArityError(f"cannot compare zero sets of sizes {len(a)} and {len(b)}")
    return bool(np.all(np.diff(seq) > sep))


def strict_interlace(lower, upper) -> bool:
    """Each zero of ``lower`` (degree n) lies strictly between consecutive zeros of ``upper`` (n+1)."""
    lo, up = _values(lower), _values(upper)
    if len(up) != len(lo) + 1:
        raise ArityError(f"need degrees n and n+1, got {len(lo)} and {len(up)}")
    return precedes(up, lo)


def alternate(first, second) -> bool:
    """x_1 < y_1 < x_2 < ... < x_n < y_n for two degree-n zero sets."""
    x, y = _values(first), _values(second)
    if len(x) != len(y):
        raise ArityError(f"need equal degrees, got {len(x)} and {len(y)}")
    return precedes(x, y)


def place_point(e: float, grid) -> Placement:
    ys = _values(grid)
    if ys.size == 0:
        raise ValueError("cannot place a point on an empty grid")
    near = np.flatnonzero(np.abs(ys - e) <= COINCIDENCE_TOL)
    if near.size:
        return Placement("zero", int(near[0]) + 1)
    if e < ys[0]:
        return LEFT
    if e > ys[-1]:
        return RIGHT
    return Gap(bisect.bisect_left(ys.tolist(), e))


def table1_cell(e: float, yk: float, yk1: float) -> str:
    """'L', 'M' or 'R' for e relative to the pair yk < yk1."""
    if e < yk:
        return "L"
    if e > yk1:
        return "R"
    return "M"


def table1_sign(cell1: str, cell2: str) -> int:
    # H_k < 0 exactly when one point is inside (yk, yk1) and the other is not
    return -1 if (cell1 == "M") != (cell2 == "M") else 1


def hk_sign(e1: float, e2: float, yk: float, yk1: float) -> int:
    """Sign of h_k(E1) h_k(E2) with h_k(t) = (yk - t)(yk1 - t)."""
    h1 = np.sign(yk - e1) * np.sign(yk1 - e1)
    h2 = np.sign(yk - e2) * np.sign(yk1 - e2)
    return int(h1 * h2)


# chain name -> (left set, right set) builder
def _chain_sets(name, p, g, e1, e2):
    return {
        "(x-E1)(x-E2)P ≺ G": (merge(p, [e1, e2]), g),
        "G ≺ P": (g, p),
        "G ≺ (x-E2)P": (g, merge(p, [e2])),
        "(x-E1)P ≺ G": (merge(p, [e1]), g),
        "(x-E2)P ≺ G": (merge(p, [e2]), g),
        "G ≺ (x-E1)P": (g, merge(p, [e1])),
        "(x-E1)G ≺ (x-E2)P": (merge(g, [e1]), merge(p, [e2])),
        "(x-E2)G ≺ (x-E1)P": (merge(g, [e2]), merge(p, [e1])),
    }[name]


CHAINS = (
    "(x-E1)(x-E2)P ≺ G",
    "G ≺ P",
    "G ≺ (x-E2)P",
    "(x-E1)P ≺ G",
    "(x-E2)P ≺ G",
    "G ≺ (x-E1)P",
    "(x-E1)G ≺ (x-E2)P",
    "(x-E2)G ≺ (x-E1)P",
)

VERDICT_CHAIN = {
    (Variant.MINUS, Verdict.TWO_POINT_COMPLETED): "(x-E1)(x-E2)P ≺ G",
    (Variant.MINUS, Verdict.G_FULLY_INTERLACES_P): "G ≺ P",
    (Variant.MINUS, Verdict.ONE_POINT_LEFT): "G ≺ (x-E2)P",
    (Variant.MINUS, Verdict.ONE_POINT_RIGHT): "(x-E1)P ≺ G",
    (Variant.PLUS, Verdict.G_FULLY_INTERLACES_P): "G ≺ P",
    (Variant.PLUS, Verdict.ONE_POINT_LEFT): "(x-E2)P ≺ G",
    (Variant.PLUS, Verdict.ONE_POINT_RIGHT): "G ≺ (x-E1)P",
    (Variant.PLUS, Verdict.CROSS_AUGMENTED_I): "(x-E1)G ≺ (x-E2)P",
    (Variant.PLUS, Verdict.CROSS_AUGMENTED_II): "(x-E2)G ≺ (x-E1)P",
}


def chain_holds(name: str, p, g, e1: float, e2: float) -> bool:
    left, right = _chain_sets(name, p, g, e1, e2)
    try:
        return precedes(left, right)
    except ArityError:
        return False


@dataclass(frozen=True)
class InterlaceReport:
    variant: Variant
    placement_e1: Placement
    placement_e2: Placement
    verdict: Verdict
    checked: bool
    chains: dict = field(default_factory=dict)
    statements: tuple = ()
    detail: str = ""
    mismatch: bool = False

    @property
    def chain(self) -> str | None:
        return VERDICT_CHAIN.get((self.variant, self.verdict))


def verify_chain(report: InterlaceReport, p_zeros, g_zeros, e1: float, e2: float) -> bool:
    """Whether the chain named by the report's verdict holds on the given zeros."""
    name = report.chain
    if name is None:
        raise ValueError(f"verdict {report.verdict.value} does not name a chain")
    return chain_holds(name, p_zeros, g_zeros, e1, e2)


def _y(k, m):
    return f"y_{{{k},{m}}}"


def _z(k, m):
    return f"z_{{{k},{m}}}"


def _statement(label, pl, n):
    """Positional statement for one extra point, e.g. ``E_1<y_{1,7}``."""
    m = n + 1
    if pl.kind == "left":
        return f"{label}<{_y(1, m)}"
    if pl.kind == "right":
        return f"{label}>{_y(m, m)}"
    return f"{_y(pl.k, m)}<{label}<{_y(pl.k + 1, m)}"


def _surrounding_pair(p, g, k, e):
    """Index l with y_k < z_l < e < z_{l+1} < y_{k+1}, or None."""
    z = np.asarray(p)
    for l in range(1, len(z)):
        if g[k - 1] < z[l - 1] < e < z[l] < g[k]:
            return l
    return None


def _crossed_statement(label, k, l, n):
    m = n + 1
    return f"{_y(k, m)}<{_z(l, n)}<{label}<{_z(l + 1, n)}<{_y(k + 1, m)}"


def classify(variant, p_zeros, g_zeros, e1: float, e2: float) -> InterlaceReport:
    """Place E1, E2 on the zeros of G, predict the completed chain, and confirm it."""
    variant = Variant(variant)
    p, g = _values(p_zeros), _values(g_zeros)
    n = len(p)
    if len(g) != n + 1:
        raise ArityError(f"need deg G = deg P + 1, got {len(g)} and {n}")
    if e1 > e2:
        raise OrderingError(f"extra points out of order: {e1!r} > {e2!r}")
    pl1, pl2 = place_point(e1, g), place_point(e2, g)
    if "zero" in (pl1.kind, pl2.kind):
        raise DegenerateConfigurationError(
            f"an extra point coincides with a zero of G ({pl1}, {pl2})"
        )
    if n and float(np.min(np.abs(p[:, None] - g[None, :]))) <= SEPARATION:
        raise DegenerateConfigurationError("P and G share a zero")

    chains = {}

    def test(name):
        chains[name] = chain_holds(name, p, g, e1, e2)
        return chains[name]

    statements = [_statement("E_1", pl1, n), _statement("E_2", pl2, n)]
    same = pl1 == pl2
    outer = pl1.kind == "left" and pl2.kind == "right"

    def report(verdict, checked, detail="", mismatch=False):
        return InterlaceReport(
            variant, pl1, pl2, verdict, checked, chains, tuple(statements), detail, mismatch
        )

    if variant is Variant.MINUS:
        if same:
            return report(
                Verdict.IMPOSSIBLE_CONFIG,
                False,
                "both extra points in one interval; excluded under the minus relation",
            )
        two_point = test("(x-E1)(x-E2)P ≺ G")
        if outer:
            full = test("G ≺ P")
            if full and two_point:
                return report(Verdict.G_FULLY_INTERLACES_P, True)
            return report(
                Verdict.INCONCLUSIVE,
                False,
                "theorem-mismatch: predicted G ≺ P and the two-point chain",
                mismatch=True,
            )
        if pl1.kind == "left" and pl2.kind == "gap":
            test("G ≺ (x-E2)P")
        if pl1.kind == "gap" and pl2.kind == "right":
            test("(x-E1)P ≺ G")
        if two_point:
            return report(Verdict.TWO_POINT_COMPLETED, True)
        return report(
            Verdict.INCONCLUSIVE,
            False,
            "theorem-mismatch: predicted (x-E1)(x-E2)P ≺ G",
            mismatch=True,
        )

    # plus relation
    if outer:
        return report(
            Verdict.IMPOSSIBLE_CONFIG,
            False,
            "E1 left of all and E2 right of all zeros of G is excluded under the plus relation",
        )
    if same:
        predicted = Verdict.G_FULLY_INTERLACES_P
    elif pl1.kind == "left":
        predicted = Verdict.ONE_POINT_LEFT
    elif pl2.kind == "right":
        predicted = Verdict.ONE_POINT_RIGHT
    else:
        k1, k2 = pl1.k, pl2.k
        ok_i = test("(x-E1)G ≺ (x-E2)P")
        ok_ii = test("(x-E2)G ≺ (x-E1)P")
        l1 = _surrounding_pair(p, g, k1, e1)
        l2 = _surrounding_pair(p, g, k2, e2)
        if l1 is not None:
            statements[0] = _crossed_statement("E_1", k1, l1, n)
            if ok_i:
                return report(Verdict.CROSS_AUGMENTED_I, True)
            return report(
                Verdict.INCONCLUSIVE,
                False,
                "theorem-mismatch: positional condition (i) holds but its chain fails",
                mismatch=True,
            )
        if l2 is not None:
            statements[1] = _crossed_statement("E_2", k2, l2, n)
            if ok_ii:
                return report(Verdict.CROSS_AUGMENTED_II, True)
            return report(
                Verdict.INCONCLUSIVE,
                False,
                "theorem-mismatch: positional condition (ii) holds but its chain fails",
                mismatch=True,
            )
        return report(
            Verdict.INCONCLUSIVE,
            False,
            f"neither positional condition holds (chain i: {ok_i}, chain ii: {ok_ii})",
        )
    name = VERDICT_CHAIN[(variant, predicted)]
    if test(name):
        return report(predicted, True)
    return report(
        Verdict.INCONCLUSIVE, False, f"theorem-mismatch: predicted {name}", mismatch=True
    )
