"""Published reference values for the five zero tables (T2 to T6).

Each block lists the family parameters as printed, the printed extra points,
the printed zeros z (degree n) and y (degree n+1), the expected verdict, and
the positional statements from the table notes. Angles are kept as exact
fractions of pi.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .families import FamilySpec, Jacobi, MeixnerPollaczek, PseudoJacobi


@dataclass(frozen=True)
class TableBlock:
    family: FamilySpec
    n: int
    params: dict  # as printed, for reports
    e: tuple
    z: tuple
    y: tuple
    verdict: str
    statements: tuple


def _mp(n, lam, frac, **kw):
    return TableBlock(
        MeixnerPollaczek(lam, float(frac) * math.pi),
        n,
        {"lambda": lam, "phi": f"{frac}pi"},
        **kw,
    )


TABLES: dict[str, tuple[TableBlock, ...]] = {
    "T2": (
        TableBlock(
            Jacobi(6.0, 5.0), 6, {"alpha": 6, "beta": 5},
            e=(-0.84431, 0.86505),
            z=(-0.72289, -0.475502, -0.197106, 0.0958548, 0.384919, 0.653855),
            y=(-0.737759, -0.527401, -0.293041, -0.0438553, 0.208718, 0.453234, 0.680845),
            verdict="GFullyInterlacesP",
            statements=("E_1<y_{1,7}", "E_2>y_{7,7}"),
        ),
        TableBlock(
            Jacobi(5.0, 4.0), 7, {"alpha": 5, "beta": 4},
            e=(-0.820009, 0.843713),
            z=(-0.795866, -0.582221, -0.329391, -0.0532968, 0.227774, 0.495343, 0.733311),
            y=(-0.798587, -0.614213, -0.400458, -0.166445, 0.0766257, 0.316978, 0.543279,
               0.746523),
            verdict="GFullyInterlacesP",
            statements=("E_1<y_{1,8}", "E_2>y_{8,8}"),
        ),
    ),
    "T3": (
        _mp(
            6, 0.12, Fraction(7, 9),
            e=(-0.019388, 8.36166),
            z=(-0.495851, 0.0628661, 0.995837, 2.81056, 5.56002, 9.80094),
            y=(-0.94902, 0.28911, 1.6211, 3.48124, 6.0181, 9.4672, 14.4424),
            verdict="CrossAugmented_i",
            statements=("y_{1,7}<z_{1,6}<E_1<z_{2,6}<y_{2,7}", "y_{5,7}<E_2<y_{6,7}"),
        ),
        _mp(
            7, 2.0, Fraction(1, 4),
            e=(-7.4641, -0.535898),
            z=(-14.3009, -9.62676, -6.32237, -3.81923, -1.88168, -0.317583, 1.26853),
            y=(-18.3133, -13.1392, -9.37474, -6.41755, -4.0225, -2.03526, -0.281821, 1.5844),
            verdict="CrossAugmented_ii",
            statements=("y_{3,8}<E_1<y_{4,8}", "y_{6,8}<z_{5,7}<E_2<z_{6,7}<y_{7,8}"),
        ),
    ),
    "T4": (
        _mp(
            8, 1.5, Fraction(4, 5),
            e=(-0.298549, 12.686),
            z=(-0.952961, 0.439051, 1.91719, 3.85165, 6.37288, 9.62921, 13.8994, 19.8989),
            y=(-1.10319, 0.623579, 2.34762, 4.38971, 6.88542, 9.9474, 13.736, 18.5489,
               25.1429),
            verdict="CrossAugmented_i",
            statements=("y_{1,9}<z_{1,8}<E_1<z_{2,8}<y_{2,9}", "y_{6,9}<E_2<y_{7,9}"),
        ),
        _mp(
            9, 6.0, Fraction(1, 5),
            e=(-13.062, -0.701821),
            z=(-33.3638, -25.8717, -20.2451, -15.6627, -11.7964, -8.46192, -5.52321,
               -2.83297, -0.116578),
            y=(-38.5756, -30.6562, -24.6537, -19.7182, -15.5127, -11.8529, -8.61351,
               -5.68527, -2.9326, -0.0832518),
            verdict="CrossAugmented_ii",
            statements=("y_{5,10}<E_1<y_{6,10}", "y_{9,10}<z_{8,9}<E_2<z_{9,9}<y_{10,10}"),
        ),
    ),
    "T5": (
        TableBlock(
            PseudoJacobi(-9.60, 2.81), 6, {"a": -9.60, "b": 2.81},
            e=(-0.103838, 4.84379),
            z=(-0.415663, -0.000398727, 0.356554, 0.767051, 1.37113, 2.6032),
            y=(-0.442364, 0.00700039, 0.389392, 0.836066, 1.50827, 2.85726, 7.15039),
            verdict="CrossAugmented_i",
            statements=("y_{1,7}<z_{1,6}<E_1<z_{2,6}<y_{2,7}", "y_{6,7}<E_2<y_{7,7}"),
        ),
        TableBlock(
            PseudoJacobi(-12.83, -5.85), 7, {"a": -12.83, "b": -5.85},
            e=(-2.44111, -0.087948),
            z=(-2.89991, -1.76843, -1.16387, -0.757969, -0.440675, -0.154304, 0.159308),
            y=(-5.15497, -2.84266, -1.80435, -1.19766, -0.780726, -0.453039, -0.156763,
               0.169808),
            verdict="CrossAugmented_ii",
            statements=("y_{2,8}<E_1<y_{3,8}", "y_{7,8}<z_{6,7}<E_2<z_{7,7}<y_{8,8}"),
        ),
    ),
    "T6": (
        TableBlock(
            PseudoJacobi(-9.60, -2.70), 6, {"a": -9.60, "b": -2.70},
            e=(-4.62523, 0.0593014),
            z=(-2.54341, -1.33862, -0.744617, -0.338219, 0.0180625, 0.436834),
            y=(-6.92597, -2.7751, -1.46463, -0.807117, -0.366362, 0.0150958, 0.469881),
            verdict="CrossAugmented_ii",
            statements=("y_{1,7}<E_1<y_{2,7}", "y_{6,7}<z_{5,6}<E_2<z_{6,6}<y_{7,7}"),
        ),
        TableBlock(
            PseudoJacobi(-9.23, -0.22), 7, {"a": -9.23, "b": -0.22},
            e=(-5.17479, -1.06178),
            z=(-1.91636, -0.922535, -0.4255, -0.0580861, 0.297398, 0.746242, 1.57386),
            y=(-8.2896, -1.99692, -0.911932, -0.381732, 0.0146716, 0.420477, 1.00162, 2.44817),
            verdict="CrossAugmented_ii",
            statements=("y_{1,8}<E_1<y_{2,8}", "y_{2,8}<z_{1,7}<E_2<z_{2,7}<y_{3,8}"),
        ),
    ),
}

# Comparison tolerance per table: ("abs", 1e-4) or ("rel", 0.01).
TOLERANCES = {
    "T2": ("abs", 1e-4),
    "T3": ("abs", 1e-4),
    "T4": ("abs", 1e-4),
    "T5": ("rel", 1e-2),
    "T6": ("rel", 1e-2),
}
