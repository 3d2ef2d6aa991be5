"""Polynomial and point data for the two surfaces and the plane maps.

Every formula is kept as a string and parsed on first use; the family formulas
are checked end to end by the matroid comparison in the test suite, so a
transcription error cannot go unnoticed.
"""

from __future__ import annotations

from functools import lru_cache

from .mpoly import parse

Y = ("y1", "y2", "y3", "y4")
X = ("x1", "x2", "x3")
Z = ("z1", "z2", "z3")

# ---------------------------------------------------------------------------
# seven lines

QUARTIC_7 = (
    "y1^2*y2^2 + y1^2*y2*y3 - y1*y2^2*y3 - y1*y2*y3^2 - y1^2*y2*y4 - y1*y2^2*y4"
    " + y1*y2*y3*y4 - y2*y3^2*y4 + y1*y2*y4^2 + y3^2*y4^2"
)

SINGULAR_POINTS_7 = [
    (0, 0, 0, 1),
    (1, 0, 0, 1),
    (0, 0, 1, 0),
    (1, 0, 1, 0),
    (0, 1, 0, 0),
    (0, 1, 0, 1),
    (1, -1, 1, 0),
    (1, 0, 0, 0),
]

FRAME_7 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 1, 1)]

_P57 = "-x1*x2^2 - x1*x2*x3 + x1*x2 - x2*x3 + x3"
_D7 = "x2^2 + x2*x3 - x2 - x3"

C0_7 = [
    ("1", "0", "0"),
    ("0", "1", "0"),
    ("0", "0", "1"),
    ("-1", "1", "1"),
    (_P57, "x1*x2 + x1*x3 - x1", "x2 - 1"),
    (_P57, "x1*x2 + x1*x3 - x1 + x2^2 + x2*x3 - 2*x2 - x3 + 1", _D7),
    ("-x1*x2^2 - x1*x2*x3 + x1*x2 + x3^2", "x1*x2 + x1*x3 - x1 - x2*x3 - x3^2 + x3", _D7),
]

C1_7 = [
    (
        "-x1*x2^2 - x1*x2*x3 + x1*x2 + x3^2",
        "x1*x2^2 + 2*x1*x2*x3 - x1*x2 + x1*x3^2 - x1*x3 - x2^2*x3 - 2*x2*x3^2 + x2*x3 - x3^3 + x3^2",
        _D7,
    ),
    ("-x1*x2 - x1*x3 + x1", "x1*x2 + x1*x3 - x1", "x2 - 1"),
    ("-x2", "1", "0"),
    (
        "-x1*x2^3 - 2*x1*x2^2*x3 + x1*x2^2 - x1*x2*x3^2 + x1*x2*x3 - x2^2*x3 - x2*x3^2 + x2*x3 + x3^2",
        "x1*x2 + x1*x3 - x1 + x2^2 + x2*x3 - 2*x2 - x3 + 1",
        _D7,
    ),
    (_P57, "0", _D7),
    ("-x2^2 - x2*x3 + x2 + x3", "x1*x2 + x1*x3 - x1 - x2*x3 - x3^2 + x3", _D7),
    ("0", "1", "1"),
]

# the twelve lines of the complement, each as two linear forms
EXCLUDED_LINES_7 = {
    "L1": ("y2", "y3"),
    "L2": ("y1", "y3"),
    "L3": ("y2", "y4"),
    "L4": ("y1 - y3", "y4"),
    "L5": ("y1", "y4"),
    "L6": ("y2 - y4", "y3"),
    "L7": ("y1 - y3 - y4", "y2 + y3"),
    "L8": ("y1 - y3", "y2 + y3"),
    "L9": ("y2 + y3", "y4"),
    "L10": ("y1 - y4", "y3"),
    "L11": ("y1 - y3", "y2 - y4"),
    "L12": ("y1", "y2 - y4"),
}
EXCLUDED_CONIC_7 = ("y1*y3 - y3^2 - y1*y4", "y2 + y3 - y4")
EXCLUDED_GENUS_ONE_SAMPLE_7 = (
    "y1^2 - 2*y1*y3 + y3^2 - y1*y4",
    "y2^2 + y2*y3 + y1*y4 - y3*y4 - y4^2",
)
GENUS_ONE_J_INVARIANT = "-15625/28"  # recorded only

SIGMA1_7 = (
    "y1*y2^2*y3 + y1*y2*y3^2 - y2^2*y3^2 - y2*y3^3 - y1*y2*y3*y4 - y2^2*y3*y4 + y2*y3*y4^2 + y3^2*y4^2",
    "y1*y2^3 + y1*y2^2*y3 + y2^2*y3^2 + y2*y3^3 - 2*y1*y2^2*y4 - y1*y2*y3*y4 - 2*y2*y3^2*y4"
    " - y3^3*y4 + y1*y2*y4^2 + y3^2*y4^2",
    "y1*y2^2*y3 + y1*y2*y3^2 - y2^2*y3^2 - y2*y3^3 - y1*y2*y3*y4 + y2*y3^2*y4",
    "y2^3*y3 + 2*y2^2*y3^2 + y2*y3^3 - 2*y2^2*y3*y4 - 3*y2*y3^2*y4 - y3^3*y4 + y2*y3*y4^2 + y3^2*y4^2",
)
SIGMA2_7 = (
    "-y2^2*y3 - y2*y3^2 + y2*y3*y4",
    "-y1*y2*y3 + y2*y3^2 + y2*y3*y4 - y3*y4^2",
    "y1*y2^2 + y1*y2*y3 - y2^2*y3 - y2*y3^2 - y1*y2*y4 + y2*y3*y4",
    "y2*y3*y4 - y3*y4^2",
)

SIGMA1_PERM = "(1,7,4,3,6,5,2)(8,14,11,10,13,12,9)"
SIGMA2_PERM = "(1,3,5,6,7,2)(8,10,12,13,14,9)"
SIGMA0_PERM = "(1,2,4)(3,6,7)(8,9,11)(10,13,14)"

ORBIT_POINT_7 = ("-6", "-25/8", "5", "1")
# quartic minimal polynomials, leading coefficient first
PERIOD_TWO_MINPOLY_7 = (1, -1, 3, -1, 1)  # points (r^2+1 : r^2-r+2 : r : 1)
FIXED_POINT_MINPOLY_7 = (1, 1, 1)  # points (w+1 : -w : w : 1)

# ---------------------------------------------------------------------------
# plane map under the double cover (coordinates z_i = y_{i+1})

QUINTIC = (
    "z1^3*z2^2 + 2*z1^2*z2^3 + z1*z2^4 + 2*z1^3*z2*z3 + 4*z1^2*z2^2*z3 + 2*z1*z2^3*z3 + z1^3*z3^2"
    " - 4*z1^2*z2*z3^2 - 9*z1*z2^2*z3^2 - 4*z2^3*z3^2 - 2*z1^2*z3^3 + 2*z1*z2*z3^3 + 4*z2^2*z3^3 + z1*z3^4"
)
Q2 = (
    "-z1^5*z2 - 3*z1^4*z2^2 - 3*z1^3*z2^3 - z1^2*z2^4 + z1^4*z2*z3 + 2*z1^3*z2^2*z3 + z1^2*z2^3*z3"
    " + z1^3*z2*z3^2 + 2*z1^2*z2^2*z3^2 + z1*z2^3*z3^2 - z1^2*z2*z3^3 + z2^3*z3^3 - z2^2*z3^4"
)
Q3 = (
    "2*z1^4*z2*z3 + 4*z1^3*z2^2*z3 + 2*z1^2*z2^3*z3 + z1^4*z3^2 - 4*z1^3*z2*z3^2 - 8*z1^2*z2^2*z3^2"
    " - 3*z1*z2^3*z3^2 - 2*z1^3*z3^3 + 2*z1^2*z2*z3^3 + 4*z1*z2^2*z3^3 + z2^3*z3^3 + z1^2*z3^4"
)
R4 = "z1^4 + 2*z1^3*z2 + z1^2*z2^2 - z1^2*z3^2 - z1*z2*z3^2 - z2*z3^3"
R7 = (
    "z1^6*z2 + 4*z1^5*z2^2 + 6*z1^4*z2^3 + 4*z1^3*z2^4 + z1^2*z2^5 + z1^6*z3 - 7*z1^4*z2^2*z3"
    " - 11*z1^3*z2^3*z3 - 6*z1^2*z2^4*z3 - z1*z2^5*z3 - z1^5*z3^2 + 3*z1^3*z2^2*z3^2"
    " + 2*z1^2*z2^3*z3^2 + 3*z1^2*z2^2*z3^3 + 5*z1*z2^3*z3^3 + 2*z2^4*z3^3 - 2*z1*z2^2*z3^4"
    " - 2*z2^3*z3^4 - z1*z2*z3^5"
)
R_SCALAR = "1/8"

INDETERMINACY_RATIONAL_7 = {
    "q1": (0, 0, 1),
    "q2": (1, 0, 1),
    "q3": (0, 1, 0),
    "q4": (-1, 1, 0),
    "q5": (1, 0, 0),
}
Q0_POINT = (0, 1, 1)
# q_r = (-r^2 + 2r : r : 1) for the three roots of this cubic
INDETERMINACY_CUBIC_7 = (1, -4, 3, 1)

# ---------------------------------------------------------------------------
# eight lines

QUARTIC_8 = (
    "y1*y2^2*y3 - y1^2*y2*y4 + y1*y2^2*y4 + y1^2*y3*y4 - 2*y1*y2*y3*y4 - y1*y3^2*y4"
    " + y1*y3*y4^2 - y2*y3*y4^2 + y3^2*y4^2"
)

SINGULAR_POINTS_8 = [
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (1, 1, 1, 1),
    (1, 0, 1, 0),
]

FRAME_8 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]

C0_8 = [
    ("1", "0", "0"),
    ("0", "1", "0"),
    ("0", "0", "1"),
    ("1", "1", "1"),
    ("x1 - x2", "x1^2 - x1*x2 - x1*x3 + x1 - x2 + x3", "x1 - x2*x3 - x2 + x3"),
    (
        "x1*x2 - x1*x3 - x2 + x3",
        "x1*x2^2 - x1*x2 - x1*x3 + x1 - x2 + x3",
        "x1*x2*x3 - 2*x1*x3 + x1 - x2 + x3",
    ),
    ("x1 - 1", "x1*x2 - x2", "x1 - x2"),
    ("1", "x1", "x3"),
]

C1_8 = [
    (
        "x1*x2 - x1*x3 - x2 + x3",
        "x1*x2^2 - x1*x2 - x1*x3 + x1 - x2 + x3",
        "x1*x2 - x1*x3 - x2^2 + x2*x3",
    ),
    (
        "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x2*x3 - x1*x2 + x1*x3 + x2^2 - x2*x3",
        "x1^3*x2 - x1^3*x3 - x1^2*x2^2 + x1^2*x3^2 + 2*x1*x2*x3 - x1*x2 - 2*x1*x3^2 + x1*x3"
        " + x2^2 - 2*x2*x3 + x3^2",
        "x1^2*x2*x3 - x1^2*x2 - x1^2*x3 + x1^2 + x1*x2^2 - 2*x1*x2 - x1*x3^2 + 2*x1*x3"
        " + x2^2 - 2*x2*x3 + x3^2",
    ),
    ("x1 - x2", "x1 - x2", "x1 - x2*x3 - x2 + x3"),
    ("x3", "x1*x2", "x3"),
    ("0", "1", "1"),
    ("x1 - 1", "0", "x1 - x3"),
    ("1", "x1", "0"),
    ("1", "x2", "x3"),
]

# partition of the 28 double points of eight lines into the eight S_k
OCTAGON_SETS = [
    [(1, 8), (2, 7), (3, 6), (4, 5)],
    [(1, 7), (2, 6), (3, 5)],
    [(1, 6), (2, 5), (3, 4), (7, 8)],
    [(1, 5), (2, 4), (6, 8)],
    [(1, 4), (2, 3), (5, 8), (6, 7)],
    [(1, 3), (4, 8), (5, 7)],
    [(1, 2), (3, 8), (4, 7), (5, 6)],
    [(2, 8), (3, 7), (4, 6)],
]

# base points of the n=8 map; "s" stands for the adjoined root (of u^2 - 2 or u^2 + 1)
BASE_POINTS_8 = [
    ("sqrt2", ("-s - 1", "s + 2", "2*s + 3", "1")),
    ("sqrt2", ("s - 1", "-s + 2", "-2*s + 3", "1")),
    ("i", ("s", "0", "1", "1")),
    ("i", ("-s", "0", "1", "1")),
    (None, ("1", "1", "0", "1")),
    (None, ("0", "1", "1", "0")),
    (None, ("0", "1", "0", "1")),
]

LINES_ON_Z8 = [
    ("y1", "y3"),
    ("y1", "y4"),
    ("y2", "y3"),
    ("y2", "y4"),
    ("y3", "y4"),
    ("y1 - y4", "y2 - y4"),
    ("y1 - y3", "y2 - y4"),
    ("y2 - y4", "y3 - y4"),
]

BRANCH_CONIC_8 = "z1^2 - z2*z3"
BRANCH_QUARTIC_8 = (
    "z1^2*z2^2 + 2*z1^2*z2*z3 - 4*z1*z2^2*z3 - z2^3*z3 + z1^2*z3^2 - 4*z1*z2*z3^2 + 6*z2^2*z3^2 - z2*z3^3"
)

MU_INDETERMINACY_8 = [
    (None, ("1", "0", "0")),
    (None, ("0", "1", "0")),
    (None, ("0", "0", "1")),
    (None, ("1", "1", "1")),
    (None, ("1", "0", "1")),
    (None, ("1", "1", "0")),
    (None, ("0", "1", "1")),
    ("sqrt2", ("-s + 2", "-2*s + 3", "1")),
    ("sqrt2", ("s + 2", "2*s + 3", "1")),
]

SMALL_GENERATORS_8 = [
    "(2,4)(3,7)(6,8)(9,11)(10,14)(13,15)",
    "(2,6)(4,8)(9,13)(11,15)",
    "(1,2)(3,8)(4,7)(5,6)(9,13)(10,12)(14,16)",
]
COMMUTING_INVOLUTION_8 = "(1,5)(2,6)(3,7)(4,8)"

PERIODIC_PRIME_8 = 1013
PERIODIC_POINT_8 = (794, 582, 116, 1)

# cubic model of the fibration from the line y2 - y4 = y3 - y4 = 0
CUBIC_MODEL_8 = "(t-1)*X^2 - t^2*X*Y^2 + X*Y + (t-1)^2*X + (t-1)*Y"

# ---------------------------------------------------------------------------
# Weierstrass data, as (numerator, denominator) coefficient lists lowest degree first

# a2 = (t^4-2t^3+3t^2+6t+1)/(t+1)^2, a4 = 8t^3(t^2-t-1)/(t+1)^3, a6 = 16t^6/(t+1)^4
WEIERSTRASS_7 = {
    "a2": ("t^4 - 2*t^3 + 3*t^2 + 6*t + 1", "(t + 1)^2"),
    "a4": ("8*t^3*(t^2 - t - 1)", "(t + 1)^3"),
    "a6": ("16*t^6", "(t + 1)^4"),
}
TORSION_POINT_7 = ("0", "4*t^3", "(t + 1)^2")  # projective (x : y : z)
BAD_CUBIC_7 = "t^3 - 5*t^2 - 8*t - 1"

WEIERSTRASS_8 = {
    "a2": ("4*t^4 - 8*t^3 + 4*t^2 + 1", "t^4"),
    "a4": ("8*(t - 1)^2", "t^6"),
    "a6": ("16*(t - 1)^4", "t^8"),
}
BAD_QUADRATIC_8 = "t^2 - t - 1/4"


@lru_cache(maxsize=None)
def poly(text, names):
    """Parse and cache one of the formulas above."""
    return parse(text, names)
