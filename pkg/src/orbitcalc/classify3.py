"""Closed 3-manifolds with a circle action that has fixed points.

Such a manifold is determined by its Seifert orbit data
``{b; (eps, g, h_bar, t), (a1, b1), ..., (an, bn)}``: the orbit surface has
genus ``g`` (orientable when ``eps`` is ``o``), ``h_bar`` boundary circles of
fixed points, ``t`` boundary circles of special exceptional orbits with
isotropy Z2, and ``n`` exceptional orbits with Seifert pairs ``(ai, bi)``.
When ``h_bar > 0`` the manifold is a connected sum of copies of S2xS1,
S2~xS1, RP2xS1 and lens spaces.

>>> str(raymond_classify(SeifertOrbitData(0, "o", 0, 1, 0, [(2, 1), (2, 1)])))
'RP3 # RP3'

The second half of the module is a catalog of the orbit-space structures
of fixed-point homogeneous actions of SO(3) and the circle on
nonnegatively curved 3-manifolds, keyed by the shape of the set ``C`` at
maximal distance from the fixed points and the isotropy along it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import FixedPointFree, InvariantRange, NoSuchCase, UnsupportedConfiguration
from .manifolds import Alternatives, ManifoldExpr, ManifoldFamily, Summand
from .orbit_data import SeifertInvariant

__all__ = [
    "SeifertOrbitData",
    "raymond_classify",
    "raymond_notes",
    "OrbitCase",
    "theoremA_lookup",
    "THEOREM_A_TABLE",
    "TWISTED_CASE_NOTE",
]

MAX_SUMMANDS = 100_000

TWISTED_CASE_NOTE = (
    "non-orientable orbit surface without Z2 boundary circles: one twisted S2~xS1 summand "
    "and g+h_bar-2 untwisted S2xS1 summands (count chosen to agree with the (n,1,1,0) "
    "Moebius-band example)"
)


@dataclass(frozen=True)
class SeifertOrbitData:
    b: int
    epsilon: str
    g: int
    h_bar: int
    t: int
    exceptional: tuple[SeifertInvariant, ...] = field(default=())

    def __post_init__(self):
        exc = tuple(e if isinstance(e, SeifertInvariant) else SeifertInvariant(*e)
                    for e in self.exceptional)
        object.__setattr__(self, "exceptional", exc)
        if self.epsilon not in ("o", "n"):
            raise InvariantRange(f"epsilon must be 'o' or 'n', got {self.epsilon!r}")
        for name in ("g", "h_bar", "t"):
            if getattr(self, name) < 0:
                raise InvariantRange(f"{name} must be nonnegative")
        if self.epsilon == "n":
            if self.g < 1:
                raise InvariantRange("a non-orientable orbit surface has genus g >= 1")
            for e in exc:
                if 2 * e.beta > e.alpha:
                    raise InvariantRange(
                        f"non-orientable orbit surface needs 0 < beta <= alpha/2, got ({e.alpha}, {e.beta})")
        if self.h_bar + self.t and self.b != 0:
            raise InvariantRange("b is normalised to 0 when h_bar + t > 0")

    def __str__(self):
        head = f"{{{self.b};({self.epsilon},{self.g},{self.h_bar},{self.t})"
        return head + "".join(f",({e.alpha},{e.beta})" for e in self.exceptional) + "}"


def raymond_classify(data: SeifertOrbitData) -> ManifoldExpr:
    if data.h_bar == 0:
        raise FixedPointFree("the action has no fixed points (h_bar = 0)")
    g, h, t = data.g, data.h_bar, data.t
    if 2 * g + h + t + len(data.exceptional) > MAX_SUMMANDS:
        raise UnsupportedConfiguration(f"more than {MAX_SUMMANDS} connected summands")
    lens = [Summand("L", params=(e.alpha, e.beta)) for e in data.exceptional]
    rp = [Summand("RP2xS1")] * t
    if data.epsilon == "o":
        handles = [Summand("S2xS1")] * (2 * g + h - 1)
    elif t > 0:
        handles = [Summand("S2xS1")] * (g + h - 1)
    else:
        handles = [Summand("S2~xS1")] + [Summand("S2xS1")] * (g + h - 2)
    return ManifoldExpr(handles + rp + lens, dim=3)


def raymond_notes(data: SeifertOrbitData) -> list[str]:
    if data.epsilon == "n" and data.t == 0 and data.h_bar > 0:
        return [TWISTED_CASE_NOTE]
    return []


def _norm_isotropy(labels) -> tuple[str, ...]:
    labels = tuple(str(x).replace(" ", "") for x in labels)
    if len(labels) == 3:
        # an interval read backwards has the same orbit structure
        return min(labels, labels[::-1])
    return labels


@dataclass(frozen=True)
class OrbitCase:
    """Structural description of a fixed-point homogeneous orbit space.

    ``shape`` is the shape of the set at maximal distance from the fixed
    points (``cohomogeneity-one``, ``point``, ``interval``, ``circle``,
    ``surface-in-boundary``, ``closed-surface``, ``disk``, ``cylinder`` or
    ``moebius``); ``isotropy`` lists its isotropy labels (a triple
    ``K-, K0, K+`` for an interval); ``qualifier`` disambiguates the few rows
    that need more, such as the fixed surface or the orbit-space shape.
    """

    group: str
    shape: str
    isotropy: tuple[str, ...] = ()
    qualifier: str = ""

    def key(self):
        return (self.group, self.shape, _norm_isotropy(self.isotropy), self.qualifier)


def _m(text):
    return ManifoldExpr.parse(text)


THEOREM_A_TABLE = {
    ("SO3", "cohomogeneity-one", (), ""): Alternatives((_m("S3"), _m("RP3"))),
    ("SO3", "point", ("SO(2)",), ""): _m("S3"),
    ("SO3", "point", ("O(2)",), ""): _m("RP3"),
    ("S1", "point", ("1",), ""): _m("S3"),
    ("S1", "interval", ("1", "1", "1"), ""): _m("S3"),
    ("S1", "interval", ("1", "1", "Z2"), ""): _m("RP3"),
    ("S1", "interval", ("Z2", "1", "Z2"), ""): _m("RP3 # RP3"),
    ("S1", "circle", ("1",), ""): _m("S2~xS1"),
    ("S1", "circle", ("Z2",), ""): _m("RP2xS1"),
    ("S1", "circle", ("S1",), ""): _m("S2xS1"),
}

# Seifert orbit data realising the circle rows, used as a cross-check
THEOREM_A_SEIFERT = {
    ("S1", "point", ("1",), ""): SeifertOrbitData(0, "o", 0, 1, 0),
    ("S1", "interval", ("1", "1", "1"), ""): SeifertOrbitData(0, "o", 0, 1, 0),
    ("S1", "interval", ("1", "1", "Z2"), ""): SeifertOrbitData(0, "o", 0, 1, 0, ((2, 1),)),
    ("S1", "interval", ("Z2", "1", "Z2"), ""): SeifertOrbitData(0, "o", 0, 1, 0, ((2, 1), (2, 1))),
    ("S1", "circle", ("1",), ""): SeifertOrbitData(0, "n", 1, 1, 0),
    ("S1", "circle", ("Z2",), ""): SeifertOrbitData(0, "o", 0, 1, 1),
    ("S1", "circle", ("S1",), ""): SeifertOrbitData(0, "o", 0, 2, 0),
}


def _cyclic_order(label: str) -> int | None:
    m = re.fullmatch(r"Z_?(\d+)", label)
    return int(m[1]) if m else None


def theoremA_lookup(case: OrbitCase):
    key = case.key()
    if key in THEOREM_A_TABLE:
        return THEOREM_A_TABLE[key]
    if case.group == "S1" and case.shape == "point" and len(key[2]) == 1:
        q = _cyclic_order(key[2][0])
        if q == 2:
            return _m("RP3")
        if q and q > 2:
            return ManifoldFamily(f"lens space L({q},b) with b prime to {q}", dim=3)
    raise NoSuchCase(f"no 3-dimensional case for {case}")
