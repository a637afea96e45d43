"""Fixed-point homogeneous circle actions on simply connected 4-manifolds.

When the fixed-point set contains a 2-sphere ``F`` at the boundary of the
orbit space, the remaining fixed data is one of: nothing, an isolated
point, a second sphere, or two isolated points (possibly joined by an arc of
exceptional orbits).  Each configuration forces a weighted orbit space; the
plumbing of its chain of disk bundles has an intersection form which
determines the 4-manifold.

>>> str(classify_config(SpherePlusTwoPoints(arc=WeightedArc(0, [(2, 1)], -1))).manifold)
'CP2 # CP2'
>>> str(classify_config(TwoSpheres(4)).manifold)
'S2xS2'

The module also holds the catalog of orbit-space structures for
nonnegatively curved 4-manifolds and the list of groups acting
transitively on spheres.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .classify3 import OrbitCase, _cyclic_order
from .errors import IllegalWeights, NoSuchCase
from .intforms import IntSymMatrix, classify, invariants, reduce_trace
from .manifolds import Alternatives, ManifoldExpr, ManifoldFamily
from .orbit_data import (
    SeifertInvariant,
    WeightedArc,
    WeightedOrbitSpace,
    canonical_arc,
    reverse_arc,
    validate_legality,
)
from .plumbing import (
    PlumbingChain,
    assemble_chain,
    intersection_form,
    intersection_matrix,
    make_block_c,
    make_block_g,
)

__all__ = [
    "SphereOnly",
    "SpherePlusPoint",
    "TwoSpheres",
    "SpherePlusTwoPoints",
    "FixedPointConfig",
    "build_orbit_space",
    "classify_config",
    "classify_space",
    "PipelineTrace",
    "ConfigResult",
    "ArcCase",
    "enumerate_arc_cases",
    "euler_check",
    "fixed_point_euler",
    "TheoremBCase",
    "theoremB_lookup",
    "THEOREM_B_TABLE",
    "admissible_groups",
]


@dataclass(frozen=True)
class SphereOnly:
    pass


@dataclass(frozen=True)
class SpherePlusPoint:
    """Fixed set S2 plus one isolated point of weight ``sign``."""

    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise IllegalWeights("point weight must be +1 or -1")


@dataclass(frozen=True)
class TwoSpheres:
    omega1: int


@dataclass(frozen=True)
class SpherePlusTwoPoints:
    """Fixed set S2 plus two isolated points, either joined by an arc of
    exceptional orbits or carrying weights ``point_signs``."""

    arc: WeightedArc | None = None
    point_signs: tuple[int, int] | None = None

    def __post_init__(self):
        if (self.arc is None) == (self.point_signs is None):
            raise IllegalWeights("give exactly one of arc and point_signs")
        if self.point_signs is not None:
            signs = tuple(self.point_signs)
            if len(signs) != 2 or any(s not in (1, -1) for s in signs):
                raise IllegalWeights("point_signs must be two values in {+1, -1}")
            object.__setattr__(self, "point_signs", signs)


FixedPointConfig = Union[SphereOnly, SpherePlusPoint, TwoSpheres, SpherePlusTwoPoints]


def build_orbit_space(config: FixedPointConfig) -> WeightedOrbitSpace:
    """Orbit space with the sphere weight forced by the zero-sum rule."""
    if isinstance(config, SphereOnly):
        space = WeightedOrbitSpace(spheres=(0,))
    elif isinstance(config, SpherePlusPoint):
        space = WeightedOrbitSpace(points=(config.sign,), spheres=(-config.sign,))
    elif isinstance(config, TwoSpheres):
        space = WeightedOrbitSpace(spheres=(config.omega1, -config.omega1))
    elif isinstance(config, SpherePlusTwoPoints):
        if config.arc is not None:
            space = WeightedOrbitSpace(arcs=(config.arc,), spheres=(-config.arc.c,))
        else:
            space = WeightedOrbitSpace(points=config.point_signs, spheres=(-sum(config.point_signs),))
    else:
        raise TypeError(f"not a fixed-point configuration: {config!r}")
    report = validate_legality(space)
    if not report.ok:
        raise IllegalWeights("; ".join(map(str, report)))
    return space


def fixed_point_euler(space: WeightedOrbitSpace) -> int:
    """Euler characteristic of the fixed-point set: 2 per sphere, 1 per point."""
    return 2 * len(space.spheres) + len(space.points) + sum(a.fixed_points for a in space.arcs)


@dataclass(frozen=True)
class PipelineTrace:
    space: WeightedOrbitSpace
    chain: PlumbingChain
    b0: IntSymMatrix
    qm: IntSymMatrix
    invariants: object
    steps: list = field(default_factory=list)
    endpoint: IntSymMatrix | None = None
    notes: tuple[str, ...] = ()


class ConfigResult(NamedTuple):
    manifold: ManifoldExpr
    extendable: bool
    trace: PipelineTrace


def classify_space(space: WeightedOrbitSpace) -> ConfigResult:
    chain = assemble_chain(space)
    b0 = intersection_matrix(chain)
    qm = intersection_form(chain)
    manifold = classify(qm)
    steps, endpoint = [], qm
    if qm.n <= 3:
        red = reduce_trace(qm)
        steps, endpoint = red.steps, red.endpoint
    trace = PipelineTrace(space, chain, b0, qm, invariants(qm), steps, endpoint, chain.notes)
    return ConfigResult(manifold, not space.circles, trace)


def classify_config(config: FixedPointConfig) -> ConfigResult:
    return classify_space(build_orbit_space(config))


def euler_check(config, result: ManifoldExpr) -> bool:
    """Euler characteristic of the fixed-point set against that of ``result``."""
    space = config if isinstance(config, WeightedOrbitSpace) else build_orbit_space(config)
    chi = result.euler_characteristic()
    return chi is not None and chi == fixed_point_euler(space)


@dataclass(frozen=True)
class ArcCase:
    arc: WeightedArc
    eps1: int
    eps2: int
    omega1: int
    omega2: int
    qm: IntSymMatrix
    manifold: ManifoldExpr
    canonical: WeightedArc
    partner: WeightedArc
    relation: str

    @property
    def row(self) -> tuple[int, int, int, int, int, int]:
        """``(eps', eps'', omega_1, alpha, beta, omega_2)``."""
        s = self.arc.segments[0]
        return (self.eps1, self.eps2, self.omega1, s.alpha, s.beta, self.omega2)

    @property
    def ends(self) -> tuple[int, int]:
        return (self.arc.b_start, self.arc.b_end)


_END_ORDER = [(0, 0), (0, -1), (-1, 0), (-1, -1)]


def enumerate_arc_cases(k_max: int = 12) -> list[ArcCase]:
    """Every legal single-segment arc with ``alpha <= k_max`` and
    ``beta`` in ``{1, alpha-1}``, classified.

    An arc and its reversal describe the same action, so both are listed
    and each case names its ``reversal`` partner.  The two arcs of order two
    that are their own reversal are instead marked as an ``orientation``
    pair: swapping their ends reverses the orientation of the manifold.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    seen, cases = set(), []
    for b1, b2 in _END_ORDER:
        for alpha in range(2, k_max + 1):
            for beta in sorted({1, alpha - 1}):
                inv = SeifertInvariant(alpha, beta)
                try:
                    make_block_c(b1, inv, b2)
                    make_block_g(b2, inv)
                except IllegalWeights:
                    continue
                arc = WeightedArc(b1, (inv,), b2)
                if arc in seen:
                    continue
                seen.add(arc)
                res = classify_config(SpherePlusTwoPoints(arc=arc))
                c, g = res.trace.chain.blocks[:2]
                rev = reverse_arc(arc)
                if rev != arc:
                    partner, relation = rev, "reversal"
                else:
                    partner, relation = WeightedArc(b2, (inv,), b1), "orientation"
                cases.append(ArcCase(arc, c.param("eps1"), c.param("eps2"), c.omega, g.omega,
                                     res.trace.qm, res.manifold, canonical_arc(arc), partner, relation))
    return cases


@dataclass(frozen=True)
class TheoremBCase(OrbitCase):
    pass


def _m(text):
    return ManifoldExpr.parse(text)


def _alt(*texts):
    return Alternatives(tuple(_m(t) if isinstance(t, str) else t for t in texts))


def _fam(text):
    return ManifoldFamily(text, 4)


_ONE_BY_ONE = _alt("S2xS2", "CP2 # CP2", "CP2 # -CP2")
_S3_BUNDLE = _fam("S3-bundle over S1: S3xS1 if orientable, S3~xS1 otherwise; covered by S3xR")

THEOREM_B_TABLE = {
    ("SO4", "cohomogeneity-one", (), ""): _alt("S4", "RP4"),
    ("SO4", "point", ("SO(3)",), ""): _m("S4"),
    ("SO4", "point", ("O(3)",), ""): _m("RP4"),
    ("SU2", "cohomogeneity-one", (), ""): _alt("S4", "RP4", "CP2"),
    ("SO3", "point", ("SO(2)",), ""): _m("S4"),
    ("SO3", "point", ("O(2)",), ""): _m("RP4"),
    ("SO3", "interval", ("SO(2)", "SO(2)", "SO(2)"), ""): _m("S4"),
    ("SO3", "interval", ("O(2)", "SO(2)", "SO(2)"), ""): _m("RP4"),
    ("SO3", "interval", ("O(2)", "SO(2)", "O(2)"), ""): _m("RP4 # RP4"),
    ("SO3", "circle", ("fixed",), "cylinder"): _fam("S3-bundle over S1, realised by S3xS1"),
    ("SO3", "circle", ("O(2)",), "cylinder"): _fam("RP3-bundle over S1, covered by S3xR"),
    ("SO3", "circle", ("SO(2)",), "moebius"): _fam("S3-bundle over S1, realised by S3~xS1"),
    ("S1", "point", ("S1",), ""): _m("CP2"),
    ("S1", "point", ("1",), ""): _m("S4"),
    ("S1", "point", ("Z2",), ""): _m("RP4"),
    ("S1", "circle", ("1",), ""): _S3_BUNDLE,
    ("S1", "interval", ("1", "1", "1"), ""): _m("S4"),
    ("S1", "interval", ("1", "1", "Z2"), ""): _m("RP4"),
    ("S1", "interval", ("Z2", "1", "Z2"), ""): _fam("covered by S3xR, realised on RP4 # RP4"),
    ("S1", "interval", ("1", "1", "S1"), ""): _m("CP2"),
    ("S1", "interval", ("S1", "1", "S1"), ""): _ONE_BY_ONE,
    ("S1", "interval", ("S1", "1", "Z2"), ""): _fam("non-orientable, double covered by CP2 # CP2 or CP2 # -CP2"),
    ("S1", "surface-in-boundary", ("fixed",), "S2"): _alt("S2xS2", "CP2 # -CP2"),
    ("S1", "surface-in-boundary", ("fixed",), "RP2"): _fam("universal cover CP2 # -CP2 or S2xS2"),
    ("S1", "surface-in-boundary", ("fixed",), "T2"): _fam("covered by S2xR2"),
    ("S1", "surface-in-boundary", ("fixed",), "K2"): _fam("covered by S2xR2"),
    ("S1", "surface-in-boundary", ("Z2",), "S2"): _fam("RP2-bundle over S2"),
    ("S1", "surface-in-boundary", ("Z2",), "RP2"): _fam("RP2-bundle over RP2"),
    ("S1", "surface-in-boundary", ("Z2",), "T2"): _fam("RP2-bundle over T2"),
    ("S1", "surface-in-boundary", ("Z2",), "K2"): _fam("RP2-bundle over K2"),
    ("S1", "closed-surface", ("1",), ""): _fam("S2-bundle over C, with F double covering C"),
    ("S1", "disk", ("1",), ""): _m("S4"),
    ("S1", "disk", ("Z2-boundary",), ""): _fam("quotient of S2xS2"),
    ("S1", "disk", ("Z2-point",), ""): _m("RP4"),
    ("S1", "disk", ("Z2-point", "Z2-point"), ""): _m("RP4 # RP4"),
    ("S1", "cylinder", ("1",), ""): _alt(_fam("S3xS1"), _fam("S3~xS1")),
    ("S1", "cylinder", ("Z2", "Z2"), ""): _fam("covered by S2xR2"),
    ("S1", "cylinder", ("Z2",), ""): _fam("RP3-bundle over S1"),
    ("S1", "moebius", ("1",), ""): _alt(_fam("S3xS1"), _fam("S3~xS1")),
    ("S1", "moebius", ("Z2",), ""): _fam("covered by S2xT2"),
}


def theoremB_lookup(case: OrbitCase):
    key = case.key()
    if key in THEOREM_B_TABLE:
        return THEOREM_B_TABLE[key]
    if case.group == "S1" and case.shape == "circle" and len(key[2]) == 1:
        q = _cyclic_order(key[2][0])
        if q and q >= 2:
            return _fam(f"L({q},q')-bundle over S1, covered by S3xR")
    if case.group == "S1" and case.shape == "interval" and len(key[2]) == 3:
        lo, mid, hi = key[2]
        q = _cyclic_order(mid)
        if lo == hi == "S1" and q and q >= 2:
            return _ONE_BY_ONE
    raise NoSuchCase(f"no 4-dimensional case for {case}")


def admissible_groups(sphere_dim: int) -> list[tuple[str, str]]:
    """Pairs ``(G, H)`` with ``G`` acting transitively on the unit sphere of
    dimension ``sphere_dim`` with isotropy ``H``."""
    k = sphere_dim
    out = []
    if k >= 1:
        out.append((f"SO({k + 1})", f"SO({k})"))
    if k >= 3 and k % 2 == 1:
        m = (k - 1) // 2
        out.append((f"SU({m + 1})", f"SU({m})"))
    if k >= 7 and k % 4 == 3:
        m = (k - 3) // 4
        out.append((f"Sp({m + 1})", f"Sp({m})"))
    if k == 6:
        out.append(("G2", "SU(3)"))
    if k == 7:
        out.append(("Spin(7)", "G2"))
    if k == 15:
        out.append(("Spin(9)", "Spin(7)"))
    return out
