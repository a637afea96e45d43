"""Weighted orbit spaces of circle actions on 4-manifolds.

The orbit space of a smooth circle action on a simply connected 4-manifold
is a 3-manifold whose boundary spheres, isolated fixed points and strata of
exceptional orbits carry integer weights.  This module stores that weight
data combinatorially and checks the legality rules:

* L1: Seifert pairs on adjacent segments of an arc or circle span a
  unimodular lattice, ``det [[a_i, b_i], [a_{i+1}, b_{i+1}]] = +-1``.
* L2: at the ends of an arc ``b' a_1 + b_1 = +-1`` and ``b'' a_n + b_n = +-1``.
* L3: the sphere weights, point weights and arc defects ``c = b'' - b'`` sum
  to zero.
* L4: a simply connected target has no weighted circles.

>>> arc = WeightedArc(0, (SeifertInvariant(2, 1),), -1)
>>> space = WeightedOrbitSpace(spheres=(WeightedSphere(1),), arcs=(arc,))
>>> validate_legality(space).ok
True
>>> reverse_arc(WeightedArc(0, (SeifertInvariant(3, 1),), 0))
WeightedArc(b_start=-1, segments=((3, 2),), b_end=-1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import IllegalWeights, InvariantRange

__all__ = [
    "SeifertInvariant",
    "WeightedArc",
    "WeightedCircle",
    "WeightedSphere",
    "IsolatedFixedPoint",
    "WeightedOrbitSpace",
    "Violation",
    "LegalityReport",
    "validate_legality",
    "reverse_arc",
    "reverse_circle",
    "canonical_form",
    "det2",
]


def det2(p, q):
    """Determinant of the 2x2 matrix with rows ``p`` and ``q``."""
    (a, b), (c, d) = p, q
    return a * d - b * c


@dataclass(frozen=True, order=True)
class SeifertInvariant:
    """Coprime pair (alpha, beta) with alpha >= 2 and 1 <= beta < alpha."""

    alpha: int
    beta: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if not (isinstance(a, int) and isinstance(b, int)):
            raise InvariantRange(f"Seifert pair must be integers, got ({a!r}, {b!r})")
        if a < 2:
            raise InvariantRange(f"alpha must be >= 2, got ({a}, {b})")
        if not 1 <= b <= a - 1:
            raise InvariantRange(f"beta must satisfy 1 <= beta < alpha, got ({a}, {b})")
        if gcd(a, b) != 1:
            raise InvariantRange(f"alpha and beta must be coprime, got ({a}, {b})")

    def reversed(self) -> "SeifertInvariant":
        return SeifertInvariant(self.alpha, self.alpha - self.beta)

    def as_tuple(self) -> tuple[int, int]:
        return (self.alpha, self.beta)

    def __iter__(self):
        return iter((self.alpha, self.beta))

    def __repr__(self):
        return f"({self.alpha}, {self.beta})"


def _as_invariant(x) -> SeifertInvariant:
    return x if isinstance(x, SeifertInvariant) else SeifertInvariant(*x)


def _segments(seq) -> tuple[SeifertInvariant, ...]:
    segs = tuple(_as_invariant(s) for s in seq)
    if not segs:
        raise IllegalWeights("a weighted arc or circle needs at least one segment")
    return segs


@dataclass(frozen=True)
class WeightedArc:
    """Arc of exceptional orbits ``[b'; (a1,b1), ..., (an,bn); b'']``.

    Consecutive segments are separated by isolated fixed points; the two
    endpoints are fixed points as well.
    """

    b_start: int
    segments: tuple[SeifertInvariant, ...]
    b_end: int

    def __post_init__(self):
        object.__setattr__(self, "segments", _segments(self.segments))

    @property
    def c(self) -> int:
        return self.b_end - self.b_start

    @property
    def fixed_points(self) -> int:
        return len(self.segments) + 1

    def sort_key(self):
        # legal end values are 0 and -1; order them by magnitude so the
        # representative with b' = 0 comes first
        return (
            (abs(self.b_start), self.b_start),
            tuple(s.as_tuple() for s in self.segments),
            (abs(self.b_end), self.b_end),
        )

    def __str__(self):
        segs = ",".join(f"({s.alpha},{s.beta})" for s in self.segments)
        return f"[{self.b_start};{segs};{self.b_end}]"


@dataclass(frozen=True, eq=False)
class WeightedCircle:
    """Cyclic chain of exceptional segments.

    Equality ignores the starting segment and the direction of travel.
    """

    segments: tuple[SeifertInvariant, ...]

    def __post_init__(self):
        object.__setattr__(self, "segments", _segments(self.segments))

    def sort_key(self):
        keys = []
        for segs in (self.segments, reverse_circle(self).segments):
            flat = [s.as_tuple() for s in segs]
            keys.extend(tuple(flat[i:] + flat[:i]) for i in range(len(flat)))
        return min(keys)

    def __eq__(self, other):
        if not isinstance(other, WeightedCircle):
            return NotImplemented
        return self.sort_key() == other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __repr__(self):
        return f"WeightedCircle(segments={self.segments!r})"

    def __str__(self):
        return "{" + ",".join(f"({s.alpha},{s.beta})" for s in self.segments) + "}"


@dataclass(frozen=True, order=True)
class WeightedSphere:
    euler: int


@dataclass(frozen=True, order=True)
class IsolatedFixedPoint:
    weight: int

    def __post_init__(self):
        if self.weight not in (1, -1):
            raise IllegalWeights(f"isolated fixed point weight must be +1 or -1, got {self.weight}")


@dataclass(frozen=True)
class WeightedOrbitSpace:
    spheres: tuple[WeightedSphere, ...] = ()
    points: tuple[IsolatedFixedPoint, ...] = ()
    arcs: tuple[WeightedArc, ...] = ()
    circles: tuple[WeightedCircle, ...] = ()
    simply_connected: bool = True

    def __post_init__(self):
        conv = {
            "spheres": lambda x: x if isinstance(x, WeightedSphere) else WeightedSphere(x),
            "points": lambda x: x if isinstance(x, IsolatedFixedPoint) else IsolatedFixedPoint(x),
            "arcs": lambda x: x,
            "circles": lambda x: x if isinstance(x, WeightedCircle) else WeightedCircle(x),
        }
        for name, f in conv.items():
            object.__setattr__(self, name, tuple(f(x) for x in getattr(self, name)))
        if not (self.spheres or self.points or self.arcs or self.circles):
            raise IllegalWeights("a weighted orbit space needs at least one sphere, point, arc or circle")

    @property
    def weight_sum(self) -> int:
        return (
            sum(s.euler for s in self.spheres)
            + sum(p.weight for p in self.points)
            + sum(a.c for a in self.arcs)
        )


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    where: str = ""

    def __str__(self):
        loc = f" ({self.where})" if self.where else ""
        return f"{self.rule}: {self.message}{loc}"


@dataclass(frozen=True)
class LegalityReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def rules(self) -> tuple[str, ...]:
        return tuple(sorted({v.rule for v in self.violations}))

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)


def _adjacency(segs, cyclic):
    pairs = list(zip(segs, segs[1:]))
    if cyclic:
        pairs.append((segs[-1], segs[0]))
    return pairs


def adjacency_determinants(x) -> list[int]:
    """Determinants of consecutive Seifert pairs of an arc or circle."""
    cyclic = isinstance(x, WeightedCircle)
    return [det2(p, q) for p, q in _adjacency(x.segments, cyclic)]


def validate_legality(space: WeightedOrbitSpace) -> LegalityReport:
    out = []
    chains = [(f"arc {i}", a, False) for i, a in enumerate(space.arcs)]
    chains += [(f"circle {i}", c, True) for i, c in enumerate(space.circles)]
    for where, chain, cyclic in chains:
        for p, q in _adjacency(chain.segments, cyclic):
            d = det2(p, q)
            if d not in (1, -1):
                out.append(Violation(
                    "L1", f"det[[{p.alpha},{p.beta}],[{q.alpha},{q.beta}]] = {d}, expected +-1", where))
    for i, arc in enumerate(space.arcs):
        first, last = arc.segments[0], arc.segments[-1]
        v = arc.b_start * first.alpha + first.beta
        if v not in (1, -1):
            out.append(Violation("L2", f"b'*alpha_1 + beta_1 = {v}, expected +-1", f"arc {i}"))
        v = arc.b_end * last.alpha + last.beta
        if v not in (1, -1):
            out.append(Violation("L2", f"b''*alpha_n + beta_n = {v}, expected +-1", f"arc {i}"))
    total = space.weight_sum
    if total != 0:
        out.append(Violation("L3", f"sum of weights is {total}, expected 0"))
    if space.simply_connected and space.circles:
        out.append(Violation("L4", f"{len(space.circles)} weighted circle(s) in a simply connected target"))
    return LegalityReport(tuple(out))


def reverse_arc(arc: WeightedArc) -> WeightedArc:
    """The same arc traversed backwards: ``[-1-b''; reversed complements; -1-b']``."""
    return WeightedArc(
        -1 - arc.b_end,
        tuple(s.reversed() for s in reversed(arc.segments)),
        -1 - arc.b_start,
    )


def reverse_circle(circle: WeightedCircle) -> WeightedCircle:
    return WeightedCircle(tuple(s.reversed() for s in reversed(circle.segments)))


def canonical_arc(arc: WeightedArc) -> WeightedArc:
    rev = reverse_arc(arc)
    return min(arc, rev, key=WeightedArc.sort_key)


def canonical_circle(circle: WeightedCircle) -> WeightedCircle:
    return WeightedCircle(circle.sort_key())


def canonical_form(space: WeightedOrbitSpace) -> WeightedOrbitSpace:
    """Representative with every arc and circle in its smallest orientation
    and every collection sorted."""
    return WeightedOrbitSpace(
        spheres=tuple(sorted(space.spheres)),
        points=tuple(sorted(space.points)),
        arcs=tuple(sorted((canonical_arc(a) for a in space.arcs), key=WeightedArc.sort_key)),
        circles=tuple(sorted((canonical_circle(c) for c in space.circles), key=WeightedCircle.sort_key)),
        simply_connected=space.simply_connected,
    )
