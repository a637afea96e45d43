"""Equivariant plumbing of disk bundles over the 2-sphere.

A linear chain of disk bundles ``Y_w`` (Euler number ``w``), each carrying a
torus action described by a 2x4 matrix of weights, is plumbed with sign +1
at every junction.  Its intersection matrix ``B0`` is tridiagonal with the
Euler numbers on the diagonal and ones beside it; removing the last row and
column gives the intersection form of the closed 4-manifold obtained by
coning off the boundary.

Action matrices are stored with columns ``(u1, u2, w1, w2)`` in the first row
and ``(v1, v2, t1, t2)`` in the second.  Hemisphere ``i`` of a block is
``(u_i, v_i, w_i, t_i)``; the circle acts with weights ``(u_i, v_i)`` and the
second torus factor with ``(w_i, t_i)``.  Every block satisfies

* ``det [[u_i, w_i], [v_i, t_i]] = +-1`` on both hemispheres,
* the clutching relations ``u2 = -u1``, ``v2 = v1 - w*u1``,
  ``w2 = -w1``, ``t2 = t1 - w*w1``,

and two blocks plumb when hemisphere 2 of the first equals hemisphere 1 of
the second with the two torus coordinates swapped.

>>> from .orbit_data import SeifertInvariant
>>> make_block_c(0, SeifertInvariant(2, 1), -1).omega
1
>>> make_block_g(-1, SeifertInvariant(2, 1)).omega
2
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IllegalWeights, IncompatibleWeights, InternalInvariantError, UnsupportedConfiguration
from .intforms import IntSymMatrix
from .orbit_data import SeifertInvariant, WeightedOrbitSpace, det2, validate_legality

__all__ = [
    "BundleBlock",
    "PlumbingChain",
    "make_block_c",
    "make_block_d",
    "make_block_g",
    "make_block_h",
    "make_block_i",
    "make_block_j",
    "link_blocks",
    "assemble_chain",
    "intersection_matrix",
    "intersection_form",
    "MULTI_SEGMENT_NOTE",
]

FAMILIES = ("C", "D", "G", "H", "I", "J")
SIGN_PARAMS = ("eps", "eps1", "eps2", "delta")
MULTI_SEGMENT_NOTE = (
    "multi-segment arc: block chain derived from the neighbouring Seifert pairs, "
    "not one of the tabulated single-segment cases"
)


def _sign(name, x):
    if x not in (1, -1):
        raise IllegalWeights(f"{name} must be +1 or -1, got {x}")
    return x


@dataclass(frozen=True)
class BundleBlock:
    family: str
    omega: int
    params: tuple[tuple[str, int], ...]
    action_matrix: tuple[tuple[int, int, int, int], tuple[int, int, int, int]]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InternalInvariantError(f"unknown block family {self.family!r}")
        for name in SIGN_PARAMS:
            if name in self.param_dict and self.param_dict[name] not in (1, -1):
                raise InternalInvariantError(f"{name} must be +-1 in block {self.family}")
        for i in (1, 2):
            u, v, w, t = self.hemisphere(i)
            if u * t - w * v not in (1, -1):
                raise InternalInvariantError(
                    f"block {self.family}: hemisphere {i} weights have determinant {u * t - w * v}")
        (u1, v1, w1, t1), (u2, v2, w2, t2) = self.hemisphere(1), self.hemisphere(2)
        om = self.omega
        if (u2, v2, w2, t2) != (-u1, v1 - om * u1, -w1, t1 - om * w1):
            raise InternalInvariantError(f"block {self.family}: hemispheres do not clutch with Euler number {om}")
        if _omega_formula(self.family, self.param_dict) != om:
            raise InternalInvariantError(f"block {self.family}: omega {om} disagrees with its parameters")

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    def param(self, name):
        return self.param_dict[name]

    def hemisphere(self, i: int) -> tuple[int, int, int, int]:
        (u1, u2, w1, w2), (v1, v2, t1, t2) = self.action_matrix
        return (u1, v1, w1, t1) if i == 1 else (u2, v2, w2, t2)

    def plumbs_with(self, other: "BundleBlock") -> bool:
        u, v, w, t = self.hemisphere(2)
        u_, v_, w_, t_ = other.hemisphere(1)
        return (u, v, w, t) == (v_, u_, t_, w_)

    def with_free(self, eps: int = 1, n: int = 0, delta: int = 1) -> "BundleBlock":
        """The same weights with different free parameters."""
        p = self.param_dict
        f = self.family
        if f == "C":
            return _block_c((p["p_prev"], p["q_prev"]), SeifertInvariant(p["alpha"], p["beta"]),
                            (p["p_next"], p["q_next"]), eps, n, extra=_c_extra(p))
        if f == "D":
            return make_block_d(p["eps1"], p["eps2"], eps, n)
        if f == "G":
            return make_block_g(p["b1"], SeifertInvariant(p["alpha"], p["beta"]), eps, n)
        if f == "H":
            return make_block_h(p["eps1"], eps, n)
        if f == "I":
            return make_block_i(eps, n, delta)
        return make_block_j(self.omega, eps, n, delta)

    def __str__(self):
        return f"{self.family}({self.omega})"


def _c_extra(p):
    return {k: p[k] for k in ("b1", "b2") if k in p}


def _omega_formula(family, p) -> int:
    if family == "C":
        prev, nxt = (p["p_prev"], p["q_prev"]), (p["p_next"], p["q_next"])
        return p["eps1"] * p["eps2"] * det2(prev, nxt)
    if family == "D":
        return -p["eps1"] - p["eps2"]
    if family == "G":
        return p["eps1"] * p["alpha"]
    if family == "H":
        return -p["eps1"]
    if family == "I":
        return 0
    return p["omega"]


def _block(family, omega, params, rows):
    return BundleBlock(family, omega, tuple(sorted(params.items())),
                       (tuple(rows[0]), tuple(rows[1])))


def _block_c(prev, inv, nxt, eps=1, n=0, extra=None):
    """Block over a segment with Seifert pair ``inv`` whose neighbouring
    strata have primitive vectors ``prev`` and ``nxt``."""
    _sign("eps", eps)
    a, b = inv.alpha, inv.beta
    e1, e2 = det2(prev, (a, b)), det2((a, b), nxt)
    if e1 not in (1, -1) or e2 not in (1, -1):
        raise IllegalWeights(f"segment ({a},{b}) is not unimodular with its neighbours")
    omega = e1 * e2 * det2(prev, nxt)
    (pp, qp), (pn, qn) = prev, nxt
    w = eps * (b + n * a)
    rows = (
        (eps * a, -eps * a, w, -w),
        (eps * e1 * pp, -eps * e2 * pn, eps * e1 * (qp + n * pp), -eps * e2 * (qn + n * pn)),
    )
    params = dict(alpha=a, beta=b, eps1=e1, eps2=e2, eps=eps, n=n,
                  p_prev=pp, q_prev=qp, p_next=pn, q_next=qn, **(extra or {}))
    return _block("C", omega, params, rows)


def make_block_c(b1: int, inv: SeifertInvariant, b2: int, eps: int = 1, n: int = 0) -> BundleBlock:
    """Block for a single-segment arc ``[b1; inv; b2]``.

    Requires ``b1*alpha + beta = +-1`` and ``b2*alpha + beta = +-1``; then
    ``eps1 = beta - alpha|b1|``, ``eps2 = alpha|b2| - beta`` and
    ``omega = eps1*eps2*(|b2| - |b1|)``.
    """
    a, b = inv.alpha, inv.beta
    for name, bv in (("b'", b1), ("b''", b2)):
        if bv * a + b not in (1, -1):
            raise IllegalWeights(f"{name}*alpha + beta = {bv}*{a} + {b} = {bv * a + b}, expected +-1")
    return _block_c((1, abs(b1)), inv, (1, abs(b2)), eps, n, extra={"b1": b1, "b2": b2})


def make_block_d(eps1: int, eps2: int, eps: int = 1, n: int = 0) -> BundleBlock:
    """Block joining two isolated fixed points of weights ``eps1``, ``eps2``."""
    for name, x in (("eps1", eps1), ("eps2", eps2), ("eps", eps)):
        _sign(name, x)
    rows = (
        (eps, -eps, eps * n, -eps * n),
        (-eps * eps1, eps * eps2, -eps * eps1 * (n + eps1), eps * eps2 * (n - eps2)),
    )
    return _block("D", -eps1 - eps2, dict(eps1=eps1, eps2=eps2, eps=eps, n=n), rows)


def make_block_g(b1: int, inv: SeifertInvariant, eps: int = 1, n: int = 0) -> BundleBlock:
    """Block joining the end ``b1`` of an arc with pair ``inv`` to the fixed
    sphere.  Requires ``b1*alpha + beta = +-1``; ``omega = eps1*alpha`` with
    ``eps1 = alpha|b1| - beta``."""
    _sign("eps", eps)
    a, b = inv.alpha, inv.beta
    if b1 * a + b not in (1, -1):
        raise IllegalWeights(f"b'*alpha + beta = {b1}*{a} + {b} = {b1 * a + b}, expected +-1")
    e1 = a * abs(b1) - b
    rows = (
        (eps, -eps, eps * (abs(b1) + n), -eps * (abs(b1) + n)),
        (eps * e1 * a, 0, eps * e1 * (b + n * a), -eps),
    )
    return _block("G", e1 * a, dict(alpha=a, beta=b, b1=b1, eps1=e1, eps=eps, n=n), rows)


def make_block_h(eps1: int, eps: int = 1, n: int = 0) -> BundleBlock:
    """Block joining an isolated fixed point of weight ``eps1`` to the sphere."""
    _sign("eps1", eps1)
    _sign("eps", eps)
    rows = (
        (eps, -eps, eps * n, -eps * n),
        (-eps * eps1, 0, -eps * eps1 * (n + eps1), -eps),
    )
    return _block("H", -eps1, dict(eps1=eps1, eps=eps, n=n), rows)


def make_block_i(eps: int = 1, n: int = 0, delta: int = 1) -> BundleBlock:
    """Trivial bundle joining two fixed spheres."""
    _sign("eps", eps)
    _sign("delta", delta)
    rows = ((eps, -eps, n, -n), (0, 0, delta, delta))
    return _block("I", 0, dict(eps=eps, n=n, delta=delta), rows)


def make_block_j(omega: int, eps: int = 1, n: int = 0, delta: int = 1) -> BundleBlock:
    """Bundle whose zero section is a fixed sphere of weight ``omega``."""
    _sign("eps", eps)
    _sign("delta", delta)
    rows = ((0, 0, delta, -delta), (eps, eps, n, -omega * delta + n))
    return _block("J", omega, dict(omega=omega, eps=eps, n=n, delta=delta), rows)


def _attach(prev: BundleBlock, block: BundleBlock) -> BundleBlock:
    """Choose the free parameters of ``block`` so that it plumbs onto ``prev``."""
    u, v, w, t = prev.hemisphere(2)
    for eps in (1, -1):
        for delta in (1, -1):
            try:
                at0, at1 = block.with_free(eps, 0, delta), block.with_free(eps, 1, delta)
            except IllegalWeights:
                continue
            # w1 and t1 are affine in n; solve whichever moves
            cands = []
            for idx, target in ((2, t), (3, w)):
                c0, c1 = at0.hemisphere(1)[idx], at1.hemisphere(1)[idx]
                if c1 != c0:
                    if (target - c0) % (c1 - c0) == 0:
                        cands.append((target - c0) // (c1 - c0))
                    break
            else:
                cands.append(0)
            for n in cands:
                cand = block.with_free(eps, n, delta)
                if prev.plumbs_with(cand):
                    return cand
    raise IncompatibleWeights(f"block {block} cannot be plumbed onto block {prev}")


def link_blocks(blocks) -> list[BundleBlock]:
    """Keep the first block and re-solve the free parameters of the rest."""
    blocks = list(blocks)
    out = blocks[:1]
    for b in blocks[1:]:
        out.append(_attach(out[-1], b))
    return out


@dataclass(frozen=True)
class PlumbingChain:
    blocks: tuple[BundleBlock, ...]
    m: int
    l: int
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.t != 2 * self.m + self.l - 1:
            raise InternalInvariantError(
                f"chain of {self.t} blocks with m={self.m}, l={self.l}; expected {2 * self.m + self.l - 1}")
        for a, b in zip(self.blocks, self.blocks[1:]):
            if not a.plumbs_with(b):
                raise IncompatibleWeights(f"blocks {a} and {b} do not plumb with sign +1")

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def omegas(self) -> tuple[int, ...]:
        return tuple(b.omega for b in self.blocks)

    @property
    def families(self) -> str:
        return "".join(b.family for b in self.blocks)

    @classmethod
    def link(cls, blocks, m, l, notes=()):
        return cls(tuple(link_blocks(blocks)), m, l, tuple(notes))


def _arc_blocks(arc):
    segs = arc.segments
    vecs = [(1, abs(arc.b_start))] + [s.as_tuple() for s in segs] + [(1, abs(arc.b_end))]
    if len(segs) == 1:
        blocks = [make_block_c(arc.b_start, segs[0], arc.b_end)]
    else:
        blocks = [_block_c(vecs[i], segs[i], vecs[i + 2]) for i in range(len(segs))]
    blocks.append(make_block_g(arc.b_end, segs[-1]))
    return blocks


def assemble_chain(space: WeightedOrbitSpace) -> PlumbingChain:
    """Linear plumbing realising a legal orbit space with one of the supported
    shapes: one sphere plus at most two points, two spheres, or one sphere
    plus one arc."""
    report = validate_legality(space)
    if not report.ok:
        raise IllegalWeights("; ".join(map(str, report)))
    if space.circles:
        raise UnsupportedConfiguration("orbit spaces with weighted circles are not plumbed")
    shape = (len(space.spheres), len(space.points), len(space.arcs))
    sph = [s.euler for s in space.spheres]
    pts = [p.weight for p in space.points]
    if shape == (1, 0, 0):
        return PlumbingChain.link([make_block_j(sph[0])], 1, 0)
    if shape == (1, 1, 0):
        return PlumbingChain.link([make_block_h(pts[0]), make_block_j(sph[0])], 1, 1)
    if shape == (1, 2, 0):
        blocks = [make_block_d(pts[0], pts[1]), make_block_h(pts[1]), make_block_j(sph[0])]
        return PlumbingChain.link(blocks, 1, 2)
    if shape == (2, 0, 0):
        blocks = [make_block_j(sph[0]), make_block_i(), make_block_j(sph[1])]
        return PlumbingChain.link(blocks, 2, 0)
    if shape == (1, 0, 1):
        arc = space.arcs[0]
        notes = (MULTI_SEGMENT_NOTE,) if len(arc.segments) > 1 else ()
        blocks = _arc_blocks(arc) + [make_block_j(sph[0])]
        return PlumbingChain.link(blocks, 1, arc.fixed_points, notes)
    raise UnsupportedConfiguration(
        f"no plumbing template for {shape[0]} sphere(s), {shape[1]} point(s), {shape[2]} arc(s)")


def intersection_matrix(chain: PlumbingChain) -> IntSymMatrix:
    t = chain.t
    return IntSymMatrix([
        [chain.blocks[i].omega if i == j else (1 if abs(i - j) == 1 else 0) for j in range(t)]
        for i in range(t)
    ])


def intersection_form(chain: PlumbingChain) -> IntSymMatrix:
    return intersection_matrix(chain).truncated()
