"""Symbolic connected sums of the model manifolds that appear as answers.

Summands are drawn from a small alphabet.  Expressions are normalised: the
sphere of the right dimension is the identity for ``#`` and disappears
unless it is the whole expression, and summands are sorted.

>>> str(ManifoldExpr.parse("-CP2 # CP2"))
'CP2 # -CP2'
>>> ManifoldExpr.parse("RP3 # RP3") == ManifoldExpr([Summand("L", params=(2, 1))] * 2)
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = ["Summand", "ManifoldExpr", "ManifoldFamily", "Alternatives"]

_DIM = {
    "S4": 4, "CP2": 4, "S2xS2": 4, "RP4": 4,
    "S3": 3, "S2xS1": 3, "S2~xS1": 3, "RP2xS1": 3, "L": 3,
}
_ORDER = ["S4", "S3", "CP2", "S2xS2", "S2xS1", "S2~xS1", "RP2xS1", "L", "RP4"]


@dataclass(frozen=True)
class Summand:
    kind: str
    sign: int = 1
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _DIM:
            raise ValueError(f"unknown summand {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if (self.kind == "L") != bool(self.params):
            raise ValueError("only lens spaces carry parameters")

    @property
    def dim(self) -> int:
        return _DIM[self.kind]

    def sort_key(self):
        return (_ORDER.index(self.kind), -self.sign, self.params)

    def __str__(self):
        if self.kind == "L":
            name = "RP3" if self.params == (2, 1) else "L({},{})".format(*self.params)
        else:
            name = self.kind
        return name if self.sign > 0 else "-" + name


class ManifoldExpr:
    """Normalised connected sum."""

    __slots__ = ("summands", "dim")

    def __init__(self, summands=(), dim=None):
        summands = list(summands)
        dims = {s.dim for s in summands}
        if dim is None:
            if len(dims) != 1:
                raise ValueError("cannot infer the dimension of this expression")
            dim = dims.pop()
        elif dims - {dim}:
            raise ValueError(f"summands of mixed dimension in a {dim}-manifold")
        unit = f"S{dim}"
        body = sorted((s for s in summands if s.kind != unit), key=Summand.sort_key)
        self.summands = tuple(body) if body else (Summand(unit),)
        self.dim = dim

    @classmethod
    def sphere(cls, dim: int) -> "ManifoldExpr":
        return cls([Summand(f"S{dim}")], dim)

    @classmethod
    def parse(cls, text: str) -> "ManifoldExpr":
        out = []
        for tok in (t.strip() for t in text.split("#")):
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            m = re.fullmatch(r"L\((\d+),(\d+)\)", tok.replace(" ", ""))
            if m:
                out.append(Summand("L", sign, (int(m[1]), int(m[2]))))
            elif tok == "RP3":
                out.append(Summand("L", sign, (2, 1)))
            else:
                out.append(Summand(tok, sign))
        return cls(out)

    @property
    def is_sphere(self) -> bool:
        return self.summands == (Summand(f"S{self.dim}"),)

    def count(self, kind: str, sign: int | None = None) -> int:
        return sum(1 for s in self.summands if s.kind == kind and (sign is None or s.sign == sign))

    def mirror(self) -> "ManifoldExpr":
        """Orientation reverse, flipping the chiral summands CP2 and L."""
        flipped = []
        for s in self.summands:
            if s.kind == "CP2":
                flipped.append(Summand("CP2", -s.sign))
            elif s.kind == "L":
                a, b = s.params
                flipped.append(Summand("L", 1, (a, a - b)))
            else:
                flipped.append(s)
        return ManifoldExpr(flipped, self.dim)

    def euler_characteristic(self) -> int | None:
        """Euler characteristic of a simply connected 4-dimensional sum."""
        if self.dim != 4 or self.count("RP4"):
            return None
        b2 = self.count("CP2") + 2 * self.count("S2xS2")
        return 2 + b2

    def __eq__(self, other):
        if isinstance(other, ManifoldExpr):
            return (self.dim, self.summands) == (other.dim, other.summands)
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, self.summands))

    def __str__(self):
        return " # ".join(map(str, self.summands))

    def __repr__(self):
        return f"ManifoldExpr({str(self)!r})"


@dataclass(frozen=True)
class ManifoldFamily:
    """A class of manifolds named by a relation, such as a covering or a
    bundle, rather than by a single connected sum."""

    description: str
    dim: int = 4

    def __str__(self):
        return self.description


@dataclass(frozen=True)
class Alternatives:
    """One of several possible answers, in the order listed."""

    options: tuple

    def __str__(self):
        parts = [str(o) for o in self.options]
        if len(parts) == 1:
            return parts[0]
        return ", ".join(parts[:-1]) + " or " + parts[-1]

    def __contains__(self, item):
        return item in self.options

    def __iter__(self):
        return iter(self.options)
