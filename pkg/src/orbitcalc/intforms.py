"""Integral symmetric bilinear forms.

Exact arithmetic throughout: signatures come from a congruence
diagonalisation over the rationals, determinants from fraction-free
elimination.  Indices in elementary operations are 1-based, matching the
usual ``(i, j; k)`` notation: add ``k`` times row ``i`` to row ``j`` and then
``k`` times column ``i`` to column ``j``.

>>> B = IntSymMatrix([[1, 1], [1, 2]])
>>> elementary_op(B, 1, 2, -1)
IntSymMatrix([[1, 0], [0, 1]])
>>> str(classify(IntSymMatrix([[0, 1], [1, 1]])))
'CP2 # -CP2'
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import NoSuchSum, NotUnimodular, UnsupportedConfiguration
from .manifolds import ManifoldExpr, Summand

__all__ = [
    "IntSymMatrix",
    "FormInvariants",
    "elementary_op",
    "apply_steps",
    "invariants",
    "classify",
    "reduce_trace",
    "ReductionTrace",
    "brute_force_congruent",
]


class IntSymMatrix:
    """Immutable symmetric matrix of Python integers (possibly 0x0)."""

    __slots__ = ("_rows",)

    def __init__(self, rows=()):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i + 1} has {len(r)} entries, expected {n}")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i + 1},{j + 1})")
        self._rows = rows

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def tolist(self):
        return [list(r) for r in self._rows]

    def diagonal(self):
        return tuple(self._rows[i][i] for i in range(self.n))

    def max_abs(self) -> int:
        return max((abs(x) for r in self._rows for x in r), default=0)

    def truncated(self) -> "IntSymMatrix":
        """Drop the last row and column."""
        if self.n == 0:
            raise ValueError("cannot truncate an empty matrix")
        return IntSymMatrix([r[:-1] for r in self._rows[:-1]])

    def is_tridiagonal(self) -> bool:
        return all(self._rows[i][j] == 0
                   for i in range(self.n) for j in range(self.n) if abs(i - j) > 1)

    def __eq__(self, other):
        if isinstance(other, IntSymMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntSymMatrix({self.tolist()})"

    def __str__(self):
        if not self.n:
            return "[]"
        width = max(len(str(x)) for r in self._rows for x in r)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self._rows)


@dataclass(frozen=True)
class FormInvariants:
    rank: int
    signature: tuple[int, int]
    determinant: int
    parity: str

    @property
    def unimodular(self) -> bool:
        return abs(self.determinant) == 1


def elementary_op(B: IntSymMatrix, i: int, j: int, k: int) -> IntSymMatrix:
    """Congruence by the transvection adding ``k`` * row/column ``i`` to ``j``."""
    n = B.n
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"invalid operation indices ({i},{j}) for a {n}x{n} matrix")
    a = [list(r) for r in B.rows]
    i, j = i - 1, j - 1
    for c in range(n):
        a[j][c] += k * a[i][c]
    for r in range(n):
        a[r][j] += k * a[r][i]
    return IntSymMatrix(a)


def apply_steps(B: IntSymMatrix, steps) -> IntSymMatrix:
    for i, j, k in steps:
        B = elementary_op(B, i, j, k)
    return B


def _determinant(rows) -> int:
    # Bareiss fraction-free elimination
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _diagonalize(rows) -> list[Fraction]:
    """Diagonal of a rational matrix congruent to ``rows``."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    diag = []
    for k in range(n):
        if a[k][k] == 0:
            piv = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if piv is not None:
                a[k], a[piv] = a[piv], a[k]
                for r in a:
                    r[k], r[piv] = r[piv], r[k]
            else:
                off = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if off is not None:
                    # adding row/col j to k makes the pivot 2*a[k][j] != 0
                    for c in range(n):
                        a[k][c] += a[off][c]
                    for r in range(n):
                        a[r][k] += a[r][off]
        p = a[k][k]
        diag.append(p)
        if p == 0:
            continue
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
    return diag


def invariants(B: IntSymMatrix) -> FormInvariants:
    diag = _diagonalize(B.rows)
    p = sum(1 for d in diag if d > 0)
    q = sum(1 for d in diag if d < 0)
    parity = "even" if all(x % 2 == 0 for x in B.diagonal()) else "odd"
    return FormInvariants(p + q, (p, q), _determinant(B.rows), parity)


def classify(B: IntSymMatrix) -> ManifoldExpr:
    """Connected sum of S4, +-CP2 and S2xS2 with intersection form ``B``."""
    inv = invariants(B)
    if not inv.unimodular:
        raise NotUnimodular(f"determinant {inv.determinant} is not +-1")
    p, q = inv.signature
    if inv.rank == 0:
        return ManifoldExpr.sphere(4)
    if inv.parity == "odd":
        return ManifoldExpr([Summand("CP2")] * p + [Summand("CP2", -1)] * q)
    if p == q:
        return ManifoldExpr([Summand("S2xS2")] * p)
    raise NoSuchSum(f"even form with signature {inv.signature} is not a sum of S2xS2")


class ReductionTrace(NamedTuple):
    endpoint: IntSymMatrix
    steps: list
    found: bool


def _is_target(rows) -> bool:
    n = len(rows)
    if all(rows[i][j] == 0 for i in range(n) for j in range(n) if i != j):
        return all(rows[i][i] in (1, -1) for i in range(n))
    if n == 2 and rows[0][0] == 0 and rows[1][1] == 0:
        return rows[0][1] in (1, -1)
    return False


def _canonical_from_invariants(inv: FormInvariants, n: int) -> IntSymMatrix:
    p, q = inv.signature
    if inv.parity == "even" and n == 2:
        return IntSymMatrix([[0, 1], [1, 0]])
    d = [1] * p + [-1] * q
    return IntSymMatrix([[d[i] if i == j else 0 for j in range(n)] for i in range(n)])


def _op_raw(rows, i, j, k):
    # elementary_op on plain tuples, 0-based; only row and column j change
    ri, rj = rows[i], rows[j]
    new_j = [rj[c] + k * ri[c] for c in range(len(rows))]
    new_j[j] = rj[j] + 2 * k * ri[j] + k * k * ri[i]
    new_j = tuple(new_j)
    return tuple(new_j if r == j else row[:j] + (new_j[r],) + row[j + 1:]
                 for r, row in enumerate(rows)), new_j


def _bfs(B: IntSymMatrix, ks, bound, max_states):
    n = B.n
    ops = [(i, j, k) for i in range(n) for j in range(n) if i != j for k in ks]
    start = B.rows
    seen = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if _is_target(cur):
            steps = []
            node = cur
            while seen[node] is not None:
                node, op = seen[node]
                steps.append(op)
            return IntSymMatrix(cur), steps[::-1]
        for i, j, k in ops:
            nxt, changed = _op_raw(cur, i, j, k)
            if nxt in seen or max(map(abs, changed)) > bound:
                continue
            seen[nxt] = (cur, (i + 1, j + 1, k))
            if len(seen) > max_states:
                return None
            queue.append(nxt)
    return None


def reduce_trace(B: IntSymMatrix, max_states: int = 200_000) -> ReductionTrace:
    """Shortest sequence of elementary operations reaching a diagonal +-1 or
    hyperbolic matrix.

    Unit multipliers are tried first; if no path exists inside the entry
    bound the search is repeated with ``|k| <= 2``.  When both fail the
    endpoint is the canonical matrix predicted by the invariants and
    ``found`` is false.
    """
    if B.n > 3:
        raise UnsupportedConfiguration("step reduction is implemented for n <= 3")
    inv = invariants(B)
    if not inv.unimodular:
        raise NotUnimodular(f"determinant {inv.determinant} is not +-1")
    bound = max(4 * B.max_abs(), 2)
    for ks in ((-1, 1), (-1, 1, -2, 2)):
        hit = _bfs(B, ks, bound, max_states)
        if hit is not None:
            return ReductionTrace(hit[0], hit[1], True)
    return ReductionTrace(_canonical_from_invariants(inv, B.n), [], False)


@lru_cache(maxsize=None)
def _unimodular_matrices(n: int, bound: int) -> np.ndarray:
    if (2 * bound + 1) ** (n * n) > 3_000_000:
        raise UnsupportedConfiguration(f"search space too large for n={n}, bound={bound}")
    vals = range(-bound, bound + 1)
    cands = np.array(list(itertools.product(vals, repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    dets = np.rint(np.linalg.det(cands.astype(float))).astype(np.int64)
    return cands[np.abs(dets) == 1]


@lru_cache(maxsize=4096)
def _orbit(rows, bound: int) -> frozenset:
    A = np.array(rows, dtype=np.int64)
    P = _unimodular_matrices(len(rows), bound)
    images = np.einsum("kji,jl,klm->kim", P, A, P)
    return frozenset(map(bytes, (images.reshape(len(P), -1)).astype(np.int64)))


def brute_force_congruent(A: IntSymMatrix, B: IntSymMatrix, bound: int) -> bool:
    """Search every integer ``P`` with entries in ``[-bound, bound]`` and
    ``det P = +-1`` for ``P^T A P = B``."""
    if A.n != B.n:
        return False
    if A.n == 0:
        return True
    target = np.array(B.rows, dtype=np.int64).reshape(-1).tobytes()
    return target in _orbit(A.rows, bound)
