"""Finding catalysts of a given dimension.

:func:`decide_k_dim` picks, for each critical tuple, one strict inequality of
the form ``y[r_a] c_a > y[r_b - 1] c_b`` and asks whether the chosen system
(plus ``c_1 >= c_2 >= ... >= c_k``) has a strictly positive solution.  Such
systems are multiplicative difference constraints; :class:`ConstraintGraph`
decides them exactly with Bellman-Ford over pairs ``(product, strict count)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .catalysis import (
    _theorem_inputs,
    construct_geometric_catalyst,
    is_partial_catalyst,
    iter_tuples,
)
from .ratvec import ProbVec, normalize, pad, tensor
from .transform import max_prob

__all__ = [
    "RatioConstraint",
    "ConstraintGraph",
    "Infeasible",
    "SearchResult",
    "enumerate_tuples",
    "feasible_point",
    "sol_disjuncts",
    "decide_k_dim",
    "min_catalyst_dimension",
    "grid_points",
    "grid_oracle",
    "best_prob_at_dim",
]


@dataclass(frozen=True)
class RatioConstraint:
    """``c_i / c_j < bound`` (kind ``"lt"``) or ``c_i / c_j > bound`` (``"gt"``), 1-indexed."""

    i: int
    j: int
    kind: str
    bound: Fraction

    def holds(self, c) -> bool:
        lhs, rhs = c[self.i - 1], self.bound * c[self.j - 1]
        return lhs < rhs if self.kind == "lt" else lhs > rhs

    def as_edge(self) -> tuple[int, int, Fraction, bool]:
        """``(src, dst, w, strict)`` meaning ``c_dst < w * c_src`` (0-indexed)."""
        if self.kind == "lt":
            return self.j - 1, self.i - 1, self.bound, True
        return self.i - 1, self.j - 1, 1 / self.bound, True


@dataclass(frozen=True)
class Infeasible:
    """A cycle whose weight product is below 1, or equal to 1 through a strict edge."""

    cycle: tuple[int, ...]
    product: Fraction
    strict_edges: int


class ConstraintGraph:
    """Constraints ``c_dst <= w * c_src`` (or ``<`` when strict) on ``k`` positive unknowns."""

    def __init__(self, k: int, monotone: bool = True):
        self.k = k
        self.edges: list[tuple[int, int, Fraction, bool]] = []
        if monotone:
            for i in range(k - 1):
                self.add(i, i + 1, Fraction(1), False)

    def add(self, src: int, dst: int, w: Fraction, strict: bool) -> None:
        if w <= 0:
            raise ValueError("edge weights must be positive")
        self.edges.append((src, dst, Fraction(w), strict))

    def add_ratio(self, rc: RatioConstraint) -> None:
        self.add(*rc.as_edge())

    def copy(self) -> "ConstraintGraph":
        g = ConstraintGraph(self.k, monotone=False)
        g.edges = list(self.edges)
        return g

    def satisfied_by(self, c) -> bool:
        for src, dst, w, strict in self.edges:
            if strict and not c[dst] < w * c[src]:
                return False
            if not strict and not c[dst] <= w * c[src]:
                return False
        return True

    def solve(self) -> "list[Fraction] | Infeasible":
        # Path weights live in the ordered group (Q_{>0}, *) x (Z, +) with
        # lexicographic order: a strict edge contributes -1 to the count, so
        # among equal products the path with more strict edges is shorter.
        k = self.k
        dist = [(Fraction(1), 0)] * k
        pred: list[Optional[int]] = [None] * k
        updated = -1
        for _ in range(k + 1):
            updated = -1
            for e_idx, (src, dst, w, strict) in enumerate(self.edges):
                cand = (dist[src][0] * w, dist[src][1] - (1 if strict else 0))
                if cand < dist[dst]:
                    dist[dst] = cand
                    pred[dst] = e_idx
                    updated = dst
            if updated < 0:
                break
        if updated >= 0:
            return self._cycle_from(updated, pred)
        return self._realize(dist)

    def _cycle_from(self, node: int, pred: list[Optional[int]]) -> Infeasible:
        for _ in range(self.k):
            node = self.edges[pred[node]][0]
        start, cycle, prod, strict = node, [], Fraction(1), 0
        while True:
            src, dst, w, s = self.edges[pred[node]]
            cycle.append(node)
            prod *= w
            strict += s
            node = src
            if node == start:
                break
        cycle.reverse()
        return Infeasible(tuple(cycle), prod, strict)

    def _realize(self, dist: list[tuple[Fraction, int]]) -> list[Fraction]:
        # c_v = a_v * eta^(-s_v) with eta < 1 close enough to 1 that edges with
        # slack in the product keep it after the strict-count correction.
        base = [d[0] for d in dist]
        expo = [-d[1] for d in dist]
        h = Fraction(1, 2)
        while True:
            eta = 1 - h
            c = [b * eta ** e for b, e in zip(base, expo)]
            if self.satisfied_by(c):
                return c
            h /= 2


def feasible_point(g: ConstraintGraph) -> Optional[list[Fraction]]:
    out = g.solve()
    return None if isinstance(out, Infeasible) else out


def enumerate_tuples(L, n: int, k: int) -> list[tuple[int, ...]]:
    indices = tuple(getattr(L, "indices", L))
    if not indices:
        raise ValueError("critical set is empty")
    if k < 2:
        raise ValueError("k must be at least 2")
    return list(iter_tuples(indices, n, k))


def sol_disjuncts(y, r: tuple[int, ...]) -> list[RatioConstraint]:
    """The strict inequalities whose union solves ``max y[r_i] c_i > min y[r_i - 1] c_i``.

    Each ``y[r_a] c_a > y[r_b - 1] c_b`` becomes ``c_b / c_a < y[r_a] / y[r_b - 1]``
    (or the mirrored ``gt`` form when ``b < a``).  Terms with ``y_{n+1}`` and
    the unsatisfiable ``a == b`` cases are dropped.
    """
    n = len(y)
    out = []
    k = len(r)
    for a in range(k):
        for b in range(k):
            if a == b or r[a] == n + 1:
                continue
            w = y[r[a] - 1] / y[r[b] - 2]
            if b > a:
                out.append(RatioConstraint(b + 1, a + 1, "lt", w))
            else:
                out.append(RatioConstraint(a + 1, b + 1, "gt", 1 / w))
    return out


def _sol_holds(y, c, r) -> bool:
    n = len(y)
    hi = max((y[ri - 1] * ci for ri, ci in zip(r, c) if ri != n + 1))
    lo = min(y[ri - 2] * ci for ri, ci in zip(r, c))
    return hi > lo


@dataclass
class SearchResult:
    exists: bool
    dimension: int
    witness: Optional[ProbVec] = None
    p_with: Optional[Fraction] = None
    selections: Optional[dict[tuple[int, ...], RatioConstraint]] = None
    tuples_checked: int = 0
    nodes: int = field(default=0, repr=False)


def decide_k_dim(x, y, k: int) -> SearchResult:
    """Decide whether a ``k``-dimensional partial catalyst exists; return a witness if so."""
    if k < 2:
        raise ValueError("k must be at least 2")
    x, y, cs = _theorem_inputs(x, y)
    tuples = enumerate_tuples(cs, cs.n, k)
    options = {r: sol_disjuncts(y, r) for r in tuples}
    stats = {"nodes": 0}

    def first_failing(c) -> Optional[tuple[int, ...]]:
        for r in tuples:
            if not _sol_holds(y, c, r):
                return r
        return None

    # Depth-first over disjunct choices.  At each node the current system's
    # feasible point is tested against every tuple; only a tuple it fails is
    # branched on, so the search stops as soon as one point works.
    def dfs(g: ConstraintGraph, chosen: dict) -> Optional[tuple[list[Fraction], dict]]:
        stats["nodes"] += 1
        point = feasible_point(g)
        if point is None:
            return None
        r = first_failing(point)
        if r is None:
            return point, chosen
        for rc in options[r]:
            g2 = g.copy()
            g2.add_ratio(rc)
            found = dfs(g2, {**chosen, r: rc})
            if found is not None:
                return found
        return None

    found = dfs(ConstraintGraph(k), {})
    if found is None:
        return SearchResult(False, k, tuples_checked=len(tuples), nodes=stats["nodes"])
    point, chosen = found
    witness = normalize(point)
    selections = dict(chosen)
    for r in tuples:
        if r not in selections:
            selections[r] = next(rc for rc in options[r] if rc.holds(point))
    verdict = is_partial_catalyst(x, y, witness)
    if not verdict.is_partial:
        raise AssertionError(f"unverified witness {witness} for k={k}")
    return SearchResult(True, k, witness, verdict.p_with, selections, len(tuples), stats["nodes"])


def min_catalyst_dimension(x, y) -> SearchResult:
    """Smallest ``k`` admitting a partial catalyst, searched upward from 2.

    The geometric construction bounds the search from above.
    """
    upper = len(construct_geometric_catalyst(x, y))
    for k in range(2, upper + 1):
        res = decide_k_dim(x, y, k)
        if res.exists:
            return res
    raise AssertionError("no catalyst up to the geometric bound")


def _partitions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    # nonincreasing positive integer tuples, lexicographically decreasing
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(min(cap, total - parts + 1), 0, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def grid_points(k: int, D: int) -> Iterator[ProbVec]:
    """Nonincreasing strictly positive k-vectors with components in ``(1/D) Z``."""
    for a in _partitions(D, k, D):
        yield ProbVec(Fraction(v, D) for v in a)


def grid_oracle(x, y, k: int, D: int = 24) -> list[ProbVec]:
    """Brute force: every grid catalyst of dimension ``k`` that is partial."""
    if k < 2 or D < k:
        raise ValueError("need k >= 2 and D >= k")
    return [c for c in grid_points(k, D) if is_partial_catalyst(x, y, c).is_partial]


def best_prob_at_dim(x, y, k: int, D: int = 24) -> tuple[Fraction, ProbVec]:
    """Best ``P(x (x) c -> y (x) c)`` over the trivial catalyst and the k-grid.

    A lower bound on the supremum over all catalysts.  Candidates are scanned
    as ``(1)`` first and then grid points in decreasing lexicographic order;
    the first maximizer wins ties.
    """
    if k < 1 or D < k:
        raise ValueError("need k >= 1 and D >= k")
    x, y = pad(x, y)
    best_c = ProbVec([1])
    best = max_prob(x, y)
    for c in grid_points(k, D):
        p = max_prob(tensor(x, c), tensor(y, c))
        if p > best:
            best, best_c = p, c
    return best, best_c
