"""Exact convex-hull membership by phase-one simplex over fractions."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

__all__ = ["convex_weights", "in_convex_hull", "is_extreme"]


def convex_weights(point: Sequence[Fraction], others: Sequence[Sequence[Fraction]]) -> Optional[list[Fraction]]:
    """Weights ``w >= 0`` with ``sum w = 1`` and ``sum w_q q = point``, or None.

    Phase one of the simplex method with Bland's rule, so it terminates and
    every pivot is exact.
    """
    if not others:
        return None
    m = len(point) + 1
    cols = len(others)
    rows = []
    for r in range(m):
        if r < len(point):
            coeffs = [Fraction(q[r]) for q in others]
            rhs = Fraction(point[r])
        else:
            coeffs = [Fraction(1)] * cols
            rhs = Fraction(1)
        if rhs < 0:
            coeffs, rhs = [-a for a in coeffs], -rhs
        art = [Fraction(int(i == r)) for i in range(m)]
        rows.append(coeffs + art + [rhs])
    width = cols + m
    basis = [cols + r for r in range(m)]
    # phase-one objective: minimize the sum of artificials
    obj = [-sum(row[c] for row in rows) for c in range(width)] + [-sum(row[-1] for row in rows)]
    for r in range(m):
        obj[cols + r] = Fraction(0)

    while True:
        enter = next((c for c in range(width) if obj[c] < 0), None)
        if enter is None:
            break
        best = None
        for r, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            break
        _, pr = best
        piv = rows[pr][enter]
        rows[pr] = [v / piv for v in rows[pr]]
        for r in range(m):
            if r != pr and rows[r][enter] != 0:
                f = rows[r][enter]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, rows[pr])]
        basis[pr] = enter

    if obj[-1] != 0:
        return None
    w = [Fraction(0)] * cols
    for r, b in enumerate(basis):
        if b < cols:
            w[b] = rows[r][-1]
    if any(v < 0 for v in w) or sum(w) != 1:
        return None
    for d in range(len(point)):
        if sum(wq * q[d] for wq, q in zip(w, others)) != point[d]:
            return None
    return w


def in_convex_hull(point, others) -> bool:
    return convex_weights(point, others) is not None


def _separates(direction, point, others) -> bool:
    top = sum(a * b for a, b in zip(direction, point))
    return all(sum(a * b for a, b in zip(direction, q)) < top for q in others)


def is_extreme(point, others) -> bool:
    """True iff ``point`` is not a convex combination of ``others``.

    A strictly separating functional is tried first (cheap certificate); the
    exact LP settles the remaining cases.
    """
    others = [q for q in others if tuple(q) != tuple(point)]
    if not others:
        return True
    if _separates(point, point, others):
        return True
    return not in_convex_hull(point, others)
