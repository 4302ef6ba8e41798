"""Maximal LOCC conversion probability and the sets S^lambda(y)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ratvec import (
    Number,
    ProbVec,
    as_fraction,
    is_majorized,
    is_super_majorized,
    pad,
    scale,
    sort_desc,
    tail_sums,
    y_lambda,
)

__all__ = [
    "CriticalSet",
    "TransformReport",
    "max_prob",
    "critical_set",
    "endpoint_ratio",
    "transform_report",
    "s_membership",
    "s_extreme_points",
    "distinct_permutations",
]


def _tail_ratios(x, y) -> list[Optional[Fraction]]:
    """``E_l(x)/E_l(y)`` for l = 1..n, ``None`` where the target tail is zero."""
    x, y = pad(x, y)
    out: list[Optional[Fraction]] = []
    for ex, ey in zip(tail_sums(x), tail_sums(y)):
        out.append(None if ey == 0 else ex / ey)
    return out


def max_prob(x, y) -> Fraction:
    """Vidal's formula: ``min_l E_l(x) / E_l(y)``.

    Tails where ``E_l(y) = 0`` impose no constraint and are skipped.
    """
    ratios = [r for r in _tail_ratios(x, y) if r is not None]
    if not ratios:
        raise ValueError("target vector is zero")
    return min(ratios)


def endpoint_ratio(x, y) -> Optional[Fraction]:
    """``x_n / y_n`` on the sorted, padded vectors; ``None`` stands for +inf."""
    x, y = pad(x, y)
    xn, yn = sort_desc(x)[-1], sort_desc(y)[-1]
    return None if yn == 0 else xn / yn


@dataclass(frozen=True)
class CriticalSet:
    """Interior tail indices (1 < l < n) at which the Vidal minimum is attained.

    ``hypothesis`` records whether ``p_star < min(x_n/y_n, 1)``; when it is
    False the indices are still reported but theorems that need the strict
    inequality refuse to run.
    """

    indices: tuple[int, ...]
    p_star: Fraction
    n: int
    hypothesis: bool

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, l):
        return l in self.indices

    @property
    def l_min(self) -> int:
        return self.indices[0]

    @property
    def l_max(self) -> int:
        return self.indices[-1]


def _hypothesis(p: Fraction, end: Optional[Fraction]) -> bool:
    bound = Fraction(1) if end is None else min(end, Fraction(1))
    return p < bound


def critical_set(x, y) -> CriticalSet:
    ratios = _tail_ratios(x, y)
    p = min(r for r in ratios if r is not None)
    n = len(ratios)
    indices = tuple(l for l in range(2, n) if ratios[l - 1] == p)
    return CriticalSet(indices, p, n, _hypothesis(p, endpoint_ratio(x, y)))


@dataclass(frozen=True)
class TransformReport:
    p: Fraction
    argmin_indices: CriticalSet
    endpoint: Optional[Fraction]
    deterministic: bool

    @property
    def catalysable(self) -> bool:
        return self.argmin_indices.hypothesis


def transform_report(x, y) -> TransformReport:
    cs = critical_set(x, y)
    return TransformReport(cs.p_star, cs, endpoint_ratio(x, y), cs.p_star == 1)


def s_membership(x, y, lam: Number) -> bool:
    """True iff ``x`` converts to ``y`` with probability at least ``lam``.

    Decided as majorization by ``y_lambda`` and cross-checked against
    super-majorization by ``lam * y``.
    """
    lam = as_fraction(lam)
    x, y = pad(x, y)
    by_major = is_majorized(x, y_lambda(y, lam))
    by_super = is_super_majorized(x, scale(y, lam))
    if by_major != by_super:
        raise AssertionError(f"membership routes disagree for x={x}, y={y}, lam={lam}")
    return by_major


def distinct_permutations(v) -> list[ProbVec]:
    """All distinct orderings of ``v`` in lexicographically decreasing order."""
    items = sorted(v, reverse=True)
    out: list[ProbVec] = []
    # standard next-permutation walk, run on the descending sequence
    a = list(items)
    while True:
        out.append(ProbVec(a))
        i = len(a) - 2
        while i >= 0 and a[i] <= a[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = len(a) - 1
        while a[j] >= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def s_extreme_points(y, lam: Number) -> list[ProbVec]:
    return distinct_permutations(y_lambda(y, lam))
