"""The catalyst-assisted sets T^lambda(y) and T_k^lambda(y).

Membership in T^lambda(y) is only semi-decidable here: a catalyst certifies
membership, and the tail-ratio test in :func:`t_necessary` certifies
non-membership.  Anything else is reported as unknown at the grid resolution.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ratvec import (
    Number,
    ProbVec,
    as_fraction,
    direct_sum,
    pad,
    scale,
    sort_desc,
    tail_sum,
    tensor,
    y_lambda,
)
from .search import grid_points
from .transform import max_prob, s_extreme_points

__all__ = [
    "Status",
    "MembershipVerdict",
    "Reduction",
    "t_necessary",
    "t_boundary_classify",
    "t_k_membership",
    "t_equals_s",
    "t_separating_witness",
    "separating_mu_interval",
    "decompose_reduce",
    "t_extreme_points",
    "recompose",
]


class Status(str, enum.Enum):
    MEMBER = "member_with_certificate"
    NON_MEMBER = "non_member"
    BOUNDARY = "boundary"
    INTERIOR = "interior"
    UNKNOWN = "unknown_at_resolution"


@dataclass(frozen=True)
class MembershipVerdict:
    status: Status
    lam: Fraction
    certificate: Optional[ProbVec] = None
    p_with: Optional[Fraction] = None


@dataclass(frozen=True)
class Reduction:
    x_reduced: ProbVec
    y_reduced: ProbVec
    lam_prime: Fraction
    mu: Fraction
    z: ProbVec


def _open_lambda(lam: Number) -> Fraction:
    lam = as_fraction(lam)
    if not 0 < lam < 1:
        raise ValueError(f"lambda={lam} must lie in (0, 1)")
    return lam


def _sorted_pair(x, y) -> tuple[ProbVec, ProbVec]:
    x, y = pad(x, y)
    return sort_desc(x), sort_desc(y)


def t_necessary(x, y, lam: Number) -> bool:
    """Necessary condition for ``x`` in T^lambda(y).

    Let d be the last index where ``x_d != lam * y_d``; a member must have
    ``x_d > lam * y_d``.  ``False`` proves non-membership.
    """
    lam = _open_lambda(lam)
    x, y = _sorted_pair(x, y)
    if x == y_lambda(y, lam):
        return True
    for xd, yd in zip(reversed(x), reversed(y)):
        if xd != lam * yd:
            return xd > lam * yd
    return True


def t_boundary_classify(x, y, lam: Number, certificate) -> Status:
    """Boundary iff ``x_n = lam * y_n``, given a catalyst proving membership."""
    lam = _open_lambda(lam)
    x, y = _sorted_pair(x, y)
    c = ProbVec(certificate)
    if not c or any(v <= 0 for v in c):
        raise ValueError("certificate must be strictly positive")
    if max_prob(tensor(x, c), tensor(y, c)) < lam:
        raise ValueError("certificate does not reach probability lambda")
    return Status.BOUNDARY if x[-1] == lam * y[-1] else Status.INTERIOR


def _grid_upto(k: int, D: int):
    # zero components add nothing to a catalyst, so dimensions below k count too
    for dim in range(2, k + 1):
        if dim <= D:
            yield from grid_points(dim, D)


def t_k_membership(x, y, lam: Number, k: int, D: int = 24) -> MembershipVerdict:
    """Look for a catalyst of dimension at most ``k`` on the ``1/D`` grid.

    Returns the grid catalyst with the highest probability (first in scan
    order on ties).  Non-membership is reported only when :func:`t_necessary`
    rules ``x`` out of T^lambda(y) altogether.
    """
    lam = as_fraction(lam)
    if not 0 < lam <= 1:
        raise ValueError(f"lambda={lam} must lie in (0, 1]")
    if k < 1:
        raise ValueError("k must be positive")
    x, y = _sorted_pair(x, y)
    p0 = max_prob(x, y)
    if p0 >= lam:
        return MembershipVerdict(Status.MEMBER, lam, ProbVec([1]), p0)
    if lam < 1 and not t_necessary(x, y, lam):
        return MembershipVerdict(Status.NON_MEMBER, lam)
    best, best_c = p0, None
    for c in _grid_upto(k, D):
        p = max_prob(tensor(x, c), tensor(y, c))
        if p > best:
            best, best_c = p, c
    if best_c is not None and best >= lam:
        return MembershipVerdict(Status.MEMBER, lam, best_c, best)
    return MembershipVerdict(Status.UNKNOWN, lam)


def t_equals_s(y, lam: Number) -> bool:
    """True iff catalysis never helps towards ``y``: ``y_2 = y_n``."""
    _open_lambda(lam)
    y = sort_desc(y)
    return len(y) < 2 or y[1] == y[-1]


def _last_jump(y: ProbVec) -> int:
    # largest m (1-indexed) with y_m > y_{m+1} = ... = y_n
    m = len(y) - 1
    while m >= 1 and y[m - 1] == y[-1]:
        m -= 1
    return m


def separating_mu_interval(y, lam: Number) -> tuple[Fraction, Fraction]:
    """Open interval of admissible ``mu`` for :func:`t_separating_witness`."""
    lam = _open_lambda(lam)
    y = sort_desc(y)
    if t_equals_s(y, lam):
        raise ValueError("y_2 = y_n: T^lambda(y) equals S^lambda(y), no witness exists")
    n, m = len(y), _last_jump(y)
    cap = Fraction(1)
    if y[-1] > 0:
        cap = min(lam * tail_sum(y, m) / ((n - m + 1) * y[-1]), cap)
    return lam, cap


def t_separating_witness(y, lam: Number, mu: Optional[Number] = None) -> ProbVec:
    """A vector in T^lambda(y) that sits on the boundary of S^lambda(y).

    Built as ``(y_i + (1-lam)/(m-1) E_m(y) for i < m, lam E_m(y) - mu E_(m+1)(y),
    mu y_(m+1), ..., mu y_n)``; its conversion probability is exactly ``lam``
    while ``x_n / y_n = mu > lam``.
    """
    lam = _open_lambda(lam)
    y = sort_desc(y)
    lo, hi = separating_mu_interval(y, lam)
    mu = (lo + hi) / 2 if mu is None else as_fraction(mu)
    if not lo < mu < hi:
        raise ValueError(f"mu={mu} must lie in the open interval ({lo}, {hi})")
    n, m = len(y), _last_jump(y)
    em = tail_sum(y, m)
    em1 = tail_sum(y, m + 1)
    bump = (1 - lam) / (m - 1) * em
    x = ProbVec(
        [y[i] + bump for i in range(m - 1)]
        + [lam * em - mu * em1]
        + [mu * y[i] for i in range(m, n)]
    )
    if list(x) != sorted(x, reverse=True) or not x.normalized:
        raise AssertionError(f"witness {x} is not a sorted probability vector")
    if max_prob(x, y) != lam:
        raise AssertionError(f"witness {x} has P = {max_prob(x, y)} != {lam}")
    return x


def decompose_reduce(x, y, lam: Number) -> Optional[Reduction]:
    """Split off the longest common tail with ``x_j = lam * y_j``.

    The split ``x = x' + lam z``, ``y = y' + z`` needs ``max z < max y``, so
    tail entries equal to ``y_1`` are given back.  Membership of ``x`` in
    S^lambda(y) or T^lambda(y) is equivalent to membership of the returned
    ``x_reduced`` in the same set for ``y_reduced`` at level ``lam_prime``.
    """
    lam = _open_lambda(lam)
    x, y = _sorted_pair(x, y)
    n = len(y)
    t = 0
    while t < n and x[n - 1 - t] == lam * y[n - 1 - t]:
        t += 1
    while t > 0 and y[n - t] >= y[0]:
        t -= 1
    if t == 0:
        return None
    z = ProbVec(y[n - t:])
    mu = z.total
    lam_prime = (lam - mu * lam) / (1 - mu * lam)
    x_red = scale(x[: n - t], 1 / (1 - mu * lam))
    y_red = scale(y[: n - t], 1 / (1 - mu))
    return Reduction(x_red, y_red, lam_prime, mu, z)


def t_extreme_points(y, lam: Number) -> list[ProbVec]:
    """Extreme points of T^lambda(y): the distinct permutations of ``y_lambda``."""
    _open_lambda(lam)
    return s_extreme_points(y, lam)


def recompose(red: Reduction, lam: Number) -> tuple[ProbVec, ProbVec]:
    """Inverse of :func:`decompose_reduce`; returns sorted ``(x, y)``."""
    lam = as_fraction(lam)
    x = direct_sum(scale(red.x_reduced, 1 - red.mu * lam), scale(red.z, lam))
    y = direct_sum(scale(red.y_reduced, 1 - red.mu), red.z)
    return sort_desc(x), sort_desc(y)

