"""Partial catalysts: direct test, combinatorial characterization, construction.

A strictly positive vector ``c`` is a partial catalyst for ``x -> y`` when
``P(x (x) c -> y (x) c) > P(x -> y)``.  The combinatorial test in
:func:`pcon_predicate` depends on ``x`` only through the critical set.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from .ratvec import Number, ProbVec, as_fraction, normalize, pad, sort_desc, tensor
from .transform import CriticalSet, critical_set, max_prob

__all__ = [
    "PreconditionError",
    "CatalystVerdict",
    "is_partial_catalyst",
    "iter_tuples",
    "conds_hold",
    "pcon_holds",
    "pcon_predicate",
    "partial_catalyst_exists",
    "construct_geometric_catalyst",
    "two_dim_interval",
    "factor_to_two_dim",
    "necessary_ratio_bounds",
]


class PreconditionError(ValueError):
    """Raised when a theorem's hypothesis does not hold for the given input."""


@dataclass(frozen=True)
class CatalystVerdict:
    is_partial: bool
    p_without: Fraction
    p_with: Optional[Fraction] = None
    blocking_tuple: Optional[tuple[int, ...]] = None


def _check_catalyst(c) -> ProbVec:
    c = ProbVec(c)
    if not c or any(ci <= 0 for ci in c):
        raise ValueError(f"catalyst must be strictly positive, got {c}")
    return c


def is_partial_catalyst(x, y, c) -> CatalystVerdict:
    """Direct route: evaluate both probabilities and compare."""
    c = _check_catalyst(c)
    x, y = pad(x, y)
    before = max_prob(x, y)
    after = max_prob(tensor(x, c), tensor(y, c))
    return CatalystVerdict(after > before, before, after)


def iter_tuples(L: Iterable[int], n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing k-tuples over ``L`` and ``n+1`` whose last entry is in ``L``.

    Tuples come out in lexicographically decreasing order.
    """
    values = sorted(set(L) | {n + 1}, reverse=True)
    for r in combinations_with_replacement(values, k):
        if r[-1] != n + 1:
            yield r


def _y(y: Sequence[Fraction], idx: int) -> Optional[Fraction]:
    # 1-indexed lookup; None marks the meaningless y_{n+1}
    return None if idx == len(y) + 1 else y[idx - 1]


def conds_hold(y: Sequence[Fraction], c: Sequence[Fraction], r: Sequence[int]) -> bool:
    """Band condition: for all i > j, ``y[r_j]/y[r_i - 1] <= c_i/c_j <= y[r_j - 1]/y[r_i]``.

    A bound that mentions ``y_{n+1}`` counts as satisfied.
    """
    k = len(c)
    for i in range(1, k):
        for j in range(i):
            ri, rj = r[i], r[j]
            lo_num, lo_den = _y(y, rj), _y(y, ri - 1)
            hi_num, hi_den = _y(y, rj - 1), _y(y, ri)
            # compare c_i/c_j against num/den by cross-multiplication
            if lo_num is not None and lo_den is not None:
                if not lo_num * c[j] <= c[i] * lo_den:
                    return False
            if hi_num is not None and hi_den is not None:
                if not c[i] * hi_den <= hi_num * c[j]:
                    return False
    return True


def pcon_holds(y: Sequence[Fraction], c: Sequence[Fraction], r: Sequence[int]) -> bool:
    """Some pair i > j has ``c_i/c_j < y[r_j]/y[r_i-1]`` or ``c_i/c_j > y[r_j-1]/y[r_i]``.

    A disjunct that mentions ``y_{n+1}`` counts as violated.
    """
    k = len(c)
    for i in range(1, k):
        for j in range(i):
            ri, rj = r[i], r[j]
            lo_num, lo_den = _y(y, rj), _y(y, ri - 1)
            hi_num, hi_den = _y(y, rj - 1), _y(y, ri)
            if lo_num is not None and lo_den is not None and c[i] * lo_den < lo_num * c[j]:
                return True
            if hi_num is not None and hi_den is not None and c[i] * hi_den > hi_num * c[j]:
                return True
    return False


def _theorem_inputs(x, y) -> tuple[ProbVec, ProbVec, CriticalSet]:
    x, y = pad(x, y)
    x, y = sort_desc(x), sort_desc(y)
    if any(v == 0 for v in y):
        raise PreconditionError("target has zero components; use is_partial_catalyst")
    cs = critical_set(x, y)
    if not cs.hypothesis:
        raise PreconditionError(
            f"P(x->y)={cs.p_star} is not below min(x_n/y_n, 1); no partial catalyst exists"
        )
    return x, y, cs


def pcon_predicate(x, y, c) -> CatalystVerdict:
    """Combinatorial route: ``c`` is a partial catalyst iff no tuple satisfies the band.

    The first tuple (lexicographically decreasing) that satisfies the band is
    returned as ``blocking_tuple``.  ``p_with`` is left unset on purpose.
    """
    c = sort_desc(_check_catalyst(c))
    x, y, cs = _theorem_inputs(x, y)
    for r in iter_tuples(cs.indices, cs.n, len(c)):
        if conds_hold(y, c, r):
            return CatalystVerdict(False, cs.p_star, None, r)
    return CatalystVerdict(True, cs.p_star)


def partial_catalyst_exists(x, y) -> bool:
    cs = critical_set(x, y)
    return cs.hypothesis


def construct_geometric_catalyst(x, y, alpha: Optional[Number] = None) -> ProbVec:
    """Normalized ``(1, a, a^2, ..., a^(k-1))`` that is a partial catalyst.

    ``alpha`` must lie strictly between ``y_n / y_lmax`` and 1; by default the
    midpoint of that interval is used.  ``k`` is the least integer with
    ``alpha^(k-1) < y_lmax / y_(lmin-1)``.
    """
    x, y, cs = _theorem_inputs(x, y)
    n = cs.n
    lo = y[n - 1] / y[cs.l_max - 1]
    a = (1 + lo) / 2 if alpha is None else as_fraction(alpha)
    if not lo < a < 1:
        raise ValueError(f"alpha={a} must lie in the open interval ({lo}, 1)")
    gamma = y[cs.l_max - 1] / y[cs.l_min - 2]
    k, power = 2, a
    while not power < gamma:
        k += 1
        power *= a
    c = normalize([a ** e for e in range(k)])
    if not is_partial_catalyst(x, y, c).is_partial:
        raise AssertionError(f"geometric construction failed for alpha={a}, k={k}")
    return c


def two_dim_interval(x, y) -> Optional[tuple[Fraction, Fraction]]:
    """Open interval of ratios ``c_2/c_1`` giving a 2-dim partial catalyst.

    Only defined when the critical set is a single index; ``None`` means no
    two-dimensional partial catalyst exists.
    """
    x, y, cs = _theorem_inputs(x, y)
    if len(cs) != 1:
        raise ValueError(f"critical set {cs.indices} is not a singleton")
    (l,) = cs.indices
    lo = y[-1] / y[l - 1]
    hi = y[l - 1] / y[l - 2]
    return (lo, hi) if lo < hi else None


def factor_to_two_dim(k: int, alpha: Number) -> list[ProbVec]:
    """Two-dimensional factors whose tensor product is a geometric catalyst.

    The factors are ``(1, a^(2^t))`` for t = 0..m, normalized; their product is
    the geometric vector with ``2^(m+1)`` components, where ``2^(m+1)`` is the
    least power of two that is at least ``k``.  ``k = 1`` gives no factors.
    """
    a = as_fraction(alpha)
    if not 0 < a < 1:
        raise ValueError(f"alpha={a} must lie in (0, 1)")
    if k < 1:
        raise ValueError("k must be positive")
    count = (k - 1).bit_length()
    return [normalize([1, a ** (2 ** t)]) for t in range(count)]


def necessary_ratio_bounds(y, L) -> tuple[Fraction, Fraction]:
    """``(max y_n/y_l, min y_l/y_(l-1))`` over ``l`` in ``L``.

    Every partial catalyst has ``c_k/c_(k-1)`` above the first value and
    ``c_k/c_1`` below the second.
    """
    indices = tuple(L.indices if isinstance(L, CriticalSet) else L)
    if not indices:
        raise ValueError("critical set is empty")
    y = sort_desc(y)
    lower = max(y[-1] / y[l - 1] for l in indices)
    upper = min(y[l - 1] / y[l - 2] for l in indices)
    return lower, upper
