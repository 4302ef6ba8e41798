"""Exact rational probability vectors.

Every value is a :class:`fractions.Fraction`.  Decimal strings such as
``"0.35"`` parse to the exact fraction ``7/20``; floats are read through their
shortest ``repr`` so ``0.1`` means ``1/10`` rather than the binary double.
"""
from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from itertools import accumulate
from numbers import Rational
from typing import Iterable, Union

Number = Union[int, Fraction, str, float, Decimal]

__all__ = [
    "ProbVec",
    "as_fraction",
    "vec",
    "pad",
    "sort_desc",
    "tail_sum",
    "tail_sums",
    "is_majorized",
    "is_super_majorized",
    "tensor",
    "direct_sum",
    "y_lambda",
    "scale",
    "mix",
    "normalize",
]


def as_fraction(value: Number) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


class ProbVec(tuple):
    """Immutable vector of nonnegative fractions.

    The vector is not required to sum to one; :attr:`normalized` reports
    whether it does.  Equality is positional, so compare ``v.desc()`` when
    only the multiset matters.
    """

    def __new__(cls, components: Iterable[Number] = ()):
        items = tuple(as_fraction(c) for c in components)
        for c in items:
            if c < 0:
                raise ValueError(f"negative component {c}")
        return super().__new__(cls, items)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def total(self) -> Fraction:
        return sum(self, Fraction(0))

    @property
    def normalized(self) -> bool:
        return self.total == 1

    def desc(self) -> "ProbVec":
        return sort_desc(self)

    def __repr__(self) -> str:
        return "ProbVec(" + ", ".join(str(c) for c in self) + ")"


def vec(*components: Number) -> ProbVec:
    """Shorthand: ``vec("0.6", "0.2", "0.2")`` or ``vec(0.6, 0.2, 0.2)``."""
    if len(components) == 1 and not isinstance(components[0], (str, int, float, Fraction, Decimal)):
        return ProbVec(components[0])
    return ProbVec(components)


def _coerce(v) -> ProbVec:
    return v if isinstance(v, ProbVec) else ProbVec(v)


def pad(x, y) -> tuple[ProbVec, ProbVec]:
    """Zero-pad the shorter of ``x`` and ``y`` so both have equal length."""
    x, y = _coerce(x), _coerce(y)
    n = max(len(x), len(y))
    zero = Fraction(0)
    return (
        ProbVec(tuple(x) + (zero,) * (n - len(x))),
        ProbVec(tuple(y) + (zero,) * (n - len(y))),
    )


def sort_desc(v) -> ProbVec:
    # sorted() is stable under reverse=True, so ties keep their input order
    return ProbVec(sorted(_coerce(v), reverse=True))


def tail_sums(v) -> tuple[Fraction, ...]:
    """``out[l-1] = E_l(v)``: sum of the ``n-l+1`` smallest components."""
    d = sort_desc(v)
    suffix = list(accumulate(reversed(d), initial=Fraction(0)))[1:]
    return tuple(reversed(suffix))


def tail_sum(v, l: int) -> Fraction:
    v = _coerce(v)
    if not 1 <= l <= len(v):
        raise IndexError(f"tail index {l} outside 1..{len(v)}")
    return sum(sort_desc(v)[l - 1:], Fraction(0))


def is_majorized(x, y) -> bool:
    """True iff ``x`` is majorized by ``y`` (Nielsen's criterion)."""
    x, y = _coerce(x), _coerce(y)
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}; pad first")
    if x.total != y.total:
        return False
    px = accumulate(sort_desc(x))
    py = accumulate(sort_desc(y))
    return all(a <= b for a, b in zip(px, py))


def is_super_majorized(x, w) -> bool:
    """True iff every tail sum of ``x`` dominates the matching tail of ``w``."""
    x, w = _coerce(x), _coerce(w)
    if len(x) != len(w):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(w)}; pad first")
    return all(a >= b for a, b in zip(tail_sums(x), tail_sums(w)))


def tensor(x, y) -> ProbVec:
    x, y = _coerce(x), _coerce(y)
    return sort_desc(a * b for a in x for b in y)


def direct_sum(x, y) -> ProbVec:
    return ProbVec(tuple(_coerce(x)) + tuple(_coerce(y)))


def scale(v, factor: Number) -> ProbVec:
    f = as_fraction(factor)
    return ProbVec(f * c for c in _coerce(v))


def normalize(v) -> ProbVec:
    v = _coerce(v)
    total = v.total
    if total == 0:
        raise ValueError("cannot normalize the zero vector")
    return ProbVec(c / total for c in v)


def mix(t: Number, x, y) -> ProbVec:
    """Convex combination ``t*x + (1-t)*y`` (componentwise, same order)."""
    t = as_fraction(t)
    x, y = pad(x, y)
    return ProbVec(t * a + (1 - t) * b for a, b in zip(x, y))


def y_lambda(y, lam: Number) -> ProbVec:
    """The truncated target ``(1 - lam*E_2(y), lam*y_2, ..., lam*y_n)``.

    ``x`` converts to ``y`` with probability at least ``lam`` exactly when
    ``x`` is majorized by this vector.
    """
    lam = as_fraction(lam)
    if not 0 <= lam <= 1:
        raise ValueError(f"lambda={lam} outside [0, 1]")
    d = sort_desc(y)
    if not d.normalized:
        raise ValueError("y_lambda needs a normalized target")
    rest = [lam * c for c in d[1:]]
    return ProbVec([1 - sum(rest, Fraction(0))] + rest)

