from fractions import Fraction as F

from hypothesis import given, strategies as st

from partcat.hull import convex_weights, in_convex_hull, is_extreme

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
small = st.fractions(min_value=-3, max_value=3, max_denominator=6)
points2 = st.lists(st.tuples(small, small), min_size=1, max_size=6)


def test_square():
    assert in_convex_hull((F(1, 2), F(1, 2)), SQUARE)
    assert in_convex_hull((1, 0), SQUARE)
    assert not in_convex_hull((F(3, 2), F(1, 2)), SQUARE)
    assert not in_convex_hull((0, 0), [])
    w = convex_weights((F(1, 4), F(3, 4)), SQUARE)
    assert sum(w) == 1 and all(v >= 0 for v in w)
    assert tuple(sum(a * q[d] for a, q in zip(w, SQUARE)) for d in range(2)) == (F(1, 4), F(3, 4))


def test_extreme():
    for i, p in enumerate(SQUARE):
        assert is_extreme(p, SQUARE[:i] + SQUARE[i + 1:])
        assert is_extreme(p, SQUARE)
    assert not is_extreme((F(1, 2), 0), SQUARE)
    # collinear middle point
    assert not is_extreme((1, 1), [(0, 0), (2, 2)])


@given(points2, st.lists(st.fractions(min_value=0, max_value=1, max_denominator=8), min_size=6, max_size=6))
def test_combinations_are_inside(pts, raw):
    ws = raw[: len(pts)]
    if sum(ws) == 0:
        return
    ws = [w / sum(ws) for w in ws]
    p = tuple(sum(w * q[d] for w, q in zip(ws, pts)) for d in range(2))
    w = convex_weights(p, pts)
    assert w is not None
    assert tuple(sum(a * q[d] for a, q in zip(w, pts)) for d in range(2)) == p


@given(points2, st.tuples(small, small))
def test_separated_points_are_outside(pts, direction):
    if direction == (0, 0):
        return
    top = max(direction[0] * q[0] + direction[1] * q[1] for q in pts)
    # step beyond the supporting line
    far = tuple(q + d for q, d in zip(max(pts, key=lambda q: direction[0] * q[0] + direction[1] * q[1]), direction))
    assert direction[0] * far[0] + direction[1] * far[1] > top
    assert not in_convex_hull(far, pts)
