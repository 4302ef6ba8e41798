import random
from fractions import Fraction as F

import pytest

from partcat.catalysis import (
    PreconditionError,
    construct_geometric_catalyst,
    is_partial_catalyst,
    partial_catalyst_exists,
    pcon_predicate,
    two_dim_interval,
)
from partcat.ratvec import normalize, tensor, vec
from partcat.search import (
    ConstraintGraph,
    Infeasible,
    RatioConstraint,
    best_prob_at_dim,
    decide_k_dim,
    enumerate_tuples,
    feasible_point,
    grid_oracle,
    grid_points,
    min_catalyst_dimension,
    sol_disjuncts,
)
from partcat.transform import critical_set, max_prob

from conftest import random_composition

X = vec("0.6", "0.2", "0.2")
Y1 = vec("0.5", "0.4", "0.1")
Y2 = vec("0.5", "0.3", "0.2")


@pytest.mark.parametrize(
    "L, n, k, expected",
    [
        ((2,), 3, 2, [(4, 2), (2, 2)]),
        ((2,), 3, 3, [(4, 4, 2), (4, 2, 2), (2, 2, 2)]),
        ((2, 3), 4, 2, [(5, 3), (5, 2), (3, 3), (3, 2), (2, 2)]),
    ],
)
def test_enumerate_tuples_examples(L, n, k, expected):
    assert enumerate_tuples(L, n, k) == expected


def test_enumerate_tuples_errors():
    with pytest.raises(ValueError):
        enumerate_tuples((), 3, 2)
    with pytest.raises(ValueError):
        enumerate_tuples((2,), 3, 1)


@pytest.mark.parametrize("L", [(2,), (2, 3), (2, 4), (2, 3, 4), (3, 4, 5)])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_tuple_count_bound(L, k):
    n = max(L) + 1
    tuples = enumerate_tuples(L, n, k)
    assert len(tuples) < (len(L) + 1) ** k
    assert len(set(tuples)) == len(tuples)
    for r in tuples:
        assert list(r) == sorted(r, reverse=True) and r[-1] != n + 1
        assert set(r) <= set(L) | {n + 1}


def _graph(k, *constraints):
    g = ConstraintGraph(k)
    for c in constraints:
        g.add_ratio(c)
    return g


def test_feasible_point_examples():
    g = _graph(2, RatioConstraint(2, 1, "lt", F(4, 5)))
    c = feasible_point(g)
    assert c is not None and g.satisfied_by(c) and c[1] / c[0] < F(4, 5)

    g = _graph(2, RatioConstraint(2, 1, "lt", F(1, 4)), RatioConstraint(2, 1, "gt", F(4, 5)))
    assert feasible_point(g) is None
    cert = g.solve()
    assert isinstance(cert, Infeasible)
    assert cert.product < 1 or (cert.product == 1 and cert.strict_edges > 0)

    chain = [
        RatioConstraint(2, 1, "gt", F(2, 3)),
        RatioConstraint(3, 2, "gt", F(2, 3)),
        RatioConstraint(3, 1, "lt", F(3, 5)),
    ]
    g = _graph(3, *chain)
    c = feasible_point(g)
    assert c is not None and all(rc.holds(c) for rc in chain)
    assert all(rc.holds([1, F(7, 10), F(56, 100)]) for rc in chain)


def test_equal_product_cycle_with_strict_edge_is_infeasible():
    # c2/c1 < 1/2 and c2/c1 > 1/2
    g = _graph(2, RatioConstraint(2, 1, "lt", F(1, 2)), RatioConstraint(2, 1, "gt", F(1, 2)))
    cert = g.solve()
    assert isinstance(cert, Infeasible) and cert.product == 1 and cert.strict_edges == 2
    # c1 < c2 contradicts monotonicity
    g = ConstraintGraph(2)
    g.add(1, 0, F(1), True)
    assert feasible_point(g) is None


def _cycle_product(g, cycle):
    # every consecutive pair of the certificate must be joined by an edge
    prod = F(1)
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        ws = [w for s, d, w, _ in g.edges if s == a and d == b]
        assert ws
        prod *= min(ws)
    return prod


@pytest.mark.parametrize("seed", range(20))
def test_random_systems_certified(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 5)
    g = ConstraintGraph(k, monotone=rng.random() < 0.5)
    for _ in range(rng.randint(1, 3 * k)):
        i, j = rng.sample(range(1, k + 1), 2)
        g.add_ratio(RatioConstraint(i, j, rng.choice(["lt", "gt"]), F(rng.randint(1, 9), rng.randint(1, 9))))
    out = g.solve()
    if isinstance(out, Infeasible):
        assert out.product < 1 or (out.product == 1 and out.strict_edges > 0)
        assert _cycle_product(g, list(out.cycle)) <= out.product
    else:
        assert all(v > 0 for v in out) and g.satisfied_by(out)


def test_decide_k_dim_examples():
    res = decide_k_dim(X, Y1, 2)
    assert res.exists and res.dimension == 2
    lo, hi = two_dim_interval(X, Y1)
    assert lo < res.witness[1] / res.witness[0] < hi
    assert is_partial_catalyst(X, Y1, res.witness).is_partial
    assert len(res.selections) == len(enumerate_tuples(critical_set(X, Y1), 3, 2))
    assert not decide_k_dim(X, Y2, 2).exists
    res = decide_k_dim(X, Y2, 3)
    assert res.exists and is_partial_catalyst(X, Y2, res.witness).is_partial
    with pytest.raises(PreconditionError):
        decide_k_dim(Y1, Y1, 2)


def test_selections_are_satisfied_disjuncts():
    res = decide_k_dim(X, Y2, 3)
    for r, rc in res.selections.items():
        assert rc in sol_disjuncts(Y2, r)
        assert rc.holds(res.witness)


def test_min_catalyst_dimension_examples():
    assert min_catalyst_dimension(X, Y1).dimension == 2
    res = min_catalyst_dimension(X, Y2)
    assert res.dimension == 3 and res.witness.normalized
    with pytest.raises(PreconditionError):
        min_catalyst_dimension(Y1, Y1)


def test_grid_points():
    pts = list(grid_points(2, 4))
    assert pts == [vec("3/4", "1/4"), vec("1/2", "1/2")]
    assert all(p.normalized and min(p) > 0 for p in grid_points(3, 12))
    assert len(list(grid_points(3, 6))) == 3


def test_grid_oracle_examples():
    lo, hi = F(1, 4), F(4, 5)
    accepted = grid_oracle(X, Y1, 2, 20)
    expected = [c for c in grid_points(2, 20) if lo < c[1] / c[0] < hi]
    assert accepted == expected and accepted
    for D in (4, 10, 24, 40):
        assert grid_oracle(X, Y2, 2, D) == []
    # uniform never helps
    assert normalize([1, 1]) not in grid_oracle(X, Y1, 2, 4)
    with pytest.raises(ValueError):
        grid_oracle(X, Y1, 3, 2)


def test_best_prob_at_dim_examples():
    p, c = best_prob_at_dim(X, Y1, 2, 100)
    assert p >= F(122, 135)
    assert p == max_prob(tensor(X, c), tensor(Y1, c))
    assert best_prob_at_dim(X, Y1, 1, 1) == (F(4, 5), vec(1))
    assert best_prob_at_dim(Y1, Y1, 2, 10) == (1, vec(1))
    p20, c20 = best_prob_at_dim(X, Y1, 2, 20)
    assert (p20, c20) == (F(122, 135), vec("13/20", "7/20"))


def _random_instance(rng, n_max=4, denom=20):
    while True:
        n = rng.randint(3, n_max)
        x = random_composition(rng, denom, n)
        y = random_composition(rng, denom, n)
        if partial_catalyst_exists(x, y):
            return x, y


@pytest.mark.parametrize("seed", range(5))
def test_search_complete_against_grid(seed):
    rng = random.Random(1000 + seed)
    for _ in range(12):
        x, y = _random_instance(rng)
        k = rng.randint(2, 3)
        res = decide_k_dim(x, y, k)
        grid = grid_oracle(x, y, k, 24)
        if grid:
            assert res.exists
        if res.exists:
            assert is_partial_catalyst(x, y, res.witness).is_partial
        else:
            assert grid_oracle(x, y, k, 12) == []


@pytest.mark.parametrize("seed", range(3))
def test_pcon_agrees_on_grid(seed):
    rng = random.Random(2000 + seed)
    x, y = _random_instance(rng)
    for c in grid_points(2, 24):
        assert pcon_predicate(x, y, c).is_partial == is_partial_catalyst(x, y, c).is_partial


@pytest.mark.parametrize("seed", range(4))
def test_min_dimension_within_geometric_bound(seed):
    rng = random.Random(3000 + seed)
    for _ in range(6):
        x, y = _random_instance(rng, n_max=5)
        res = min_catalyst_dimension(x, y)
        assert 2 <= res.dimension <= len(construct_geometric_catalyst(x, y))
        assert is_partial_catalyst(x, y, res.witness).is_partial
        for k in range(2, res.dimension):
            assert not decide_k_dim(x, y, k).exists
