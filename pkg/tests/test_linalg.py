import itertools

import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from drinfeld_obstruction import linalg


def brute_nullity(a, p):
    """Count solutions of a x = 0 by enumerating F_p^n."""
    n = a.shape[1]
    count = sum(1 for x in itertools.product(range(p), repeat=n) if not (a @ np.array(x) % p).any())
    return round(np.log(count) / np.log(p))


mats = st.sampled_from([2, 3, 5]).flatmap(
    lambda p: st.tuples(
        st.just(p),
        st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
            lambda c: arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))),
    )
)


@settings(max_examples=150, deadline=None)
@given(mats)
def test_rank_nullity_against_enumeration(data):
    p, a = data
    ns = linalg.nullspace(a, p)
    assert ns.shape[0] == brute_nullity(a, p)
    assert linalg.rank(a, p) + ns.shape[0] == a.shape[1]
    assert not (a @ ns.T % p).any()


@settings(max_examples=100, deadline=None)
@given(mats, st.data())
def test_solve(data, draw):
    p, a = data
    x = np.array(draw.draw(st.lists(st.integers(0, p - 1), min_size=a.shape[1], max_size=a.shape[1])))
    b = a @ x % p
    sol = linalg.solve(a, b, p)
    assert sol is not None and np.array_equal(a @ sol % p, b)


def test_solve_inconsistent():
    assert linalg.solve([[1, 0], [1, 0]], [0, 1], 3) is None


@settings(max_examples=80, deadline=None)
@given(mats, mats)
def test_intersection_dimension(d1, d2):
    p, a = d1
    _, b = d2
    b = b % p
    n = a.shape[1]
    b = np.resize(b, (b.shape[0], n)) % p
    inter = linalg.intersect(a, b, p, n)
    dim = linalg.rank(a, p) + linalg.rank(b, p) - linalg.rank(np.vstack([a, b]), p)
    assert inter.shape[0] == dim
    for row in inter:
        assert linalg.in_span(a, row, p) and linalg.in_span(b, row, p)


def test_complement_and_accumulator():
    p = 3
    amb = np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    sub = np.array([[1, 1, 0]])
    comp = linalg.complement_in(sub, amb, p)
    assert comp.shape[0] == 1
    assert linalg.same_span(np.vstack([sub, comp]), amb, p)
    acc = linalg.RowSpaceAccumulator(3, p)
    acc.add(amb[:2])
    acc.add(amb[2:])
    assert acc.rank == 2
