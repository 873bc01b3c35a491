import itertools

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_obstruction.algebra import ff_construct
from drinfeld_obstruction.constructions import (
    ASCaseInput,
    MooreMatrix,
    as_case_bound,
    example51_report,
    field_determinant,
    fp_independent,
    moore_is_independent,
    reduction_chain_check,
    theorem53_dimension,
)


@pytest.mark.parametrize("q", [3, 4, 5, 9])
def test_newton_example_report(q):
    rep = example51_report(q)
    assert rep.passed, rep.checks
    assert rep.values["ramification_bound"] == q * (q - 1)


@pytest.mark.parametrize("q", [3, 5, 9])
def test_substitution_chain(q):
    rep = reduction_chain_check(q)
    assert rep.passed, rep.checks


def test_substitution_chain_needs_odd_p():
    with pytest.raises(ValueError):
        reduction_chain_check(4)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_chain_step_two_numerically(p):
    # 1 + c1 U + c2 U^(q+1) at U = V + u, minus its value at u, divided by V and
    # multiplied by W^q with W = 1/V, equals (c1 + c2 u^q) W^q + c2 u W + c2
    q = p
    for c1, c2, u, V in itertools.product(range(p), range(1, p), range(p), range(1, p)):
        f = lambda U: (1 + c1 * U + c2 * pow(U, q + 1, p)) % p  # noqa: E731
        W = pow(V, -1, p)
        lhs = (f(V + u) - f(u)) * pow(V, -1, p) * pow(W, q, p) % p
        rhs = ((c1 + c2 * pow(u, q, p)) * pow(W, q, p) + c2 * u * W + c2) % p
        assert lhs == rhs


def test_moore_examples():
    F4 = ff_construct(2, 2)
    w = F4.element_of_order(3)
    mm, ok = moore_is_independent([F4.one, w])
    assert ok and mm.determinant() == 1
    assert mm.rows == ((1, w.index), (1, (w * w).index))
    _, ok = moore_is_independent([F4.one, F4.one])
    assert not ok
    _, ok = moore_is_independent([w])
    assert ok
    _, ok = moore_is_independent([F4.zero])
    assert not ok
    with pytest.raises(ValueError):
        moore_is_independent([])


def test_field_determinant_small():
    F = ff_construct(5)
    assert field_determinant(F, [[1, 2], [3, 4]]) == F.from_int(-2)
    assert field_determinant(F, [[0, 1], [1, 0]]) == F.from_int(-1)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (2, 4), (5, 2)]), st.data())
def test_moore_criterion_agrees_with_rank(pk, data):
    F = ff_construct(*pk)
    n = data.draw(st.integers(1, pk[1]))
    betas = [F.from_index(data.draw(st.integers(0, F.q - 1))) for _ in range(n)]
    _, ok = moore_is_independent(betas)
    assert ok == fp_independent(betas)


def test_moore_matrix_rows_are_frobenius_powers():
    F = ff_construct(3, 2)
    mm = MooreMatrix(F, (F.gen.index, 1))
    assert mm.rows[1] == (F.frob(F.gen.index), 1)


@pytest.mark.parametrize("v_f,v_g,bound", [(1, (), 1), (3, (), 1), (0, (), 3), (-2, (1, 2), 3)])
def test_valuation_cases(v_f, v_g, bound):
    assert as_case_bound(ASCaseInput(v_f, v_g), 3) == bound


def test_valuation_case_error():
    with pytest.raises(ValueError):
        as_case_bound(ASCaseInput(-1, (0,)), 3)


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (5, 2), (3, 3)])
def test_construction_dimension(p, k):
    rep = theorem53_dimension(p, k)
    assert rep.dim_F == k - 1
    assert rep.cross_check["kernels_coincide"]


def test_construction_needs_odd_p():
    with pytest.raises(ValueError):
        theorem53_dimension(2, 2)
