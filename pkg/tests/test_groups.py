import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_obstruction.algebra import ff_construct
from drinfeld_obstruction.groups import (
    CapExceeded,
    borel_group,
    classify,
    closure,
    conjugate,
    cyclic_subgroups,
    gl,
    gl_order,
    identity,
    mat_det,
    mat_inv,
    mat_mul,
    p_sylow,
    prime_basis,
    sl,
    sl_part,
    subgroups_up_to,
    unipotent_coordinates,
    unipotent_group,
    upper_triangular,
)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)])
def test_gl_sl_orders(p, k):
    F = ff_construct(p, k)
    q = F.q
    assert gl(2, F).order == gl_order(2, q) == (q * q - 1) * (q * q - q)
    assert sl(2, F).order == q * (q * q - 1)
    assert sl_part(gl(2, F)) == sl(2, F)


def test_gl3_f2():
    F = ff_construct(2)
    assert gl(3, F).order == 168


def test_closure_cap():
    with pytest.raises(CapExceeded) as exc:
        gl(2, ff_construct(5), cap=100)
    assert exc.value.size > 100


matrices_f9 = st.tuples(*[st.integers(0, 8)] * 4)


@settings(max_examples=100, deadline=None)
@given(matrices_f9, matrices_f9)
def test_det_multiplicative_and_inverse(a, b):
    F = ff_construct(3, 2)
    assert mat_det(F, 2, mat_mul(F, 2, a, b)) == F.mul(mat_det(F, 2, a), mat_det(F, 2, b))
    if mat_det(F, 2, a):
        assert mat_mul(F, 2, a, mat_inv(F, 2, a)) == identity(2)


@pytest.mark.parametrize("q,kind", [(2, 2), (3, 4), (4, 4), (5, 4), (9, 4)])
def test_classify_full_sl2(q, kind):
    from drinfeld_obstruction.groups import field_of

    assert classify(sl(2, field_of(q))).kind == kind


def test_classify_types():
    F4 = ff_construct(2, 2)
    w = F4.element_of_order(3).index
    D6 = closure(F4, 2, [(0, 1, 1, 0), (w, 0, 0, F4.inv(w))])
    t = classify(D6)
    assert t.kind == 2 and t.params["n"] == 3
    assert classify(unipotent_group(ff_construct(3, 2))).kind == 6
    # a cyclic group of order prime to p
    F5 = ff_construct(5)
    assert classify(closure(F5, 2, [(2, 0, 0, 3)])).kind == 1
    # trivial group
    assert classify(closure(F5, 2, [identity(2)])).kind == 1


def test_classify_a5_in_char_3():
    # Sl_2(F_9) contains 2.A_5 (order 120); take it as the preimage of an A_5 found by search
    F9 = ff_construct(3, 2)
    S = sl(2, F9)
    hits = [H for H in _subgroups_of_order(S, 120)]
    assert hits, "Sl2(F9) should contain a subgroup of order 120"
    assert classify(hits[0]).kind == 3


def _subgroups_of_order(S, n):
    # two elements of orders 3 and 5 (or 4 and 5) generate 2.A_5 inside Sl_2(F_9)
    orders = S.element_orders
    fives = [g for g, o in zip(S.elements, orders) if o == 5][:4]
    threes = [g for g, o in zip(S.elements, orders) if o == 3]
    for a in fives:
        for b in threes:
            H = closure(S.field, 2, [a, b], cap=1000)
            if H.order == n:
                yield H
                return


def test_sylow():
    S = sl(2, ff_construct(3))
    syl3 = p_sylow(S)
    assert syl3.group.order == 3 and not syl3.normal
    syl2 = p_sylow(S, 2)
    assert syl2.group.order == 8 and syl2.normal
    B = borel_group(ff_construct(5, 2), None, ff_construct(5, 2).element_of_order(3))
    sb = p_sylow(B)
    assert sb.group.order == 25 and sb.normal


def test_unipotent_coordinates():
    F = ff_construct(3)
    Q = closure(F, 2, [(1, 0, 1, 1)])  # lower triangular
    C, lams = unipotent_coordinates(Q)
    assert [x.index for x in lams] == [1]
    conj = {conjugate(F, 2, g, C) for g in Q.elements}
    assert all(g[0] == 1 and g[2] == 0 and g[3] == 1 for g in conj)
    F9 = ff_construct(3, 2)
    _, lams = unipotent_coordinates(unipotent_group(F9))
    assert len(lams) == 2


@pytest.mark.parametrize("p,count", [(2, 6), (3, 55)])
def test_subgroup_counts(p, count):
    # |Sub(S_3)| = 6, |Sub(Gl_2(F_3))| = 55 (standard tables)
    subs = subgroups_up_to(gl(2, ff_construct(p)), 3)
    assert len(subs) == count
    assert len({H.key() for H in subs}) == count


def test_cyclic_subgroups_of_unipotent():
    Q = unipotent_group(ff_construct(3, 2))
    cyc = cyclic_subgroups(Q)
    # trivial + (9 - 1)/2 subgroups of order 3
    assert sorted(C.order for C in cyc) == [1] + [3] * 4


def test_upper_triangular_and_prime_basis():
    F = ff_construct(5)
    assert upper_triangular(F).order == 80
    assert len(prime_basis(ff_construct(2, 3))) == 3
