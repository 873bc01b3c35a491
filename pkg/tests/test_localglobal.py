import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_obstruction.algebra import ff_construct
from drinfeld_obstruction.cohomology import h1_bruteforce, restrict
from drinfeld_obstruction.groups import (
    GroupError,
    borel_group,
    closure,
    cyclic_subgroups,
    p_sylow,
    prime_basis,
    sl,
    unipotent_group,
    upper_triangular,
)
from drinfeld_obstruction.localglobal import (
    CHEBOTAREV_FLAG,
    DecompositionDatum,
    borel_sigma,
    elliptic_bound,
    elliptic_verify,
    glr_slr_vanishing,
    rank1_vanishing,
    s_dimension,
    s_dimension_borel,
)


def _borel(p, k, order):
    F = ff_construct(p, k)
    lams = [F.from_index(x) for x in prime_basis(F)]
    return borel_group(F, lams, F.element_of_order(order))


def _cyclic_data(Q):
    return [DecompositionDatum(f"c{i}", C) for i, C in enumerate(cyclic_subgroups(Q))]


def test_no_data_gives_h1_and_whole_group_gives_zero():
    G = _borel(5, 2, 3)
    assert s_dimension(G, []).dim_F == h1_bruteforce(G).dim_over_F == 2
    assert s_dimension(G, [DecompositionDatum("G", G)]).dim_F == 0


def test_unipotent_f9_with_all_cyclic_data():
    Q = unipotent_group(ff_construct(3, 2))
    rep = s_dimension(Q, _cyclic_data(Q))
    assert rep.h1_dim_F == 2 and rep.dim_F == 1
    # each order-3 kernel is exactly the intersection
    assert {d for lab, d in rep.per_datum if lab != "c0"} == {1}


def test_datum_must_be_subgroup():
    F = ff_construct(3, 2)
    Q = unipotent_group(F)
    lower = closure(F, 2, [(1, 0, 1, 1)])
    with pytest.raises(GroupError):
        s_dimension(Q, [DecompositionDatum("L", lower)])


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(0, 4)), st.sets(st.integers(0, 4)))
def test_more_data_gives_smaller_s(a, b):
    Q = unipotent_group(ff_construct(3, 2))
    space = h1_bruteforce(Q)
    data = _cyclic_data(Q)
    small = s_dimension(Q, [data[i] for i in sorted(a)], space)
    big = s_dimension(Q, [data[i] for i in sorted(a | b)], space)
    assert big.dim_F <= small.dim_F <= space.dim_over_F
    # the kernel of the larger family lies inside the smaller one
    from drinfeld_obstruction import linalg

    for row in big.kernel:
        assert linalg.in_span(small.kernel, row, 3)


@pytest.mark.parametrize("p,k,order", [(5, 2, 3), (3, 2, 2), (3, 2, 4), (7, 1, 3), (3, 1, 2)])
def test_borel_shortcut_matches_full_data(p, k, order):
    G = _borel(p, k, order)
    Q = p_sylow(G).group
    rep = s_dimension_borel(G, full_data=_cyclic_data(Q))
    assert rep.cross_check["agrees"]
    assert CHEBOTAREV_FLAG in rep.assumptions
    # the kernel at <sigma> bounds S, which is bounded by H^1
    _, sigma = borel_sigma(G)
    space = h1_bruteforce(G)
    ker = restrict(space, closure(G.field, 2, [sigma])).kernel_dim_over_F
    assert rep.dim_F <= ker <= space.dim_over_F


def test_borel_frozen_s_values():
    assert s_dimension_borel(_borel(5, 2, 3)).dim_F == 1
    assert s_dimension_borel(_borel(7, 1, 3)).dim_F == 0
    assert s_dimension_borel(upper_triangular(ff_construct(3))).dim_F == 0


def test_ramified_place_with_p_squared():
    G = _borel(5, 2, 3)
    Q = p_sylow(G).group
    assert s_dimension_borel(G, [DecompositionDatum("Q", Q, ramified=True)]).dim_F == 0
    with pytest.raises(ValueError):
        s_dimension_borel(G, [DecompositionDatum("c", cyclic_subgroups(Q)[1], ramified=True)])


def test_shortcut_rejects_non_borel():
    with pytest.raises(GroupError):
        s_dimension_borel(sl(2, ff_construct(3)))


@pytest.mark.parametrize("q", [(2, 2), (3, 1), (5, 1), (3, 2), (7, 1)])
def test_rank1_vanishing(q):
    rep = rank1_vanishing(ff_construct(*q))
    assert rep.passed and len(rep.checks) >= 2


@pytest.mark.parametrize("q", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_gl_sl_vanishing(q):
    assert glr_slr_vanishing(2, ff_construct(*q)).passed


def test_gl3_vanishing():
    assert glr_slr_vanishing(3, ff_construct(2)).passed


@pytest.mark.parametrize("p,count", [(2, 6), (3, 55), (5, 78)])
def test_elliptic_sweep(p, count):
    rep = elliptic_verify(p)
    assert rep.passed and len(rep.checks) == count


def test_elliptic_bound_branches():
    info = elliptic_bound(upper_triangular(ff_construct(3)))
    assert info["branch"] == "borel" and info["bound"] == 0
    info = elliptic_bound(sl(2, ff_construct(3)))
    assert info["branch"] == "direct" and info["bound"] == 0
    with pytest.raises(ValueError):
        elliptic_verify(7)


def test_report_json_shape():
    Q = unipotent_group(ff_construct(3, 2))
    js = s_dimension(Q, _cyclic_data(Q)).to_json()
    assert js["dim_F"] == 1 and js["dim_Fp"] == 2
    assert len(js["kernel_basis"]) == 2
