import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_obstruction.algebra import (
    INF,
    FieldError,
    Polynomial,
    RationalFunction,
    ValuationError,
    ff_construct,
    fp_is_irreducible,
    least_irreducible,
    minimal_polynomial,
    parse_field,
    prime_power,
    relative_dimension,
    rf_valuation,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (3, 3)]


def naive_mul(F, a, b):
    """Schoolbook product of coefficient vectors reduced by the modulus; no tables."""
    p, k, mod = F.p, F.k, F.modulus
    x, y = F.digits(a), F.digits(b)
    prod = [0] * (2 * k - 1)
    for i, c in enumerate(x):
        for j, d in enumerate(y):
            prod[i + j] = (prod[i + j] + c * d) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i in range(k + 1):
                prod[deg - k + i] = (prod[deg - k + i] - c * mod[i]) % p
    return F.encode(prod[:k])


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplication_matches_schoolbook(p, k):
    F = ff_construct(p, k)
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == naive_mul(F, a, b)


@pytest.mark.parametrize("p,k", FIELDS)
def test_primitive_element_generates(p, k):
    F = ff_construct(p, k)
    assert F.order_of(F.primitive) == F.q - 1
    assert len({F.pow(F.primitive, e) for e in range(F.q - 1)}) == F.q - 1


def test_default_moduli():
    assert ff_construct(3, 2).modulus == (1, 0, 1)
    assert ff_construct(2, 3).modulus == (1, 1, 0, 1)
    assert ff_construct(5, 2).modulus == (2, 0, 1)
    assert ff_construct(3, 3).modulus == (1, 2, 0, 1)


def test_least_irreducible_is_irreducible():
    for p, k in FIELDS:
        assert fp_is_irreducible(least_irreducible(p, k), p)


def test_parse_field_and_errors():
    F = parse_field("p=3,k=2,mod=x^2+2*x+2")
    assert F.modulus == (2, 2, 1)
    with pytest.raises(FieldError):
        parse_field("k=2")
    with pytest.raises(FieldError):
        parse_field("p=3,z=1")
    with pytest.raises(ValueError):
        ff_construct(3, 2, "x^2+2")  # reducible: (x+1)(x+2)
    with pytest.raises(ValueError):
        prime_power(12)


field_and_elems = st.sampled_from(FIELDS).flatmap(
    lambda pk: st.tuples(
        st.just(ff_construct(*pk)),
        st.integers(0, pk[0] ** pk[1] - 1),
        st.integers(0, pk[0] ** pk[1] - 1),
        st.integers(0, pk[0] ** pk[1] - 1),
    )
)


@settings(max_examples=200, deadline=None)
@given(field_and_elems)
def test_field_axioms(data):
    F, a, b, c = data
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
    # Frobenius is additive and multiplicative
    assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    assert F.frob(a, F.k) == a


@settings(max_examples=100, deadline=None)
@given(field_and_elems)
def test_fq_element_operators(data):
    F, a, b, _ = data
    x, y = F.from_index(a), F.from_index(b)
    assert (x + y).index == F.add(a, b)
    assert (x * y).index == F.mul(a, b)
    assert (x - y + y) == x
    if b:
        assert (x / y) * y == x


def test_integer_embedding_and_coefficients():
    F = ff_construct(3, 2)
    assert F(5).index == 2  # 5 -> 2 in F_3
    assert F([0, 1]) == F.gen
    assert F.gen * F.gen == F(2)  # x^2 = -1


def test_minimal_polynomial_and_relative_dimension():
    F = ff_construct(3, 2)
    assert minimal_polynomial(F.gen).coeffs == (1, 0, 1)
    assert relative_dimension(F(2), F) == 2
    assert relative_dimension(F.gen, F) == 1
    F27 = ff_construct(3, 3)
    a = F27.element_of_order(13)
    assert minimal_polynomial(a).degree == 3


def test_polynomial_arithmetic():
    F = ff_construct(3)
    f = Polynomial(F, [1, 1])  # t + 1
    g = Polynomial(F, [2, 0, 1])  # t^2 + 2 = (t+1)(t+2)
    q, r = divmod(g, f)
    assert r.is_zero() and q == Polynomial(F, [2, 1])
    assert g.gcd(f) == f
    assert (f**3) == f.frobenius_power(3)
    assert g.derivative() == Polynomial(F, [0, 2])
    assert not g.is_irreducible() and Polynomial(F, [1, 0, 1]).is_irreducible()
    assert (f * f * g).multiplicity(f) == 3


def test_rational_function_canonical_form():
    F = ff_construct(5)
    t = RationalFunction.t(F)
    f = (t * t - 1) / (2 * t - 2)
    assert f.den.is_monic()
    assert f == (t + 1) / 2
    assert f.frobenius_power(5) == f**5


def test_valuations():
    F = ff_construct(3)
    t = RationalFunction.t(F)
    pi = Polynomial(F, [0, 1])
    f = t**3 / (t + 1)
    assert rf_valuation(f, pi) == 3
    assert rf_valuation(f, INF) == -2
    assert rf_valuation(1 / t, pi) == -1
    with pytest.raises(ValuationError):
        rf_valuation(t - t, pi)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=4), st.lists(st.integers(0, 2), min_size=1, max_size=4))
def test_valuation_is_additive(a, b):
    F = ff_construct(3)
    fa, fb = Polynomial(F, a), Polynomial(F, b)
    if fa.is_zero() or fb.is_zero():
        return
    x, y = RationalFunction(fa), RationalFunction(fb)
    for place in (Polynomial(F, [0, 1]), Polynomial(F, [1, 1]), INF):
        assert rf_valuation(x * y, place) == rf_valuation(x, place) + rf_valuation(y, place)
        assert rf_valuation(x / y, place) == rf_valuation(x, place) - rf_valuation(y, place)
