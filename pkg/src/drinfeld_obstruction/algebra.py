"""Exact arithmetic: F_p, F_{p^k}, polynomials over them, and F_q(t) with valuations.

Field elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` are the
coefficients of the representative polynomial in the field generator ``x``.
The integer encoding is what the matrix-group and cohomology code works with;
:class:`FqElement` is the user-facing wrapper.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


class FieldError(ValueError):
    pass


class ValuationError(ArithmeticError):
    """Raised when asking for the valuation of the zero function."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raises if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


# -- dense polynomials over F_p, lists low -> high, used for moduli ------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _fp_trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _fp_trim(a)
    return a


def _monic_polys(p: int, d: int) -> Iterable[list[int]]:
    """Monic degree-d polynomials over F_p in increasing integer encoding."""
    for n in range(p**d):
        low = [(n // p**i) % p for i in range(d)]
        yield low + [1]


def fp_is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _fp_trim([c % p for c in poly])
    d = len(poly) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for f in _monic_polys(p, e):
            if not _fp_mod(poly, f, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically least monic irreducible of degree k over F_p.

    Candidates are ordered by the integer ``sum(a_i p^i)`` of their lower
    coefficients, so higher-degree coefficients dominate the comparison.
    """
    if k == 1:
        return [0, 1]
    for f in _monic_polys(p, k):
        if fp_is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


def parse_fp_poly(text: str, p: int, var: str = "x") -> list[int]:
    """Parse e.g. ``"x^2+2*x+1"`` into a coefficient list over F_p."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise FieldError("empty polynomial")
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            head = head.rstrip("*")
            c = int(head) if head else 1
            e = int(tail[1:]) if tail.startswith("^") else 1
            if tail and not tail.startswith("^"):
                raise FieldError(f"cannot parse term {term!r}")
        else:
            c, e = int(term), 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
    deg = max(coeffs)
    return [coeffs.get(i, 0) % p for i in range(deg + 1)]


def format_fp_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"


class FiniteField:
    """The field F_{p^k} = F_p[x]/(modulus).

    Arithmetic on integer encodings goes through ``add``/``mul``/... which use
    log/antilog tables (and a full addition table for small fields).
    """

    ADD_TABLE_LIMIT = 1024

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        if modulus is None:
            modulus = least_irreducible(p, k)
        modulus = [int(c) % p for c in modulus]
        _fp_trim(modulus)
        if len(modulus) - 1 != k:
            raise FieldError(f"modulus has degree {len(modulus) - 1}, expected {k}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not fp_is_irreducible(modulus, p):
            raise FieldError(f"modulus {format_fp_poly(modulus)} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        self._digits = [tuple((n // p**i) % p for i in range(k)) for n in range(self.q)]
        self._build_tables()

    # -- construction helpers ------------------------------------------------
    def _encode(self, coeffs: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _slow_mul(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._encode(_fp_mod(prod, self.modulus, self.p))

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        n = q - 1
        gen = None
        for g in range(2 if q > 2 else 1, q):
            powers, x = [1], g
            while x != 1:
                powers.append(x)
                x = self._slow_mul(x, g)
            if len(powers) == n:
                gen = g
                exp = powers
                break
        if gen is None:  # pragma: no cover - F_2 handled by the loop start
            raise FieldError("no primitive element found")
        self.primitive = gen
        self._exp = exp + exp  # doubled to avoid a modulo in mul
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i
        self._neg = [self._encode([-c for c in self._digits[a]]) for a in range(q)]
        if self.k == 1:
            self.add = self._add_prime
            self.sub = self._sub_prime
        elif q <= self.ADD_TABLE_LIMIT:
            table = [[0] * q for _ in range(q)]
            for a in range(q):
                da = self._digits[a]
                row = table[a]
                for b in range(q):
                    row[b] = self._encode([x + y for x, y in zip(da, self._digits[b])])
            self._add_table = table
            self.add = self._add_table_lookup
            self.sub = self._sub_table_lookup
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits

    # -- arithmetic on encodings --------------------------------------------
    def _add_prime(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def _sub_prime(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def _add_table_lookup(self, a: int, b: int) -> int:
        return self._add_table[a][b]

    def _sub_table_lookup(self, a: int, b: int) -> int:
        return self._add_table[a][self._neg[b]]

    def _add_digits(self, a: int, b: int) -> int:
        return self._encode([x + y for x, y in zip(self._digits[a], self._digits[b])])

    def _sub_digits(self, a: int, b: int) -> int:
        return self._encode([x - y for x, y in zip(self._digits[a], self._digits[b])])

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frob(self, a: int, j: int = 1) -> int:
        """a^(p^j)."""
        return self.pow(a, pow(self.p, j % self.k, self.q - 1) if self.q > 2 else 1)

    def log(self, a: int) -> int:
        return self._log[a]

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero encoding."""
        from math import gcd

        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.q - 1
        return n // gcd(n, self._log[a])

    def from_int(self, n: int) -> int:
        return n % self.p

    def digits(self, a: int) -> tuple[int, ...]:
        return self._digits[a]

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            coeffs = _fp_mod(list(coeffs), self.modulus, self.p)
        return self._encode(coeffs)

    def in_subfield(self, a: int, d: int) -> bool:
        """True iff a lies in the subfield F_{p^d} (d must divide k)."""
        return self.pow(a, self.p**d) == a

    # -- F_p-linear structure ----------------------------------------------
    @lru_cache(maxsize=None)
    def mult_matrix(self, a: int) -> np.ndarray:
        """k x k matrix over F_p of multiplication by a on the basis 1, x, ..."""
        cols = []
        for j in range(self.k):
            xj = self._encode([0] * j + [1]) if j < self.k else 0
            cols.append(self._digits[self.mul(a, xj)])
        m = np.array(cols, dtype=np.int64).T
        m.setflags(write=False)
        return m

    # -- user-facing ----------------------------------------------------------
    def __call__(self, value: int | Sequence[int] | FqElement) -> FqElement:
        """Ints embed via Z -> F_p; sequences are coefficient lists."""
        if isinstance(value, FqElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FqElement(self, int(value) % self.p)
        return FqElement(self, self.encode([int(c) for c in value]))

    def from_index(self, index: int) -> FqElement:
        if not 0 <= index < self.q:
            raise FieldError(f"encoding {index} out of range for F_{self.q}")
        return FqElement(self, index)

    @property
    def gen(self) -> FqElement:
        """The class of x."""
        if self.k == 1:
            return FqElement(self, (-self.modulus[0]) % self.p)
        return FqElement(self, self.encode([0, 1]))

    @property
    def zero(self) -> FqElement:
        return FqElement(self, 0)

    @property
    def one(self) -> FqElement:
        return FqElement(self, 1)

    def elements(self) -> list[FqElement]:
        return [FqElement(self, i) for i in range(self.q)]

    def element_of_order(self, n: int) -> FqElement:
        if (self.q - 1) % n:
            raise FieldError(f"F_{self.q}* has no element of order {n}")
        return FqElement(self, self._exp[(self.q - 1) // n])

    def descriptor(self) -> str:
        return f"p={self.p},k={self.k},mod={format_fp_poly(self.modulus)}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"FiniteField(F_{self.p})"
        return f"FiniteField(F_{self.q} = F_{self.p}[x]/({format_fp_poly(self.modulus)}))"


def ff_construct(p: int, k: int = 1, modulus: Sequence[int] | str | None = None) -> FiniteField:
    if isinstance(modulus, str):
        modulus = parse_fp_poly(modulus, p)
    return _cached_field(p, k, tuple(modulus) if modulus is not None else None)


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int, modulus: tuple[int, ...] | None) -> FiniteField:
    return FiniteField(p, k, modulus)


def parse_field(descriptor: str) -> FiniteField:
    """Parse ``"p=3,k=2,mod=x^2+1"`` (k and mod optional)."""
    parts = {}
    for item in descriptor.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise FieldError(f"bad field descriptor item {item!r}")
        parts[key.strip()] = value.strip()
    if "p" not in parts:
        raise FieldError("field descriptor needs p=")
    unknown = set(parts) - {"p", "k", "mod"}
    if unknown:
        raise FieldError(f"unknown field descriptor keys {sorted(unknown)}")
    p = int(parts["p"])
    k = int(parts.get("k", 1))
    return ff_construct(p, k, parts.get("mod"))


class FqElement:
    __slots__ = ("field", "index")

    def __init__(self, field: FiniteField, index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.index)

    def _coerce(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise FieldError("mixed fields")
            return other.index
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FqElement(self.field, self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FqElement(self.field, self.field.sub(self.index, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FqElement(self.field, self.field.sub(o, self.index))

    def __neg__(self):
        return FqElement(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FqElement(self.field, self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FqElement(self.field, self.field.div(self.index, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FqElement(self.field, self.field.div(o, self.index))

    def __pow__(self, e: int):
        return FqElement(self.field, self.field.pow(self.index, e))

    def inverse(self) -> FqElement:
        return FqElement(self.field, self.field.inv(self.index))

    def frobenius(self, j: int = 1) -> FqElement:
        return ff_frobenius(self, j)

    def order(self) -> int:
        return self.field.order_of(self.index)

    def is_zero(self) -> bool:
        return self.index == 0

    def __bool__(self) -> bool:
        return self.index != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FqElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.modulus, self.index))

    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.index)
        return format_fp_poly(self.coeffs)

    def to_json(self):
        return self.index if self.field.k == 1 else list(self.coeffs)


def ff_frobenius(e: FqElement, j: int) -> FqElement:
    """e^(p^j), computed by j successive p-th powers."""
    if j < 0:
        raise ValueError("j must be >= 0")
    F = e.field
    x = e.index
    for _ in range(j % F.k):
        x = F.pow(x, F.p)
    return FqElement(F, x)


# -- polynomials over a finite field ------------------------------------------

class Polynomial:
    """Dense univariate polynomial with coefficients (encodings) in a FiniteField.

    Coefficients run low -> high with no trailing zeros; the zero polynomial has
    an empty coefficient tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_elements(cls, field: FiniteField, elems: Iterable) -> Polynomial:
        return cls(field, [field(e).index for e in elems])

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, coeff: int = 1) -> Polynomial:
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> Polynomial:
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((hash(self.field), self.coeffs))

    def __add__(self, other: Polynomial) -> Polynomial:
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(F, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        F = self.field
        if isinstance(other, int):
            other = Polynomial(F, [F.from_int(other)])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(F, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> Polynomial:
        F = self.field
        return Polynomial(F, [F.mul(c, x) for x in self.coeffs])

    def __pow__(self, e: int) -> Polynomial:
        result = Polynomial(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius_power(self, q: int) -> Polynomial:
        """self^q for q a power of the characteristic, via (sum a_i t^i)^q = sum a_i^q t^(iq)."""
        F = self.field
        if not self.coeffs:
            return self
        out = [0] * (q * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[i * q] = F.pow(c, q)
        return Polynomial(F, out)

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.leading)
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - db
            quot[shift] = c
            for i, bc in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bc))
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(F, quot), Polynomial(F, rem)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def gcd(self, other: Polynomial) -> Polynomial:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> Polynomial:
        F = self.field
        return Polynomial(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def is_irreducible(self) -> bool:
        """Trial division by monic polynomials of degree <= deg/2 (desk scale)."""
        d = self.degree
        if d < 1:
            return False
        if d == 1:
            return True
        F = self.field
        for e in range(1, d // 2 + 1):
            for low in itertools.product(range(F.q), repeat=e):
                if (self % Polynomial(F, list(low) + [1])).is_zero():
                    return False
        return True

    def multiplicity(self, pi: Polynomial) -> int:
        if self.is_zero():
            raise ValuationError("multiplicity in the zero polynomial")
        m, f = 0, self
        while True:
            quo, rem = divmod(f, pi)
            if not rem.is_zero():
                return m
            m, f = m + 1, quo

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self, 't')})"


def format_poly(f: Polynomial, var: str = "t") -> str:
    F = f.field
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        cs = repr(FqElement(F, c))
        if F.k > 1 and "+" in cs:
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{cs}*{mono}")
    return " + ".join(terms) or "0"


def minimal_polynomial(alpha: FqElement) -> Polynomial:
    """Minimal polynomial of alpha over the prime field, as a Polynomial over F_p.

    Built as the product of (x - c) over the Frobenius orbit of alpha.
    """
    F = alpha.field
    orbit = [alpha.index]
    x = F.pow(alpha.index, F.p)
    while x != alpha.index:
        orbit.append(x)
        x = F.pow(x, F.p)
    h = Polynomial(F, [1])
    for c in orbit:
        h = h * Polynomial(F, [F.neg(c), 1])
    if any(c >= F.p for c in h.coeffs):  # pragma: no cover - Galois theory
        raise FieldError("minimal polynomial left the prime field")
    return Polynomial(ff_construct(F.p), h.coeffs)


def relative_dimension(alpha: FqElement, F: FiniteField | None = None) -> int:
    """l = dim over F_p[alpha] of F."""
    F = F or alpha.field
    if alpha.field != F:
        raise FieldError("alpha does not lie in F")
    return F.k // minimal_polynomial(alpha).degree


# -- F_q(t) ---------------------------------------------------------------------

INF = "inf"


class RationalFunction:
    """Element of F_q(t) in canonical form: denominator monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        F = num.field
        if den is None:
            den = Polynomial(F, [1])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = num, Polynomial(F, [1])
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                inv = F.inv(lead)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def field(self) -> FiniteField:
        return self.num.field

    @classmethod
    def t(cls, field: FiniteField) -> RationalFunction:
        return cls(Polynomial(field, [0, 1]))

    @classmethod
    def constant(cls, field: FiniteField, c: int | FqElement) -> RationalFunction:
        idx = field(c).index
        return cls(Polynomial(field, [idx]))

    @classmethod
    def from_poly(cls, f: Polynomial) -> RationalFunction:
        return cls(f)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalFunction.constant(self.field, other)
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def _lift(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, FqElement)):
            return RationalFunction.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else o * self.inverse()

    def __pow__(self, e: int) -> RationalFunction:
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num**e, self.den**e)

    def frobenius_power(self, q: int) -> RationalFunction:
        """self^q where q is a power of the characteristic."""
        return RationalFunction(self.num.frobenius_power(q), self.den.frobenius_power(q))

    def valuation(self, place) -> int:
        return rf_valuation(self, place)

    def __repr__(self) -> str:
        if self.is_polynomial():
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def rf_valuation(f: RationalFunction, place) -> int:
    """Valuation of f at a monic irreducible place pi, or at ``INF``."""
    if f.is_zero():
        raise ValuationError("the zero function has no (finite) valuation")
    if place == INF:
        return f.den.degree - f.num.degree
    if not isinstance(place, Polynomial) or not place.is_monic() or place.degree < 1:
        raise ValueError("a finite place is a monic polynomial of positive degree")
    return f.num.multiplicity(place) - f.den.multiplicity(place)


def place_degree(place) -> int:
    return 1 if place == INF else place.degree
