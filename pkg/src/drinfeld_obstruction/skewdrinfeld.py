"""Skew polynomials K{T} over K = F_q(t), Drinfeld modules, and Newton polygons.

The twisting rule is T c = c^q T. ``T`` in printed and parsed expressions
always stands for the Frobenius tau, ``t`` for the function-field variable
and ``x`` for the generator of the constant field.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .algebra import (
    INF,
    FiniteField,
    FqElement,
    Polynomial,
    RationalFunction,
    rf_valuation,
)


class TwistMismatch(ValueError):
    pass


class SkewPolynomial:
    """sum_i c_i T^i with c_i in F_q(t); immutable."""

    __slots__ = ("field", "twist", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Sequence[RationalFunction] = (), twist: int | None = None):
        self.field = field
        self.twist = field.q if twist is None else twist
        cs = [c if isinstance(c, RationalFunction) else RationalFunction.constant(field, c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[RationalFunction, ...] = tuple(cs)

    # constructors
    @classmethod
    def tau(cls, field: FiniteField, twist: int | None = None) -> SkewPolynomial:
        zero = RationalFunction.constant(field, 0)
        return cls(field, [zero, RationalFunction.constant(field, 1)], twist)

    @classmethod
    def scalar(cls, c: RationalFunction, twist: int | None = None) -> SkewPolynomial:
        return cls(c.field, [c], twist)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> RationalFunction:
        return self.coeffs[-1]

    def coeff(self, i: int) -> RationalFunction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RationalFunction.constant(self.field, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: SkewPolynomial) -> None:
        if self.twist != other.twist or self.field != other.field:
            raise TwistMismatch(f"twist {self.twist} vs {other.twist}")

    def _lift(self, other) -> SkewPolynomial:
        if isinstance(other, SkewPolynomial):
            self._check(other)
            return other
        if isinstance(other, (RationalFunction, Polynomial, int, FqElement)):
            c = other if isinstance(other, RationalFunction) else RationalFunction.constant(self.field, 0) + other
            return SkewPolynomial(self.field, [c], self.twist)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return SkewPolynomial(self.field, [self.coeff(i) + o.coeff(i) for i in range(n)], self.twist)

    __radd__ = __add__

    def __neg__(self):
        return SkewPolynomial(self.field, [-c for c in self.coeffs], self.twist)

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else skew_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else skew_mul(o, self)

    def __pow__(self, e: int) -> SkewPolynomial:
        if e < 0:
            raise ValueError("negative power in K{T}")
        out = SkewPolynomial(self.field, [RationalFunction.constant(self.field, 1)], self.twist)
        for _ in range(e):
            out = skew_mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.twist == other.twist and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.twist, self.coeffs))

    def __repr__(self) -> str:
        return format_skew(self)


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """Product with T c = c^q T: coefficient of T^m is sum_{i+j=m} f_i (g_j)^(q^i)."""
    if f.twist != g.twist or f.field != g.field:
        raise TwistMismatch(f"twist {f.twist} vs {g.twist}")
    F, q = f.field, f.twist
    if f.is_zero() or g.is_zero():
        return SkewPolynomial(F, [], q)
    out = [RationalFunction.constant(F, 0) for _ in range(f.degree + g.degree + 1)]
    for i, fi in enumerate(f.coeffs):
        if fi.is_zero():
            continue
        qi = q**i
        for j, gj in enumerate(g.coeffs):
            if gj.is_zero():
                continue
            out[i + j] = out[i + j] + fi * gj.frobenius_power(qi)
    return SkewPolynomial(F, out, q)


def _coeff_str(c: RationalFunction) -> str:
    s = repr(c)
    return f"({s})" if (" " in s and not s.startswith("(")) else s


def format_skew(f: SkewPolynomial) -> str:
    """'c0 + c1*T + c2*T^2' with rational-function coefficients in t."""
    terms = []
    for i, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        if not mono:
            terms.append(_coeff_str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{_coeff_str(c)}*{mono}")
    return " + ".join(terms) or "0"


# -- expression parsing ---------------------------------------------------------

class ParseError(ValueError):
    pass


def _int_literal(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_literal(node.operand)
    raise ParseError("exponents must be integer literals")


def _eval_node(node, F: FiniteField, twist: int):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, F, twist)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return SkewPolynomial(F, [RationalFunction.constant(F, node.value)], twist)
    if isinstance(node, ast.Name):
        if node.id == "t":
            return SkewPolynomial(F, [RationalFunction.t(F)], twist)
        if node.id == "T":
            return SkewPolynomial.tau(F, twist)
        if node.id == "x":
            return SkewPolynomial(F, [RationalFunction(Polynomial(F, [F.gen.index]))], twist)
        raise ParseError(f"unknown symbol {node.id!r} (use t, T, x)")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, F, twist)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = _int_literal(node.right)
            base = _eval_node(node.left, F, twist)
            if e < 0:
                if base.degree != 0:
                    raise ParseError("negative powers only of scalars")
                return SkewPolynomial(F, [base.coeffs[0] ** e], twist)
            return base**e
        a = _eval_node(node.left, F, twist)
        b = _eval_node(node.right, F, twist)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return skew_mul(a, b)
        if isinstance(node.op, ast.Div):
            if b.degree != 0:
                raise ParseError("can only divide by a nonzero scalar")
            inv = SkewPolynomial(F, [b.coeffs[0].inverse()], twist)
            return skew_mul(a, inv)
    raise ParseError(f"unsupported syntax: {ast.dump(node)[:60]}")


def parse_skew(text: str, F: FiniteField, twist: int | None = None) -> SkewPolynomial:
    """Parse e.g. 't + t*T + t^2*T^2'. Products follow the twisted rule."""
    twist = F.q if twist is None else twist
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval_node(tree, F, twist)


def parse_poly(text: str, F: FiniteField) -> Polynomial:
    """Parse a polynomial in F_q[t] such as 't^2 + 1'."""
    s = parse_skew(text, F)
    if s.degree > 0:
        raise ParseError("T is not allowed in a polynomial of A = F_q[t]")
    if s.is_zero():
        return Polynomial(F, [])
    c = s.coeffs[0]
    if not c.is_polynomial():
        raise ParseError("expected a polynomial, got a rational function")
    return c.num


# -- Drinfeld modules -------------------------------------------------------------

class DrinfeldModule:
    """phi: F_q[t] -> K{T} determined by phi_t; the rank is deg_T phi_t."""

    def __init__(self, phi_t: SkewPolynomial):
        F = phi_t.field
        if phi_t.twist != F.q:
            raise ValueError("the twist must equal the size of the constant field")
        if phi_t.coeff(0) != RationalFunction.t(F):
            raise ValueError("constant coefficient of phi_t must be t")
        if phi_t.degree < 1:
            raise ValueError("phi_t must have positive T-degree")
        self.phi_t = phi_t
        self.field = F
        self.q = F.q
        self.rank = phi_t.degree

    @classmethod
    def carlitz(cls, F: FiniteField) -> DrinfeldModule:
        return cls(SkewPolynomial(F, [RationalFunction.t(F), RationalFunction.constant(F, 1)]))

    @classmethod
    def parse(cls, text: str, F: FiniteField) -> DrinfeldModule:
        return cls(parse_skew(text, F))

    def __repr__(self) -> str:
        return f"DrinfeldModule(phi_t = {format_skew(self.phi_t)}, q = {self.q}, rank = {self.rank})"


def phi_of(dm: DrinfeldModule, a: Polynomial) -> SkewPolynomial:
    """phi_a, by Horner substitution of phi_t for t in a."""
    if a.is_zero():
        raise ValueError("phi_0 = 0 is excluded")
    F = dm.field
    acc = SkewPolynomial(F, [], dm.q)
    for c in reversed(a.coeffs):
        acc = skew_mul(acc, dm.phi_t) + SkewPolynomial(F, [RationalFunction(Polynomial(F, [c]))], dm.q)
    # self-checks: degree, constant term, leading coefficient
    if acc.degree != dm.rank * a.degree:
        raise ArithmeticError("deg_T phi_a != r deg a")
    if acc.coeff(0) != RationalFunction(a):
        raise ArithmeticError("constant coefficient of phi_a != a")
    if acc.leading.is_zero():  # pragma: no cover
        raise ArithmeticError("vanishing leading coefficient")
    return acc


@dataclass(frozen=True)
class AdditivePolynomial:
    """sum_i c_i Z^(q^i) as (exponent, coefficient) pairs, zero terms dropped."""

    terms: tuple  # ((q^i, c_i), ...)
    q: int

    @property
    def field(self) -> FiniteField:
        return self.terms[0][1].field

    @property
    def degree(self) -> int:
        return self.terms[-1][0]

    def coefficient(self, exponent: int) -> RationalFunction:
        for e, c in self.terms:
            if e == exponent:
                return c
        return RationalFunction.constant(self.field, 0)

    def derivative(self) -> RationalFunction:
        """d/dZ: only the Z^1 term survives in characteristic p."""
        return self.coefficient(1)

    def evaluate(self, z: int, t0: int, big: FiniteField, embed) -> int:
        """Value at z in F_{big} after specialising t -> t0; ``embed`` maps F_q encodings into big."""
        total = 0
        for e, c in self.terms:
            cv = specialize(c, t0, big, embed)
            total = big.add(total, big.mul(cv, big.pow(z, e)))
        return total

    def __repr__(self) -> str:
        parts = []
        for e, c in self.terms:
            mono = "Z" if e == 1 else f"Z^{e}"
            parts.append(mono if c == 1 else f"{_coeff_str(c)}*{mono}")
        return " + ".join(parts)


def torsion_polynomial(dm: DrinfeldModule, a: Polynomial) -> AdditivePolynomial:
    """phi_a(Z) = sum_i c_i Z^(q^i) with c_i the coefficients of phi_a."""
    f = phi_of(dm, a)
    terms = tuple((dm.q**i, c) for i, c in enumerate(f.coeffs) if not c.is_zero())
    return AdditivePolynomial(terms, dm.q)


# -- specialisation into finite fields ---------------------------------------------

def field_embedding(small: FiniteField, big: FiniteField) -> dict[int, int]:
    """An embedding of F_small into F_big (same p, k_small | k_big), as an encoding map."""
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"F_{small.q} does not embed in F_{big.q}")
    mod = small.modulus
    for r in range(big.q):
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, r), big.from_int(c))
        if acc == 0:
            root = r
            break
    else:  # pragma: no cover
        raise ValueError("no root of the defining polynomial")
    table = {}
    for a in range(small.q):
        acc = 0
        for c in reversed(small.digits(a)):
            acc = big.add(big.mul(acc, root), big.from_int(c))
        table[a] = acc
    return table


def _poly_at(f: Polynomial, t0: int, big: FiniteField, embed) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = big.add(big.mul(acc, t0), embed[c])
    return acc


def specialize(c: RationalFunction, t0: int, big: FiniteField, embed) -> int:
    """Image of c under t -> t0 in F_big; raises ZeroDivisionError at a pole."""
    den = _poly_at(c.den, t0, big, embed)
    if den == 0:
        raise ZeroDivisionError("t0 is a pole")
    return big.div(_poly_at(c.num, t0, big, embed), den)


# -- Newton polygons ----------------------------------------------------------------

@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of (q^i, v(c_i)); slope = rise/run, roots on a segment have valuation -slope."""

    vertices: tuple  # ((degree, valuation), ...)
    slopes: tuple  # ((Fraction slope, horizontal length), ...)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "slopes": [{"slope": str(s), "length": n} for s, n in self.slopes],
        }


def newton_polygon(ap: AdditivePolynomial, place=INF) -> NewtonPolygon:
    pts = [(e, rf_valuation(c, place)) for e, c in ap.terms if not c.is_zero()]
    if len(pts) < 2:
        raise ValueError("need at least two nonzero terms for a Newton polygon")
    pts.sort()
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # pop while the last turn is not strictly convex (lower hull)
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = tuple(
        (Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0]) for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(tuple(hull), slopes)


def ramification_bound(np_: NewtonPolygon) -> int:
    """lcm of slope denominators: a lower bound for the ramification needed to split."""
    out = 1
    for s, _ in np_.slopes:
        out = lcm(out, s.denominator)
    return out


def parse_place(text: str, F: FiniteField):
    """'inf' or a monic irreducible polynomial in t."""
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    pi = parse_poly(text, F)
    if pi.degree < 1 or not pi.is_monic() or not pi.is_irreducible():
        raise ValueError(f"{text!r} is not a monic irreducible polynomial")
    return pi
