"""Explicit constructions for nontrivial obstruction groups.

* The Newton polygon of t + tT + t^2 T^2 at t, which forces a unipotent
  subgroup of order q into the decomposition group.
* The substitution chain that turns the t-torsion equation into an
  Artin-Schreier equation X^q - X = 1/(bu), checked with indeterminates.
* The Moore-matrix independence criterion, the per-place decomposition bounds
  for the Artin-Schreier tower, and the resulting dim S = k - 1.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import sympy

from . import linalg
from .algebra import FiniteField, FqElement, ff_construct, prime_power
from .groups import classify, cyclic_subgroups, unipotent_group
from .localglobal import DecompositionDatum, SReport, VerificationReport, s_dimension
from .skewdrinfeld import DrinfeldModule, newton_polygon, parse_place, parse_poly, ramification_bound, torsion_polynomial


def _report(name: str, checks: list, t0: float, **values) -> VerificationReport:
    return VerificationReport(name, all(c["ok"] for c in checks), checks, time.perf_counter() - t0, values)


# -- Newton polygon example --------------------------------------------------------

def example51_report(q: int) -> VerificationReport:
    """Slopes {0, 1/(q(q-1))} of phi_t(Z) at t, the ramification bound q(q-1), and the order-q unipotent."""
    t0 = time.perf_counter()
    p, k = prime_power(q)
    F = ff_construct(p, k)
    dm = DrinfeldModule.parse("t + t*T + t^2*T^2", F)
    ap = torsion_polynomial(dm, parse_poly("t", F))
    npg = newton_polygon(ap, parse_place("t", F))
    bound = ramification_bound(npg)
    expected = ((Fraction(0), q - 1), (Fraction(1, q * (q - 1)), q * q - q))
    U = unipotent_group(F)
    kind = classify(U).kind
    checks = [
        {"label": "slopes", "value": [[str(s), n] for s, n in npg.slopes], "ok": npg.slopes == expected},
        {"label": "lengths sum to q^2 - 1", "value": sum(n for _, n in npg.slopes), "ok": sum(n for _, n in npg.slopes) == q * q - 1},
        {"label": "ramification bound", "value": bound, "ok": bound == q * (q - 1)},
        # q | q(q-1) must divide #(D_t cap Sl_2); the order-q subgroups of Sl_2(F_q) are the unipotent ones
        {"label": "unipotent subgroup of order q is Borel type", "value": [U.order, kind], "ok": U.order == q and kind == 6},
    ]
    return _report(f"Newton polygon example q = {q}", checks, t0, newton=npg.to_json(), ramification_bound=bound)


# -- substitution chain --------------------------------------------------------------

def reduction_chain_check(q: int) -> VerificationReport:
    """The three polynomial identities taking 1 + c1 U + c2 U^(q+1) = 0 to X^q - X = 1/(bu).

    Indeterminates c1, c2, u, V, W, b, X over F_p. The known root u satisfies
    R = 1 + c1 u + c2 u^(q+1) = 0, and b satisfies D b^(q-1) = -c2 u with
    D = c1 + c2 u^q; both relations are used only through exact division.
    """
    t0 = time.perf_counter()
    p, _ = prime_power(q)
    if p == 2:
        raise ValueError("the substitution chain needs p > 2")
    c1, c2, u, V, W, b, X = sympy.symbols("c1 c2 u V W b X")
    gens = (c1, c2, u, V, W, b, X)
    P = lambda e: sympy.Poly(e, *gens, modulus=p)  # noqa: E731
    R = P(1 + c1 * u + c2 * u ** (q + 1))
    D = P(c1 + c2 * u**q)
    checks = []

    # (i) U = V + u expands to the displayed right-hand side plus R
    lhs = P(1 + c1 * (V + u) + c2 * (V + u) ** (q + 1))
    displayed = P(1 + c1 * (V + u) + c2 * (V + u) * (V**q + u**q))
    rhs = P(c1 * V + c2 * V * u**q + c2 * u * V**q + c2 * V ** (q + 1))
    checks.append({"label": "(i) expansion", "ok": lhs == displayed and (lhs - rhs) == R})

    # (ii) divide by V and substitute W = 1/V, clearing W^q
    quo, rem = rhs.div(P(V))
    inv = sympy.expand(W**q * quo.as_expr().subs(V, 1 / W))
    eq3 = P(inv)
    target = D * P(W**q) + P(c2 * u * W + c2)
    checks.append({"label": "(ii) equation in W after clearing denominators", "ok": rem.is_zero and eq3 == target})
    checks.append({"label": "(ii) degree q in W", "value": eq3.degree(W), "ok": eq3.degree(W) == q})

    # (iii) W = b X and D b^(q-1) = -c2 u
    Rb = D * P(b ** (q - 1)) + P(c2 * u)
    sub = P(eq3.as_expr().subs(W, b * X))
    normal = P(-c2 * u * b * X**q + c2 * u * b * X + c2)
    quo_b, rem_b = (sub - normal).div(Rb)
    checks.append({"label": "(iii) reduces to -c2 u b (X^q - X) + c2", "ok": rem_b.is_zero})
    # the reduced equation is X^q - X - f with -c2 u b f = -c2, i.e. f = 1/(bu)
    expr = sympy.expand(normal.as_expr())
    kappa, lin, const = expr.coeff(X, q), expr.coeff(X, 1), expr.coeff(X, 0)
    checks.append({"label": "(iii) X coefficient is -(X^q coefficient)", "ok": P(lin) == P(-kappa)})
    # X^q - X = f with f = -const / kappa; f = 1/(bu) iff -const * b * u = kappa
    checks.append({"label": "(iii) f = 1/(bu)", "ok": not P(kappa).is_zero and P(-const * b * u) == P(kappa)})
    return _report(f"substitution chain q = {q}", checks, t0)


# -- Moore matrix ----------------------------------------------------------------------

@dataclass
class MooreMatrix:
    field: FiniteField
    betas: tuple
    rows: tuple = dc_field(default=())

    def __post_init__(self):
        F = self.field
        k = len(self.betas)
        self.rows = tuple(tuple(F.frob(b, i) for b in self.betas) for i in range(k))

    def determinant(self) -> int:
        return field_determinant(self.field, [list(r) for r in self.rows])


def field_determinant(F: FiniteField, m: list[list[int]]) -> int:
    """Gaussian elimination over F on encodings."""
    m = [row[:] for row in m]
    n = len(m)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = F.neg(det)
        det = F.mul(det, m[c][c])
        inv = F.inv(m[c][c])
        for r in range(c + 1, n):
            if m[r][c]:
                f = F.mul(m[r][c], inv)
                m[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[r], m[c])]
    return det


def moore_is_independent(betas: Sequence) -> tuple[MooreMatrix, bool]:
    if not betas:
        raise ValueError("need at least one beta")
    F = betas[0].field if isinstance(betas[0], FqElement) else None
    if F is None:
        raise TypeError("betas must be FqElements")
    mm = MooreMatrix(F, tuple(b.index for b in betas))
    return mm, mm.determinant() != 0


def fp_independent(betas: Sequence[FqElement]) -> bool:
    """Independent rank computation on the coefficient vectors."""
    F = betas[0].field
    return linalg.rank([list(b.coeffs) for b in betas], F.p) == len(betas)


# -- valuation cases -------------------------------------------------------------------

@dataclass
class ASCaseInput:
    v_f: int
    v_g: tuple = ()


def as_case_bound(inp: ASCaseInput, p: int) -> int:
    """Upper bound on #D at a place, from the valuation of f (and of the corrections g_i)."""
    if inp.v_f > 0:
        return 1  # x^p - x = 0 splits in the residue field; Hensel lifts the roots
    if inp.v_f == 0:
        return p  # residue field extension only: cyclic of order dividing p
    if any(v <= 0 for v in inp.v_g):
        raise ValueError("when v(f) < 0 the corrections must satisfy v(g_i) > 0")
    return p  # only the last equation can be nontrivial at this place


def theorem53_dimension(p: int, k: int) -> SReport:
    """dim S for G = H = Q the full unipotent group over F_{p^k}, D = all cyclic subgroups of order <= p."""
    if p == 2:
        raise ValueError("the construction needs p > 2")
    F = ff_construct(p, k)
    Q = unipotent_group(F)
    data = [DecompositionDatum(f"<sigma_{i}>", C) for i, C in enumerate(cyclic_subgroups(Q)) if C.order <= p]
    rep = s_dimension(Q, data)
    nontrivial = [d for (lab, d), D in zip(rep.per_datum, data) if D.subgroup.order > 1]
    rep.inputs["construction"] = {"p": p, "k": k, "q": F.q}
    # each nontrivial kernel contains the intersection, so equal dimensions mean equal subspaces
    rep.cross_check = {
        "expected_k_minus_1": k - 1,
        "single_kernel_dims": sorted(set(nontrivial)),
        "kernels_coincide": set(nontrivial) <= {rep.dim_F},
        "agrees": rep.dim_F == k - 1,
    }
    if rep.dim_F != k - 1:
        raise ArithmeticError(f"dim S = {rep.dim_F}, expected {k - 1}")
    return rep
