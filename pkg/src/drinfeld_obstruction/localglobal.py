"""dim S(a, K) as an intersection of restriction kernels, plus the vanishing checks.

Decomposition groups are inputs. With a finite list of them the result is the
dimension of the *modelled* intersection; it equals dim S only when the list
covers every place that can cut the kernel down (the Borel shortcut below
spells out when that is the case).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .algebra import FiniteField, ff_construct
from .cohomology import H1Space, h1_bruteforce, restrict
from .groups import (
    GroupError,
    MatrixGroup,
    Unclassified,
    classify,
    closure,
    gl,
    identity,
    p_sylow,
    sl,
    sl_part,
    subgroups_up_to,
    upper_triangular,
)


@dataclass
class DecompositionDatum:
    label: str
    subgroup: MatrixGroup
    ramified: bool = False


@dataclass
class SReport:
    dim_F: int
    dim_Fp: int
    h1_dim_F: int
    kernel: np.ndarray  # rows: class coordinates in the H^1(G, V) basis
    kernel_cocycles: np.ndarray  # same rows as cocycles in generator coordinates
    per_datum: list  # (label, dim_F ker Res_w)
    inputs: dict
    shortcut: str | None = None
    assumptions: list = dc_field(default_factory=list)
    cross_check: dict | None = None

    def to_json(self) -> dict:
        return {
            "dim_F": self.dim_F,
            "dim_Fp": self.dim_Fp,
            "h1_dim_F": self.h1_dim_F,
            "kernel_basis": self.kernel_cocycles.tolist(),
            "per_datum": [{"label": lab, "ker_dim_F": d} for lab, d in self.per_datum],
            "inputs": self.inputs,
            "shortcut": self.shortcut,
            "assumptions": list(self.assumptions),
            "cross_check": self.cross_check,
        }


def _describe(G: MatrixGroup) -> dict:
    return {"field": G.field.descriptor(), "order": G.order, "generators": [list(g) for g in G.generators]}


def s_dimension(G: MatrixGroup, data: Sequence[DecompositionDatum], space: H1Space | None = None) -> SReport:
    """Intersection over the data of ker(H^1(G, V) -> H^1(D, V)).

    With no data the intersection is all of H^1(G, V).
    """
    space = space or h1_bruteforce(G)
    p, k = space.p, space.field.k
    h = space.dim_over_prime
    current = np.eye(h, dtype=np.int64)
    per = []
    for d in data:
        if not d.subgroup.is_subgroup_of(G):
            raise GroupError(f"decomposition group {d.label!r} is not contained in G")
        R = restrict(space, d.subgroup)
        per.append((d.label, R.kernel_dim_over_F))
        current = linalg.intersect(current, R.kernel, p, h) if h else current
    dim_fp = current.shape[0]
    if dim_fp % k:
        raise ArithmeticError("intersection of kernels is not an F-subspace")
    cocycles = current @ space.basis % p if dim_fp else np.zeros((0, space.ncoords), dtype=np.int64)
    return SReport(
        dim_F=dim_fp // k,
        dim_Fp=dim_fp,
        h1_dim_F=space.dim_over_F,
        kernel=current,
        kernel_cocycles=cocycles,
        per_datum=per,
        inputs={"group": _describe(G), "data": [{"label": d.label, "order": d.subgroup.order, "ramified": d.ramified} for d in data]},
    )


CHEBOTAREV_FLAG = "a place with decomposition group <sigma> exists (Chebotarev density; assumed, not computed)"


def borel_sigma(G: MatrixGroup) -> tuple[MatrixGroup, tuple]:
    """(Q, sigma) for G whose determinant-one part is of Borel type."""
    H = sl_part(G)
    t = classify(H)
    if t.kind != 6:
        raise GroupError(f"G cap Sl_2 is of type ({t.kind}), not Borel")
    Q = p_sylow(H).group
    if Q.order == 1:
        raise GroupError("the p-Sylow subgroup is trivial")
    e = identity(G.r)
    sigma = next(g for g in Q.elements if g != e)
    return Q, sigma


def s_dimension_borel(
    G: MatrixGroup,
    ramified_data: Sequence[DecompositionDatum] = (),
    *,
    sigma=None,
    full_data: Sequence[DecompositionDatum] | None = None,
) -> SReport:
    """ker(Res_<sigma>) intersected with the kernels at the places where p^2 | #D.

    ``full_data``, if given, is a list of decomposition groups of any order; the
    result is checked against s_dimension on it (with <sigma> added).
    """
    Q, default_sigma = borel_sigma(G)
    sigma = default_sigma if sigma is None else sigma
    if sigma not in Q.index or sigma == identity(G.r):
        raise GroupError("sigma must be a non-identity element of the p-Sylow subgroup")
    p = G.field.p
    for d in ramified_data:
        if d.subgroup.order % (p * p):
            raise ValueError(f"datum {d.label!r}: p^2 does not divide #D, it is covered by <sigma>")
    space = h1_bruteforce(G)
    cyc = DecompositionDatum("<sigma>", closure(G.field, G.r, [sigma]))
    rep = s_dimension(G, [cyc, *ramified_data], space)
    rep.shortcut = "borel"
    rep.assumptions.append(CHEBOTAREV_FLAG)
    rep.inputs["sigma"] = list(sigma)
    if full_data is not None:
        full = s_dimension(G, [cyc, *full_data], space)
        rep.cross_check = {"full_dim_F": full.dim_F, "agrees": full.dim_F == rep.dim_F}
        if full.dim_F != rep.dim_F:
            raise ArithmeticError(f"Borel shortcut gives {rep.dim_F}, full data gives {full.dim_F}")
    return rep


# -- verification reports -------------------------------------------------------------

@dataclass
class VerificationReport:
    name: str
    passed: bool
    checks: list  # dicts with at least "label" and "ok"
    elapsed: float = 0.0
    values: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "elapsed_s": round(self.elapsed, 3), "checks": self.checks}
        if self.values:
            out["values"] = self.values
        return out


def _report(name: str, checks: list, t0: float) -> VerificationReport:
    return VerificationReport(name, all(c["ok"] for c in checks), checks, time.perf_counter() - t0)


def rank1_vanishing(F: FiniteField, orders: Iterable[int] | None = None) -> VerificationReport:
    """H^1(G, F) = 0 for cyclic G <= F* acting on F by multiplication."""
    t0 = time.perf_counter()
    n = F.q - 1
    orders = [d for d in range(1, n + 1) if n % d == 0] if orders is None else list(orders)
    checks = []
    for d in orders:
        g = F.element_of_order(d).index
        G = closure(F, 1, [(g,)])
        dim = h1_bruteforce(G).dim_over_F
        checks.append({"label": f"|G| = {d} in F_{F.q}*", "dim_F": dim, "ok": dim == 0})
    return _report(f"rank-1 vanishing over F_{F.q}", checks, t0)


def glr_slr_vanishing(r: int, F: FiniteField) -> VerificationReport:
    """H^1(Gl_r(F), F^r) = 0 if F != F_2 and H^1(Sl_r(F), F^r) = 0 if p != 2."""
    t0 = time.perf_counter()
    checks = []
    if F.q != 2:
        d = h1_bruteforce(gl(r, F)).dim_over_F
        checks.append({"label": f"Gl_{r}(F_{F.q})", "dim_F": d, "ok": d == 0})
    if F.p != 2:
        d = h1_bruteforce(sl(r, F)).dim_over_F
        checks.append({"label": f"Sl_{r}(F_{F.q})", "dim_F": d, "ok": d == 0})
    if not checks:
        checks.append({"label": f"no hypothesis applies to F_{F.q}", "ok": True})
    return _report(f"Gl/Sl vanishing r={r} over F_{F.q}", checks, t0)


def elliptic_bound(G: MatrixGroup) -> dict:
    """Bound on dim S for G <= Gl_2(F_p): ker Res_<sigma> in the Borel case with |Q| = p, else H^1(G, V)."""
    p = G.field.p
    H = sl_part(G)
    try:
        t = classify(H)
        kind = t.kind
    except Unclassified:
        kind = None
    space = h1_bruteforce(G)
    if kind == 6:
        Q = p_sylow(H).group
        if Q.order == p:
            _, sigma = borel_sigma(G)
            R = restrict(space, closure(G.field, G.r, [sigma]))
            return {"branch": "borel", "type": kind, "h1_dim_F": space.dim_over_F, "bound": R.kernel_dim_over_F}
    return {"branch": "direct", "type": kind, "h1_dim_F": space.dim_over_F, "bound": space.dim_over_F}


def elliptic_verify(p: int, gen_bound: int = 3) -> VerificationReport:
    """Sweep subgroups of Gl_2(F_p) (p in {2, 3}) or of its upper-triangular subgroup (p = 5)."""
    t0 = time.perf_counter()
    F = ff_construct(p)
    if p in (2, 3):
        ambient = gl(2, F)
    elif p == 5:
        ambient = upper_triangular(F)
    else:
        raise ValueError("elliptic_verify supports p in {2, 3, 5}")
    checks = []
    for G in subgroups_up_to(ambient, gen_bound):
        info = elliptic_bound(G)
        checks.append({"label": f"|G| = {G.order}", "order": G.order, **info, "ok": info["bound"] == 0})
    return _report(f"elliptic sweep p = {p}", checks, t0)
