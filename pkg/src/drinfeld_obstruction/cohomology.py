"""First cohomology H^1(G, V) of a finite matrix group on its natural module V = F^r.

Everything is linear algebra over the prime field: V is F_p^n with n = r*[F:F_p],
and a cocycle is stored by its values on a fixed generating set ("generator
coordinates", a vector in F_p^(n * #gens)). ``eval_maps[g]`` turns generator
coordinates into the value xi(g), so full cocycle tables are one einsum away.

Three independent routes to H^1:

* :func:`h1_bruteforce` solves the cocycle law as a linear system.
* :func:`h1_elem_abelian` uses the free resolution of F over F[Q] for an
  elementary abelian unipotent Q.
* :func:`h1_borel` solves the functional relations for the invariant cocycles
  of a Borel group on its unipotent radical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import FiniteField, FqElement, relative_dimension
from .groups import (
    CapExceeded,
    GroupError,
    Mat,
    MatrixGroup,
    closure,
    identity,
    mat_inv,
    mat_mul,
    unipotent_group,
)

UNKNOWN_CAP = 10**4


class GModule:
    """V = F^r with G acting by matrix-vector product, seen as F_p^n."""

    def __init__(self, group: MatrixGroup):
        self.group = group
        self.field: FiniteField = group.field
        self.r = group.r
        self.p = self.field.p
        self.n = self.r * self.field.k
        self._cache: dict[Mat, np.ndarray] = {}

    @property
    def dimension(self) -> int:
        return self.r

    def action(self, g: Mat) -> np.ndarray:
        """n x n matrix over F_p of v -> g v."""
        m = self._cache.get(g)
        if m is None:
            F, r, k = self.field, self.r, self.field.k
            m = np.zeros((self.n, self.n), dtype=np.int64)
            for i in range(r):
                for j in range(r):
                    m[i * k:(i + 1) * k, j * k:(j + 1) * k] = F.mult_matrix(g[i * r + j])
            self._cache[g] = m
        return m

    def scalar(self, c: int) -> np.ndarray:
        """Multiplication by c in F on V."""
        return np.kron(np.eye(self.r, dtype=np.int64), self.field.mult_matrix(c))

    def to_vector(self, v: Sequence) -> np.ndarray:
        """F-coordinates (encodings or FqElements) -> F_p-vector."""
        out = []
        for x in v:
            idx = x.index if isinstance(x, FqElement) else int(x)
            out.extend(self.field.digits(idx))
        return np.array(out, dtype=np.int64)

    def from_vector(self, vec: Sequence[int]) -> tuple[int, ...]:
        k = self.field.k
        return tuple(self.field.encode([int(c) for c in vec[i * k:(i + 1) * k]]) for i in range(self.r))


@dataclass
class Cocycle:
    """A full table g -> xi(g), rows in the group's element order."""

    module: GModule
    values: np.ndarray  # (|G|, n) over F_p

    @property
    def group(self) -> MatrixGroup:
        return self.module.group

    def __call__(self, g: Mat) -> np.ndarray:
        return self.values[self.group.index[g]]

    def satisfies_cocycle_law(self) -> bool:
        """Exhaustive check of xi(gh) = xi(g) + g xi(h) over all pairs."""
        G, M, p = self.group, self.module, self.module.p
        vals = self.values
        for g in G.elements:
            A = M.action(g)
            prod_idx = [G.index[G.mul(g, h)] for h in G.elements]
            lhs = vals[prod_idx]
            rhs = (vals[G.index[g]][None, :] + vals @ A.T) % p
            if not np.array_equal(lhs % p, rhs):
                return False
        return True

    def restrict(self, D: MatrixGroup) -> Cocycle:
        M = GModule(D)
        return Cocycle(M, np.array([self(d) for d in D.elements], dtype=np.int64).reshape(D.order, M.n))

    def __add__(self, other: Cocycle) -> Cocycle:
        return Cocycle(self.module, (self.values + other.values) % self.module.p)

    def scaled(self, c: int) -> Cocycle:
        """Multiply by an integer c."""
        return Cocycle(self.module, (c * self.values) % self.module.p)


def coboundary(module: GModule, v: Sequence[int]) -> Cocycle:
    """g -> g v - v for an F_p-vector v."""
    v = np.asarray(v, dtype=np.int64)
    p = module.p
    vals = np.array([(module.action(g) @ v - v) % p for g in module.group.elements], dtype=np.int64)
    return Cocycle(module, vals.reshape(module.group.order, module.n))


def _selector_gens(G: MatrixGroup) -> list[Mat]:
    e = identity(G.r)
    out = []
    for g in G.generators:
        if g != e and g not in out:
            out.append(g)
    return out


def evaluation_maps(module: GModule, gens: Sequence[Mat]) -> tuple[np.ndarray, np.ndarray]:
    """Maps generator coordinates -> xi(g) for every g, plus the consistency constraints.

    Walks the group breadth first by right multiplication with the generators:
    xi(x s) = xi(x) + x xi(s). The first visit defines xi(xs); later visits
    give linear constraints. Together with xi(1) = 0 these constraints are
    exactly the cocycle law, since every element is a positive word in gens.
    """
    G, p, n = module.group, module.p, module.n
    m = len(gens)
    N = n * m
    E = np.zeros((G.order, n, N), dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    e = identity(G.r)
    start = G.index[e]
    seen[start] = True
    queue = [e]
    constraints = []
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        ix = G.index[x]
        A = module.action(x)
        for j, s in enumerate(gens):
            expr = E[ix].copy()
            expr[:, j * n:(j + 1) * n] = (expr[:, j * n:(j + 1) * n] + A) % p
            y = G.mul(x, s)
            iy = G.index[y]
            if not seen[iy]:
                seen[iy] = True
                E[iy] = expr
                queue.append(y)
            else:
                constraints.append((E[iy] - expr) % p)
    if not seen.all():
        raise GroupError("generators do not generate the group")
    C = np.vstack(constraints) if constraints else np.zeros((0, N), dtype=np.int64)
    return E, C


def coboundary_coordinates(module: GModule, gens: Sequence[Mat]) -> np.ndarray:
    """Generator coordinates of the coboundaries of the basis vectors of V."""
    p, n = module.p, module.n
    blocks = [(module.action(s) - np.eye(n, dtype=np.int64)) % p for s in gens]
    if not blocks:
        return np.zeros((n, 0), dtype=np.int64)
    # row i = coboundary of e_i, i.e. column i of each (A_s - I)
    return np.hstack([b.T for b in blocks]) % p


@dataclass
class H1Space:
    module: GModule
    generators: tuple
    eval_maps: np.ndarray
    cocycles: np.ndarray  # basis of Z^1 in generator coordinates
    coboundaries: np.ndarray  # basis of B^1
    basis: np.ndarray  # representatives of a basis of Z^1/B^1
    method: str = "brute"
    extras: dict = dc_field(default_factory=dict)

    @property
    def group(self) -> MatrixGroup:
        return self.module.group

    @property
    def field(self) -> FiniteField:
        return self.module.field

    @property
    def p(self) -> int:
        return self.module.p

    @property
    def ncoords(self) -> int:
        return self.module.n * len(self.generators)

    @property
    def dim_over_prime(self) -> int:
        return self.basis.shape[0]

    @property
    def dim_over_F(self) -> int:
        k = self.field.k
        if self.dim_over_prime % k:
            raise ArithmeticError(f"dim over F_p = {self.dim_over_prime} not divisible by [F:F_p] = {k}")
        return self.dim_over_prime // k

    def table(self, coords) -> Cocycle:
        coords = np.asarray(coords, dtype=np.int64)
        vals = np.einsum("gnN,N->gn", self.eval_maps, coords) % self.p if self.ncoords else np.zeros(
            (self.group.order, self.module.n), dtype=np.int64
        )
        return Cocycle(self.module, vals)

    def cocycle(self, i: int) -> Cocycle:
        return self.table(self.basis[i])

    def class_cocycle(self, coords) -> Cocycle:
        """Cocycle representing the class with the given coordinates in ``basis``."""
        coords = np.asarray(coords, dtype=np.int64)
        z = coords @ self.basis % self.p if self.dim_over_prime else np.zeros(self.ncoords, dtype=np.int64)
        return self.table(z)

    def gen_coordinates(self, cocycle: Cocycle) -> np.ndarray:
        if cocycle.group.key() != self.group.key():
            raise GroupError("cocycle lives on a different group")
        if not self.generators:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([cocycle(s) for s in self.generators]) % self.p

    def coordinates(self, z) -> np.ndarray:
        """Class coordinates of a cocycle given in generator coordinates."""
        z = linalg.as_mod(z, self.p)
        h = self.dim_over_prime
        if not self.ncoords:
            return np.zeros(0, dtype=np.int64)
        span = np.vstack([self.basis, self.coboundaries]) if self.coboundaries.size else self.basis
        if span.shape[0] == 0:
            if z.any():
                raise ValueError("vector is not a cocycle")
            return np.zeros(0, dtype=np.int64)
        x = linalg.solve(span.T, z, self.p)
        if x is None:
            raise ValueError("vector is not a cocycle")
        return x[:h]

    def class_of(self, cocycle: Cocycle) -> np.ndarray:
        return self.coordinates(self.gen_coordinates(cocycle))

    def is_coboundary(self, z) -> bool:
        return linalg.in_span(self.coboundaries, z, self.p) if self.coboundaries.size else not np.any(
            linalg.as_mod(z, self.p)
        )

    def f_scalar_coords(self, c: int) -> np.ndarray:
        """Matrix (on class coordinates) of multiplication by c in F."""
        S = self.module.scalar(c)
        n, p = self.module.n, self.p
        cols = []
        for row in self.basis:
            blocks = [S @ row[j * n:(j + 1) * n] % p for j in range(len(self.generators))]
            cols.append(self.coordinates(np.concatenate(blocks)))
        if not cols:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array(cols, dtype=np.int64).T

    def summary(self) -> dict:
        return {
            "method": self.method,
            "group_order": self.group.order,
            "dim_Fp": self.dim_over_prime,
            "dim_F": self.dim_over_F,
        }


def _assert_f_stable(space: H1Space) -> None:
    """Z^1 and B^1 are F-subspaces: check stability under the field generator."""
    F = space.field
    if F.k == 1 or not space.ncoords:
        return
    S = space.module.scalar(F.encode([0, 1]))
    n, p = space.module.n, space.p
    for name, rows in (("cocycles", space.cocycles), ("coboundaries", space.coboundaries)):
        if rows.size == 0:
            continue
        scaled = np.hstack([rows[:, j * n:(j + 1) * n] @ S.T for j in range(len(space.generators))]) % p
        if linalg.rank(np.vstack([rows, scaled]), p) != linalg.rank(rows, p):
            raise ArithmeticError(f"{name} are not stable under F-scalars")


def _full_system_cocycles(module: GModule, gens: Sequence[Mat]) -> np.ndarray:
    """Z^1 from the unreduced system xi(gh) - xi(g) - g xi(h) = 0 in all |G| n unknowns.

    Returned in generator coordinates (the projection is injective on Z^1).
    """
    G, p, n = module.group, module.p, module.n
    N = G.order * n
    acc = linalg.RowSpaceAccumulator(N, p)
    eye = np.eye(n, dtype=np.int64)
    for g in G.elements:
        ig = G.index[g]
        A = module.action(g)
        rows = np.zeros((G.order * n, N), dtype=np.int64)
        for ih, h in enumerate(G.elements):
            igh = G.index[G.mul(g, h)]
            block = rows[ih * n:(ih + 1) * n]
            block[:, igh * n:(igh + 1) * n] += eye
            block[:, ig * n:(ig + 1) * n] -= eye
            block[:, ih * n:(ih + 1) * n] -= A
        acc.add(rows)
    full = linalg.nullspace(acc.basis, p, ncols=N) if acc.rank else np.eye(N, dtype=np.int64)
    cols = np.concatenate([np.arange(G.index[s] * n, (G.index[s] + 1) * n) for s in gens]) if gens else []
    proj = full[:, cols] if len(cols) else np.zeros((full.shape[0], 0), dtype=np.int64)
    return linalg.row_basis(proj, p, ncols=len(cols))


def h1_bruteforce(G: MatrixGroup, V: GModule | None = None, *, full_system: bool = False, cap: int = UNKNOWN_CAP) -> H1Space:
    """H^1(G, V) by solving the cocycle law as a linear system over F_p.

    The default system imposes xi(gs) = xi(g) + g xi(s) for every element g and
    generator s, which is equivalent to the law for all pairs; ``full_system``
    solves the unreduced |G|^2 system instead (slow, small groups only).
    """
    module = V or GModule(G)
    if module.group.key() != G.key():
        raise GroupError("module is for a different group")
    unknowns = G.order * module.n
    if unknowns > cap:
        raise CapExceeded("h1_bruteforce unknowns", unknowns, cap)
    gens = _selector_gens(G)
    p = module.p
    N = module.n * len(gens)
    E, C = evaluation_maps(module, gens)
    if full_system:
        Z = _full_system_cocycles(module, gens)
    else:
        Z = linalg.nullspace(C, p, ncols=N) if C.shape[0] else np.eye(N, dtype=np.int64)
        Z = linalg.row_basis(Z, p, ncols=N)
    B = linalg.row_basis(coboundary_coordinates(module, gens), p, ncols=N)
    if B.size and linalg.rank(np.vstack([Z, B]), p) != Z.shape[0]:
        raise ArithmeticError("coboundaries are not cocycles")  # pragma: no cover
    H = linalg.complement_in(B, Z, p)
    space = H1Space(module, tuple(gens), E, Z, B, H, method="brute-full" if full_system else "brute")
    _assert_f_stable(space)
    return space


@lru_cache(maxsize=256)
def _cached_h1(G: MatrixGroup) -> H1Space:
    return h1_bruteforce(G)


def h1_cached(G: MatrixGroup) -> H1Space:
    """h1_bruteforce memoised on the element set of G."""
    return _cached_h1(G)


# -- free resolution for elementary abelian unipotent groups ---------------------

def _fp_independent(F: FiniteField, lambdas: Sequence[int]) -> bool:
    if not lambdas:
        return True
    return linalg.rank([list(F.digits(x)) for x in lambdas], F.p) == len(lambdas)


def _x_action(F: FiniteField, lam: int) -> np.ndarray:
    """x = sigma_lam - 1 on V: e1 -> 0, e2 -> lam e1 (F_p-matrix)."""
    k = F.k
    m = np.zeros((2 * k, 2 * k), dtype=np.int64)
    m[0:k, k:2 * k] = F.mult_matrix(lam)
    return m


def h1_elem_abelian(lambdas: Sequence, F: FiniteField) -> H1Space:
    """H^1(Q, V) for Q = <sigma_lam> from the cocomplex V -> V^k -> V^(k + k(k-1)/2)."""
    lams = [F(x).index for x in lambdas]
    k = len(lams)
    if k < 1:
        raise ValueError("need at least one lambda")
    if not _fp_independent(F, lams):
        raise ValueError("lambdas are linearly dependent over F_p")
    p = F.p
    Q = closure(F, 2, [(1, lam, 0, 1) for lam in lams])
    module = GModule(Q)
    n = module.n
    X = [_x_action(F, lam) for lam in lams]
    for lam, x in zip(lams, X):
        if not np.array_equal(x, (module.action((1, lam, 0, 1)) - np.eye(n, dtype=np.int64)) % p):
            raise ArithmeticError("x_i does not match sigma_i - 1")  # pragma: no cover
    Xp = [np.linalg.matrix_power(x, p - 1) % p for x in X]

    d0 = np.vstack(X) % p  # (k n) x n
    pairs = list(itertools.combinations(range(k), 2))
    d1 = np.zeros(((k + len(pairs)) * n, k * n), dtype=np.int64)
    for i in range(k):
        d1[i * n:(i + 1) * n, i * n:(i + 1) * n] = Xp[i]
    for row, (i, j) in enumerate(pairs, start=k):
        d1[row * n:(row + 1) * n, j * n:(j + 1) * n] = X[i]
        d1[row * n:(row + 1) * n, i * n:(i + 1) * n] = (-X[j]) % p
    Z = linalg.row_basis(linalg.nullspace(d1, p, ncols=k * n), p, ncols=k * n)
    B = linalg.row_basis(d0.T, p, ncols=k * n)
    H = linalg.complement_in(B, Z, p)

    # generators of ker(d1) written down in the argument: e1 in each slot, and
    # (lam_1 e2, ..., lam_k e2) when p > 2
    kF = F.k
    e1 = np.zeros(n, dtype=np.int64)
    e1[0] = 1
    explicit = []
    for i in range(k):
        v = np.zeros(k * n, dtype=np.int64)
        v[i * n:(i + 1) * n] = e1
        explicit.append(v)
    if p > 2:
        v = np.zeros(k * n, dtype=np.int64)
        for i, lam in enumerate(lams):
            v[i * n + kF:(i + 1) * n] = F.digits(lam)
        explicit.append(v)

    explicit = np.array(explicit, dtype=np.int64)
    E, _ = evaluation_maps(module, list(Q.generators))
    space = H1Space(
        module,
        tuple(Q.generators),
        E,
        Z,
        B,
        H,
        method="resolution",
        extras={
            "explicit_generators": explicit,
            "explicit_span": f_span(explicit, F, 2 * k),
            "d0": d0,
            "d1": d1,
        },
    )
    _assert_f_stable(space)
    return space


def f_span(rows: np.ndarray, F: FiniteField, nblocks: int) -> np.ndarray:
    """F_p-basis of the F-span of rows made of ``nblocks`` field coordinates each."""
    rows = np.asarray(rows, dtype=np.int64)
    k = F.k
    if rows.size == 0:
        return np.zeros((0, nblocks * k), dtype=np.int64)
    scaled = []
    for i in range(k):
        c = F.encode([0] * i + [1])
        S = np.kron(np.eye(nblocks, dtype=np.int64), F.mult_matrix(c))
        scaled.append(rows @ S.T % F.p)
    return linalg.row_basis(np.vstack(scaled), F.p, ncols=nblocks * k)


def elem_abelian_formula(p: int, k: int) -> int:
    """dim_F H^1(Q, V) for |Q| = p^k: k if p > 2, k - 1 if p = 2."""
    return k if p > 2 else k - 1


# -- Borel groups via the functional relations --------------------------------------

@dataclass
class BorelH1:
    """Solution space W of the relations on (x, y) : Lambda -> F x F."""

    field: FiniteField
    lambdas: list  # F_p-basis of Lambda (encodings)
    alpha: int
    points: list  # enumeration of Lambda (encodings)
    W: np.ndarray  # basis rows; layout x(points) | y(points) | c
    literal_formula: int | None
    formula: int | None = None
    explicit: list = dc_field(default_factory=list)

    @property
    def dim_over_prime(self) -> int:
        return self.W.shape[0]

    @property
    def dim_over_F(self) -> int:
        k = self.field.k
        if self.dim_over_prime % k:
            raise ArithmeticError("dim over F_p not divisible by [F:F_p]")
        return self.dim_over_prime // k

    def unpack(self, row) -> tuple[list[int], list[int], int]:
        """(x values, y values, c) as field encodings, in ``points`` order."""
        F, k, m = self.field, self.field.k, len(self.points)
        enc = lambda v: F.encode([int(c) for c in v])  # noqa: E731
        xs = [enc(row[i * k:(i + 1) * k]) for i in range(m)]
        ys = [enc(row[(m + i) * k:(m + i + 1) * k]) for i in range(m)]
        c = enc(row[2 * m * k:(2 * m + 1) * k])
        return xs, ys, c

    def pack(self, xs: Sequence[int], ys: Sequence[int], c: int) -> np.ndarray:
        F = self.field
        out = [F.digits(v) for v in xs] + [F.digits(v) for v in ys] + [F.digits(c)]
        return np.array([d for t in out for d in t], dtype=np.int64)

    def contains(self, xs, ys, c) -> bool:
        return linalg.in_span(self.W, self.pack(xs, ys, c), self.field.p)


def _span_points(F: FiniteField, lams: Sequence[int]) -> list[int]:
    pts = []
    for coeffs in itertools.product(range(F.p), repeat=len(lams)):
        acc = 0
        for a, lam in zip(coeffs, lams):
            acc = F.add(acc, F.mul(F.from_int(a), lam))
        pts.append(acc)
    return pts


def _borel_terms(alpha: FqElement, F: FiniteField) -> tuple[bool, int, int]:
    a = alpha.index
    a2 = F.mul(a, a)
    hit = any(F.frob(a, j) == a2 for j in range(F.k))
    delta = 1 if (F.order_of(a) == 3 and F.p > 2) else 0
    return hit, relative_dimension(alpha, F), delta


def borel_formula(alpha: FqElement, F: FiniteField) -> int:
    """Literal closed form: 0 if alpha^(p^j) != alpha^2 for all j, else l + delta."""
    hit, l, delta = _borel_terms(alpha, F)
    return l + delta if hit else 0


def borel_formula_corrected(alpha: FqElement, F: FiniteField) -> int:
    """l [exists j: alpha^(p^j) = alpha^2] + delta.

    Differs from :func:`borel_formula` exactly when ord(alpha) = 3, p > 2 and no
    Frobenius power sends alpha to alpha^2 (e.g. alpha in F_p with p = 1 mod 3):
    the quadratic solution x = lam^2/2, y = lam survives there.
    """
    hit, l, delta = _borel_terms(alpha, F)
    return (l if hit else 0) + delta


def h1_borel(lambdas: Sequence, alpha, F: FiniteField) -> BorelH1:
    """H^1(H, V) for H = <sigma_lam, diag(alpha, alpha^-1)> via invariant cocycles on Q.

    Unknowns are x(lam), y(lam) for every lam in the F_p-span Lambda and the
    constant c (= y(1) when 1 is in Lambda). Relations:

        x(mu + lam) = x(mu) + x(lam) + lam mu c      y(lam) = lam c
        alpha^-1 x(alpha^2 lam) = x(lam)             alpha y(alpha^2 lam) = y(lam)

    with c = 0 when p = 2. The normalised invariant cocycles meet the
    coboundaries only in 0, so dim W = dim H^1(H, V).
    """
    lams = [F(x).index for x in lambdas]
    a = F(alpha).index
    if a == 0:
        raise ValueError("alpha must be nonzero")
    if a == 1:
        raise ValueError("alpha = 1 gives H = Q; use h1_elem_abelian")
    if F.order_of(a) % 2 == 0:
        raise ValueError("alpha must have odd multiplicative order")
    if not lams or not _fp_independent(F, lams):
        raise ValueError("lambdas must be nonempty and F_p-independent")
    p, k = F.p, F.k
    pts = _span_points(F, lams)
    pos = {x: i for i, x in enumerate(pts)}
    a2 = F.mul(a, a)
    if any(F.mul(a2, lam) not in pos for lam in pts):
        raise ValueError("Lambda is not stable under alpha^2; H is not a Borel group")
    m = len(pts)
    ncols = (2 * m + 1) * k
    I = np.eye(k, dtype=np.int64)
    xs = lambda i: slice(i * k, (i + 1) * k)  # noqa: E731
    ys = lambda i: slice((m + i) * k, (m + i + 1) * k)  # noqa: E731
    cs = slice(2 * m * k, (2 * m + 1) * k)
    rows = []

    def new_block():
        blk = np.zeros((k, ncols), dtype=np.int64)
        rows.append(blk)
        return blk

    for i, mu in enumerate(pts):
        for j, lam in enumerate(pts):
            if j < i:
                continue
            blk = new_block()
            blk[:, xs(pos[F.add(mu, lam)])] += I
            blk[:, xs(i)] -= I
            blk[:, xs(j)] -= I
            blk[:, cs] -= F.mult_matrix(F.mul(lam, mu))
    for i, lam in enumerate(pts):
        blk = new_block()
        blk[:, ys(i)] += I
        blk[:, cs] -= F.mult_matrix(lam)
        j = pos[F.mul(a2, lam)]
        blk = new_block()
        blk[:, xs(j)] += F.mult_matrix(F.inv(a))
        blk[:, xs(i)] -= I
        blk = new_block()
        blk[:, ys(j)] += F.mult_matrix(a)
        blk[:, ys(i)] -= I
    if p == 2:
        blk = new_block()
        blk[:, cs] += I
    A = np.vstack(rows) % p
    W = linalg.row_basis(linalg.nullspace(A, p, ncols=ncols), p, ncols=ncols)
    full = sorted(pts) == list(range(F.q))
    literal = borel_formula(F.from_index(a), F) if full else None
    corrected = borel_formula_corrected(F.from_index(a), F) if full else None
    result = BorelH1(F, lams, a, pts, W, literal, corrected)
    if full:
        result.explicit = borel_explicit_generators(result)
    return result


def borel_explicit_generators(res: BorelH1) -> list[tuple[list[int], list[int], int]]:
    """The solutions written down in the argument, as (x, y, c) tables.

    Semilinear part (y = 0): x(lam) = lam^(p^(i + m k')) with alpha^(p^j) = alpha^2,
    i = -j mod k', k' = deg minpoly(alpha), m = 0..l-1. Extra solution when
    ord(alpha) = 3, p > 2: x(lam) = lam^2 / 2, y(lam) = lam, c = 1.
    """
    F, a = res.field, res.alpha
    p, k = F.p, F.k
    a2 = F.mul(a, a)
    out = []
    js = [j for j in range(k) if F.frob(a, j) == a2]
    if js:
        kprime = k // relative_dimension(F.from_index(a), F)
        i0 = (-js[0]) % kprime
        for m in range(k // kprime):
            e = i0 + m * kprime
            xs = [F.frob(lam, e) for lam in res.points]
            out.append((xs, [0] * len(res.points), 0))
    if F.order_of(a) == 3 and p > 2:
        half = F.inv(F.from_int(2))
        xs = [F.mul(half, F.mul(lam, lam)) for lam in res.points]
        out.append((xs, list(res.points), 1))
    return out


def normalize_invariant_cocycle(xs: Sequence[int], ys: Sequence[int], points: Sequence[int], alpha: int, F: FiniteField):
    """Shift an invariant-class cocycle on Q by the coboundary of (0, m2/(alpha-1)).

    Input: xi(sigma_lam) = (xs[i], ys[i]) for lam = points[i], whose class is
    fixed by rho = diag(alpha, alpha^-1). There is then (m1, m2) with
    rho^-1 xi(sigma_{alpha^2 lam}) = xi(sigma_lam) + (lam m2, 0); the returned
    cocycle satisfies rho^-1 xi(sigma_{alpha^2 lam}) = xi(sigma_lam) exactly.
    """
    pos = {x: i for i, x in enumerate(points)}
    a2 = F.mul(alpha, alpha)
    ainv = F.inv(alpha)
    m2 = None
    for i, lam in enumerate(points):
        j = pos[F.mul(a2, lam)]
        dx = F.sub(F.mul(ainv, xs[j]), xs[i])
        dy = F.sub(F.mul(alpha, ys[j]), ys[i])
        if dy != 0:
            raise ValueError("class is not invariant: second coordinate differs")
        if lam == 0:
            if dx != 0:
                raise ValueError("cocycle is not normalised at the identity")
            continue
        cand = F.div(dx, lam)
        if m2 is None:
            m2 = cand
        elif cand != m2:
            raise ValueError("class is not invariant: no single coboundary matches")
    m2 = m2 or 0
    shift = F.div(m2, F.sub(alpha, 1))
    new_xs = [F.sub(x, F.mul(lam, shift)) for x, lam in zip(xs, points)]
    return new_xs, list(ys), m2


# -- restriction and corestriction --------------------------------------------

@dataclass
class RestrictionMap:
    source: H1Space
    target: H1Space
    matrix: np.ndarray  # (dim target) x (dim source) over F_p
    kernel: np.ndarray  # rows: class coordinates in source.basis

    @property
    def kernel_dim_over_prime(self) -> int:
        return self.kernel.shape[0]

    @property
    def kernel_dim_over_F(self) -> int:
        k = self.source.field.k
        if self.kernel_dim_over_prime % k:
            raise ArithmeticError("kernel is not an F-subspace")
        return self.kernel_dim_over_prime // k

    def is_injective(self) -> bool:
        return self.kernel_dim_over_prime == 0


def restrict(space: H1Space, D: MatrixGroup, target: H1Space | None = None) -> RestrictionMap:
    """Res: H^1(G, V) -> H^1(D, V) on the chosen bases, with its kernel."""
    G = space.group
    if not D.is_subgroup_of(G):
        raise GroupError("D is not a subgroup of G")
    if target is None:
        target = h1_cached(D)
    p = space.p
    h = space.dim_over_prime
    cols = []
    for row in space.basis:
        if target.generators:
            z = np.concatenate([space.eval_maps[G.index[d]] @ row % p for d in target.generators])
        else:
            z = np.zeros(0, dtype=np.int64)
        cols.append(target.coordinates(z))
    M = np.array(cols, dtype=np.int64).T if cols else np.zeros((target.dim_over_prime, 0), dtype=np.int64)
    M = M.reshape(target.dim_over_prime, h)
    if M.shape[0] == 0:
        K = np.eye(h, dtype=np.int64)
    else:
        K = linalg.nullspace(M, p, ncols=h)
    return RestrictionMap(space, target, M % p, K)


def left_coset_reps(G: MatrixGroup, H: MatrixGroup) -> list[Mat]:
    """First element (in G's order) of each left coset gH."""
    covered: set = set()
    reps = []
    for g in G.elements:
        if g in covered:
            continue
        reps.append(g)
        covered.update(G.mul(g, h) for h in H.elements)
    return reps


def corestrict(xi: Cocycle, G: MatrixGroup) -> Cocycle:
    """Transfer: (Cor xi)(g) = sum_i r_j xi(r_j^-1 g r_i), where g r_i lies in r_j H."""
    H = xi.group
    if not H.is_subgroup_of(G):
        raise GroupError("H is not a subgroup of G")
    M = GModule(G)
    p = M.p
    reps = left_coset_reps(G, H)
    rep_of = {}
    for j, r in enumerate(reps):
        for h in H.elements:
            rep_of[G.mul(r, h)] = j
    rinv = [mat_inv(G.field, G.r, r) for r in reps]
    vals = np.zeros((G.order, M.n), dtype=np.int64)
    for ig, g in enumerate(G.elements):
        acc = np.zeros(M.n, dtype=np.int64)
        for r in reps:
            x = G.mul(g, r)
            j = rep_of[x]
            h = mat_mul(G.field, G.r, rinv[j], x)
            acc = acc + M.action(reps[j]) @ xi(h)
        vals[ig] = acc % p
    return Cocycle(M, vals)


def cor_res_matrix(space: H1Space, H: MatrixGroup) -> np.ndarray:
    """Matrix of Cor o Res on the class coordinates of ``space``."""
    G = space.group
    cols = []
    for i in range(space.dim_over_prime):
        xi = space.cocycle(i).restrict(H)
        cols.append(space.class_of(corestrict(xi, G)))
    if not cols:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T % space.p


def unipotent_h1(F: FiniteField, lambdas: Sequence | None = None) -> H1Space:
    """Brute-force H^1 for the unipotent group with the given lambdas (default: all of F)."""
    return h1_bruteforce(unipotent_group(F, lambdas))
