"""Finite subgroups of Gl_r(F_q): closure, Sl-part, the Sl_2 subgroup types, Sylows.

Matrices are tuples of field encodings in row-major order (length r*r), so
they hash and compare cheaply. Use :func:`matrix` to build one from nested
lists of ints (embedded via Z -> F_p), coefficient lists or FqElements.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Iterable, NamedTuple, Sequence

from .algebra import FiniteField, FqElement, ff_construct

Mat = tuple  # row-major tuple of field encodings

DEFAULT_CAP = 10**5


class CapExceeded(RuntimeError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class GroupError(ValueError):
    pass


class Unclassified(GroupError):
    """No subgroup type matched; the classification says this cannot happen."""


# -- raw matrix arithmetic ---------------------------------------------------------

def identity(r: int) -> Mat:
    return tuple(1 if i == j else 0 for i in range(r) for j in range(r))


def mat_mul(F: FiniteField, r: int, a: Mat, b: Mat) -> Mat:
    add, mul = F.add, F.mul
    if r == 2:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            add(mul(a0, b0), mul(a1, b2)),
            add(mul(a0, b1), mul(a1, b3)),
            add(mul(a2, b0), mul(a3, b2)),
            add(mul(a2, b1), mul(a3, b3)),
        )
    out = []
    for i in range(r):
        for j in range(r):
            acc = 0
            for k in range(r):
                acc = add(acc, mul(a[i * r + k], b[k * r + j]))
            out.append(acc)
    return tuple(out)


def mat_det(F: FiniteField, r: int, a: Mat) -> int:
    if r == 1:
        return a[0]
    if r == 2:
        return F.sub(F.mul(a[0], a[3]), F.mul(a[1], a[2]))
    # Laplace expansion along the first row; r <= 3 at desk scale
    det = 0
    for j in range(r):
        minor = tuple(a[i * r + c] for i in range(1, r) for c in range(r) if c != j)
        term = F.mul(a[j], mat_det(F, r - 1, minor))
        det = F.add(det, term) if j % 2 == 0 else F.sub(det, term)
    return det


def mat_inv(F: FiniteField, r: int, a: Mat) -> Mat:
    d = mat_det(F, r, a)
    if d == 0:
        raise GroupError("singular matrix")
    di = F.inv(d)
    if r == 1:
        return (di,)
    if r == 2:
        a0, a1, a2, a3 = a
        return (F.mul(a3, di), F.mul(F.neg(a1), di), F.mul(F.neg(a2), di), F.mul(a0, di))
    adj = []
    for i in range(r):
        for j in range(r):
            minor = tuple(a[x * r + y] for x in range(r) for y in range(r) if x != j and y != i)
            c = mat_det(F, r - 1, minor)
            adj.append(F.mul(c if (i + j) % 2 == 0 else F.neg(c), di))
    return tuple(adj)


def mat_trace(F: FiniteField, r: int, a: Mat) -> int:
    acc = 0
    for i in range(r):
        acc = F.add(acc, a[i * r + i])
    return acc


def mat_vec(F: FiniteField, r: int, a: Mat, v: Sequence[int]) -> tuple[int, ...]:
    out = []
    for i in range(r):
        acc = 0
        for k in range(r):
            acc = F.add(acc, F.mul(a[i * r + k], v[k]))
        out.append(acc)
    return tuple(out)


def conjugate(F: FiniteField, r: int, g: Mat, c: Mat) -> Mat:
    """c^-1 g c."""
    return mat_mul(F, r, mat_mul(F, r, mat_inv(F, r, c), g), c)


def _entry(F: FiniteField, x) -> int:
    if isinstance(x, FqElement):
        return F(x).index
    if isinstance(x, (list, tuple)):
        return F(list(x)).index
    return F(int(x)).index


def matrix(F: FiniteField, rows) -> Mat:
    rows = [list(r) for r in rows]
    r = len(rows)
    if any(len(row) != r for row in rows):
        raise GroupError("matrix must be square")
    return tuple(_entry(F, x) for row in rows for x in row)


def matrix_to_json(F: FiniteField, r: int, a: Mat) -> list:
    enc = (lambda x: x) if F.k == 1 else (lambda x: list(F.digits(x)))
    return [[enc(a[i * r + j]) for j in range(r)] for i in range(r)]


def diag(F: FiniteField, *entries) -> Mat:
    r = len(entries)
    return tuple(_entry(F, entries[i]) if i == j else 0 for i in range(r) for j in range(r))


def unipotent(F: FiniteField, lam) -> Mat:
    """[[1, lam], [0, 1]]."""
    return (1, _entry(F, lam), 0, 1)


# -- groups ---------------------------------------------------------------------

class MatrixGroup:
    """A finite subgroup of Gl_r(F) with its enumerated elements.

    ``elements`` is in breadth-first order from the identity; ``generators``
    is the generating set the element list was produced from.
    """

    def __init__(self, F: FiniteField, r: int, generators: Iterable[Mat], elements: Sequence[Mat]):
        self.field = F
        self.r = r
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._table: list[list[int]] | None = None
        self._orders: list[int] | None = None
        self._inverse: list[int] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.index

    @property
    def identity(self) -> Mat:
        return identity(self.r)

    def mul(self, a: Mat, b: Mat) -> Mat:
        return mat_mul(self.field, self.r, a, b)

    def inv(self, a: Mat) -> Mat:
        return mat_inv(self.field, self.r, a)

    def det(self, a: Mat) -> int:
        return mat_det(self.field, self.r, a)

    def trace(self, a: Mat) -> int:
        return mat_trace(self.field, self.r, a)

    @property
    def table(self) -> list[list[int]]:
        """Cayley table on element indices: table[i][j] = index(e_i e_j)."""
        if self._table is None:
            idx, els, mul = self.index, self.elements, self.mul
            self._table = [[idx[mul(a, b)] for b in els] for a in els]
        return self._table

    @property
    def inverse_index(self) -> list[int]:
        if self._inverse is None:
            self._inverse = [self.index[self.inv(g)] for g in self.elements]
        return self._inverse

    @property
    def element_orders(self) -> list[int]:
        if self._orders is None:
            e = self.identity
            orders = []
            for g in self.elements:
                n, x = 1, g
                while x != e:
                    x = self.mul(x, g)
                    n += 1
                orders.append(n)
            self._orders = orders
        return self._orders

    def element_order(self, g: Mat) -> int:
        return self.element_orders[self.index[g]]

    def is_subgroup_of(self, other: MatrixGroup) -> bool:
        return self.field == other.field and self.r == other.r and all(g in other.index for g in self.elements)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def is_normal_in(self, G: MatrixGroup) -> bool:
        return all(
            mat_mul(self.field, self.r, mat_mul(self.field, self.r, g, h), G.inv(g)) in self.index
            for g in G.generators
            for h in self.generators
        )

    def subgroup(self, gens: Iterable[Mat]) -> MatrixGroup:
        gens = tuple(gens)
        for g in gens:
            if g not in self.index:
                raise GroupError("generator not in the ambient group")
        return closure(self.field, self.r, gens)

    def conjugate_by(self, c: Mat) -> MatrixGroup:
        """The group c^-1 G c, keeping the conjugated generators."""
        F, r = self.field, self.r
        ci = mat_inv(F, r, c)
        conj = lambda g: mat_mul(F, r, mat_mul(F, r, ci, g), c)  # noqa: E731
        return MatrixGroup(F, r, [conj(g) for g in self.generators], [conj(g) for g in self.elements])

    def key(self) -> frozenset:
        return frozenset(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixGroup) and self.field == other.field and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"MatrixGroup(order={self.order}, r={self.r}, q={self.field.q}, ngens={len(self.generators)})"


def closure(F: FiniteField, r: int, generators: Iterable[Mat], cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Breadth-first product closure of the generators (right multiplication)."""
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != r * r:
            raise GroupError(f"generator has {len(g)} entries, expected {r * r}")
        if mat_det(F, r, g) == 0:
            raise GroupError("generator is not invertible")
        gens.append(g)
    e = identity(r)
    seen = {e}
    elements = [e]
    queue = deque([e])
    mul = mat_mul
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul(F, r, x, s)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                queue.append(y)
                if len(elements) > cap:
                    raise CapExceeded("closure", len(elements), cap)
    return MatrixGroup(F, r, gens, elements)


def _table_closure(table: list[list[int]], gens: Iterable[int], start: Iterable[int] = (0,)) -> frozenset:
    """Closure of index-generators inside a group with known Cayley table."""
    gens = list(gens)
    seen = set(start)
    queue = list(seen)
    for g in gens:
        if g not in seen:
            seen.add(g)
            queue.append(g)
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        row = table[x]
        for s in gens:
            y = row[s]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _greedy_generators(G: MatrixGroup, members: Sequence[int]) -> list[int]:
    """A generating set (element indices) for the subgroup whose index set is ``members``."""
    target = len(set(members))
    gens: list[int] = []
    current = closure(G.field, G.r, [])
    for m in members:
        if G.elements[m] not in current.index:
            gens.append(m)
            current = closure(G.field, G.r, [G.elements[i] for i in gens])
            if current.order == target:
                break
    return gens


def subgroup_from_indices(G: MatrixGroup, members: Iterable[int], gens: Sequence[int] | None = None) -> MatrixGroup:
    members = sorted(set(members))
    if gens is None:
        gens = _greedy_generators(G, members)
    return closure(G.field, G.r, [G.elements[i] for i in gens])


def subgroup_from_elements(G: MatrixGroup, elements: Iterable[Mat]) -> MatrixGroup:
    """The subgroup with the given element set (must be closed), with a small generating set."""
    idx = [G.index[g] for g in elements]
    elems = [G.elements[i] for i in sorted(idx)]
    gens = []
    current = MatrixGroup(G.field, G.r, [], [G.identity])
    for g in elems:
        if g not in current.index:
            gens.append(g)
            current = closure(G.field, G.r, gens)
            if current.order == len(elems):
                break
    if current.order != len(set(idx)):
        raise GroupError("element set is not a subgroup")
    return current


# -- standard groups ----------------------------------------------------------

def prime_basis(F: FiniteField) -> list[int]:
    """Encodings of 1, x, ..., x^(k-1): an F_p-basis of F."""
    return [F.encode([0] * j + [1]) for j in range(F.k)]


def _transvection(F: FiniteField, r: int, i: int, j: int, lam: int) -> Mat:
    m = list(identity(r))
    m[i * r + j] = lam
    return tuple(m)


def sl_generators(F: FiniteField, r: int) -> list[Mat]:
    gens = []
    for i in range(r):
        for j in range(r):
            if i != j:
                gens.extend(_transvection(F, r, i, j, lam) for lam in prime_basis(F))
    return gens


def gl_generators(F: FiniteField, r: int) -> list[Mat]:
    zeta = F.primitive
    d = list(identity(r))
    d[0] = zeta
    gens = sl_generators(F, r)
    if F.q > 2:
        gens.append(tuple(d))
    return gens


def gl(r: int, F: FiniteField, cap: int = DEFAULT_CAP) -> MatrixGroup:
    return closure(F, r, gl_generators(F, r), cap)


def sl(r: int, F: FiniteField, cap: int = DEFAULT_CAP) -> MatrixGroup:
    return closure(F, r, sl_generators(F, r), cap)


def gl_order(r: int, q: int) -> int:
    n = 1
    for i in range(r):
        n *= q**r - q**i
    return n


def unipotent_group(F: FiniteField, lambdas: Iterable | None = None) -> MatrixGroup:
    """<[[1, lam], [0, 1]] : lam in lambdas>; all of (F, +) by default."""
    lams = prime_basis(F) if lambdas is None else [_entry(F, x) for x in lambdas]
    return closure(F, 2, [(1, lam, 0, 1) for lam in lams])


def borel_group(F: FiniteField, lambdas: Iterable | None, alpha) -> MatrixGroup:
    """<unipotents with the given lambdas, diag(alpha, alpha^-1)>."""
    a = _entry(F, alpha)
    lams = prime_basis(F) if lambdas is None else [_entry(F, x) for x in lambdas]
    return closure(F, 2, [(1, lam, 0, 1) for lam in lams] + [(a, 0, 0, F.inv(a))])


def upper_triangular(F: FiniteField) -> MatrixGroup:
    """All invertible upper-triangular 2x2 matrices."""
    zeta = F.primitive
    gens = [(1, lam, 0, 1) for lam in prime_basis(F)]
    if F.q > 2:
        gens += [(zeta, 0, 0, 1), (1, 0, 0, zeta)]
    return closure(F, 2, gens)


def scalar_group(F: FiniteField, r: int = 2) -> MatrixGroup:
    z = F.primitive
    return closure(F, r, [tuple(z if i == j else 0 for i in range(r) for j in range(r))])


# -- determinant-one part ---------------------------------------------------------

def sl_part(G: MatrixGroup) -> MatrixGroup:
    """H = G ∩ Sl_r(F)."""
    members = [i for i, g in enumerate(G.elements) if G.det(g) == 1]
    if len(members) == G.order:
        return G
    return subgroup_from_indices(G, members)


# -- Sylow subgroups ------------------------------------------------------------

def p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


class Sylow(NamedTuple):
    group: MatrixGroup
    normal: bool


def p_sylow(H: MatrixGroup, prime: int | None = None) -> Sylow:
    """A Sylow subgroup for ``prime`` (default: the characteristic of the field).

    When the Sylow subgroup is normal it is the set of all elements of
    prime-power order, and that canonical subgroup is returned.
    """
    p = prime or H.field.p
    target = p_part(H.order, p)
    orders = H.element_orders
    p_elements = [i for i, o in enumerate(orders) if p_part(o, p) == o]
    if len(p_elements) == target:
        return Sylow(subgroup_from_indices(H, p_elements), True)
    # grow a p-subgroup by p-elements normalising it
    P = closure(H.field, H.r, [])
    while P.order < target:
        for i in p_elements:
            g = H.elements[i]
            if g in P.index:
                continue
            gi = H.inv(g)
            if all(H.mul(H.mul(g, h), gi) in P.index for h in P.generators):
                cand = closure(H.field, H.r, P.generators + (g,))
                if p_part(cand.order, p) == cand.order:
                    P = cand
                    break
        else:  # pragma: no cover - Sylow theory guarantees progress
            raise GroupError("failed to extend p-subgroup")
    return Sylow(P, False)


def _quotient_is_cyclic(H: MatrixGroup, Q: MatrixGroup) -> bool:
    n = H.order // Q.order
    if n == 1:
        return True
    for g in H.elements:
        x, m = g, 1
        while x not in Q.index:
            x = H.mul(x, g)
            m += 1
        if m == n:
            return True
    return False


# -- classification of subgroups of Sl_2 ------------------------------------------

TYPE_NAMES = {
    1: "PrimeToP",
    2: "Dihedral",
    3: "A5Char3",
    4: "SL2Subfield",
    5: "SL2SubfieldExtended",
    6: "Borel",
}


@dataclass(frozen=True)
class SubgroupType:
    kind: int
    params: dict = dc_field(default_factory=dict)

    @property
    def name(self) -> str:
        return TYPE_NAMES[self.kind]

    def to_json(self) -> dict:
        return {"type": self.kind, "name": self.name, "parameters": dict(sorted(self.params.items()))}


def _is_dihedral_odd(H: MatrixGroup) -> int | None:
    """n if H is dihedral of order 2n with n odd, else None."""
    if H.order % 2 or (H.order // 2) % 2 == 0:
        return None
    n = H.order // 2
    orders = H.element_orders
    try:
        c = next(g for g, o in zip(H.elements, orders) if o == n)
    except StopIteration:
        return None
    cyc = closure(H.field, H.r, [c])
    c_inv = H.inv(c)
    for x, o in zip(H.elements, orders):
        if o == 2 and x not in cyc.index:
            if H.mul(H.mul(x, c), H.inv(x)) == c_inv:
                return n
            return None
    return None


def conjugacy_class_reps(H: MatrixGroup) -> list[int]:
    table, inv = H.table, H.inverse_index
    seen: set[int] = set()
    reps = []
    for g in range(H.order):
        if g in seen:
            continue
        reps.append(g)
        for h in range(H.order):
            seen.add(table[table[h][g]][inv[h]])
    return reps


def normal_closure(H: MatrixGroup, members: Iterable[int]) -> frozenset:
    table, inv = H.table, H.inverse_index
    conj = {table[table[h][g]][inv[h]] for g in members for h in range(H.order)}
    return _table_closure(table, sorted(conj))


def _is_a5_type(H: MatrixGroup) -> bool:
    """H or H/{±1} is simple of order 60."""
    F = H.field
    minus = (F.neg(1), 0, 0, F.neg(1))
    z = [0] + ([H.index[minus]] if minus in H.index and minus != H.identity else [])
    if H.order != 60 * len(z):
        return False
    for g in conjugacy_class_reps(H):
        if g in z:
            continue
        if len(normal_closure(H, [g] + z)) != H.order:
            return False
    return True


def _all_gl2(F: FiniteField) -> Iterable[Mat]:
    for m in itertools.product(range(F.q), repeat=4):
        if mat_det(F, 2, m) != 0:
            yield m


CONJUGATION_SEARCH_LIMIT = 10**4


def conjugator_into_subfield(H: MatrixGroup, d: int) -> Mat | None:
    """C with C^-1 H C inside Sl_2(F_{p^d}), by search over Gl_2(F); None if absent or too large."""
    F = H.field
    if gl_order(2, F.q) > CONJUGATION_SEARCH_LIMIT:
        return None
    for c in _all_gl2(F):
        ci = mat_inv(F, 2, c)
        if all(all(F.in_subfield(x, d) for x in mat_mul(F, 2, mat_mul(F, 2, ci, g), c)) for g in H.generators):
            return c
    return None


def _sl2_subfield_degree(H: MatrixGroup) -> int | None:
    F = H.field
    p = F.p
    for d in range(1, F.k + 1):
        if F.k % d:
            continue
        sub_q = p**d
        if H.order != sub_q * (sub_q**2 - 1):
            continue
        if not all(F.in_subfield(H.trace(g), d) for g in H.elements):
            continue
        if gl_order(2, F.q) <= CONJUGATION_SEARCH_LIMIT and conjugator_into_subfield(H, d) is None:
            continue
        return d
    return None


def _index_two_subgroups(H: MatrixGroup) -> list[frozenset]:
    table = H.table
    squares = {table[g][g] for g in range(H.order)}
    K = _table_closure(table, sorted(squares))
    if 2 * len(K) == H.order:
        return [K]
    out = []
    for g in range(H.order):
        if g in K:
            continue
        cand = _table_closure(table, sorted(K | {g}))
        if 2 * len(cand) == H.order and cand not in out:
            out.append(cand)
    return out


def classify(H: MatrixGroup) -> SubgroupType:
    """Type of a subgroup of Sl_2(F) in the order (1), (6), (2), (3), (4), (5)."""
    if H.r != 2:
        raise GroupError("classification is for subgroups of Sl_2")
    if any(H.det(g) != 1 for g in H.generators):
        raise GroupError("H is not contained in Sl_2(F)")
    F = H.field
    p = F.p
    if H.order % p:
        return SubgroupType(1, {"order": H.order})
    Q, normal = p_sylow(H)
    if normal and Q.is_abelian() and _quotient_is_cyclic(H, Q):
        return SubgroupType(6, {"sylow_order": Q.order, "quotient_order": H.order // Q.order})
    if p == 2:
        n = _is_dihedral_odd(H)
        if n is not None:
            return SubgroupType(2, {"n": n})
    if p == 3 and _is_a5_type(H):
        return SubgroupType(3, {"order": H.order})
    d = _sl2_subfield_degree(H)
    if d is not None:
        return SubgroupType(4, {"subfield_size": p**d})
    if p != 2:
        for K in _index_two_subgroups(H):
            sub = subgroup_from_indices(H, K)
            d = _sl2_subfield_degree(sub)
            if d is not None:
                return SubgroupType(5, {"subfield_size": p**d})
    raise Unclassified(f"no subgroup type matched for {H!r}")


# -- unipotent coordinates ---------------------------------------------------------

def _fp_independent(F: FiniteField, vals: Sequence[int]) -> bool:
    from .linalg import rank

    if not vals:
        return True
    return rank([list(F.digits(v)) for v in vals], F.p) == len(vals)


def unipotent_coordinates(Q: MatrixGroup) -> tuple[Mat, list[FqElement]]:
    """Conjugator C with C^-1 Q C upper unitriangular, and F_p-independent lambdas."""
    F = Q.field
    if Q.r != 2:
        raise GroupError("unipotent coordinates need 2x2 matrices")
    if Q.order == 1 or p_part(Q.order, F.p) != Q.order:
        raise GroupError("Q must be a nontrivial p-group")
    fixed = None
    for v in itertools.product(range(F.q), repeat=2):
        if v == (0, 0):
            continue
        if all(mat_vec(F, 2, g, v) == v for g in Q.generators):
            fixed = v
            break
    if fixed is None:
        raise GroupError("Q has no common fixed line")
    lead = next(x for x in fixed if x)
    fixed = tuple(F.div(x, lead) for x in fixed)
    w = (1, 0) if fixed[1] != 0 else (0, 1)
    C = (fixed[0], w[0], fixed[1], w[1])
    conj = Q.conjugate_by(C)
    lambdas: list[int] = []
    for g in itertools.chain(conj.generators, conj.elements):
        if g[0] != 1 or g[2] != 0 or g[3] != 1:
            raise GroupError("conjugated element is not upper unitriangular")
        if g[1] and _fp_independent(F, lambdas + [g[1]]):
            lambdas.append(g[1])
    if F.p ** len(lambdas) != Q.order:
        raise GroupError("lambdas do not span Q")
    return C, [F.from_index(x) for x in lambdas]


# -- subgroup enumeration -----------------------------------------------------------

def subgroups_up_to(G: MatrixGroup, gen_bound: int = 3, cap: int = 10**3) -> list[MatrixGroup]:
    """All subgroups of G generated by at most ``gen_bound`` elements."""
    if G.order > cap:
        raise CapExceeded("subgroups_up_to", G.order, cap)
    table = G.table
    found: dict[frozenset, tuple[int, ...]] = {frozenset([0]): ()}
    frontier = [frozenset([0])]
    for _ in range(gen_bound):
        new = []
        for S in frontier:
            gens = found[S]
            for g in range(1, G.order):
                if g in S:
                    continue
                T = _table_closure(table, (*gens, g), start=S)
                if T not in found:
                    found[T] = (*gens, g)
                    new.append(T)
        frontier = new
    out = [
        MatrixGroup(G.field, G.r, [G.elements[i] for i in gens], [G.elements[i] for i in sorted(S)])
        for S, gens in found.items()
    ]
    # canonical element order (BFS from the stored generators) for downstream use
    out = [closure(G.field, G.r, H.generators) for H in out]
    out.sort(key=lambda H: (H.order, sorted(G.index[g] for g in H.elements)))
    return out


def cyclic_subgroups(G: MatrixGroup) -> list[MatrixGroup]:
    """Distinct cyclic subgroups <g>, in order of first generator."""
    seen: set[frozenset] = set()
    out = []
    for g in G.elements:
        C = closure(G.field, G.r, [g] if g != G.identity else [])
        if C.key() not in seen:
            seen.add(C.key())
            out.append(C)
    return out


def field_of(q: int) -> FiniteField:
    from .algebra import prime_power

    p, k = prime_power(q)
    return ff_construct(p, k)
