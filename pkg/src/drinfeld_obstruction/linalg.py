"""Row reduction over F_p on int64 numpy arrays.

All functions take and return arrays with entries in ``range(p)``. Pivots are
chosen left to right, top to bottom, so every output is deterministic.
"""
from __future__ import annotations

import numpy as np


def as_mod(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = as_mod(a, p).copy()
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_basis(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Reduced basis of the row space (shape ``(rank, ncols)``)."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        n = ncols if ncols is not None else (a.shape[1] if a.ndim == 2 else 0)
        return np.zeros((0, n), dtype=np.int64)
    return rref(a, p)[0]


def nullspace(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : a @ x = 0 mod p}."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] == 0:
        n = ncols if ncols is not None else a.shape[-1]
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(a, p)
    n = a.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, f]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b, or None if inconsistent."""
    a = as_mod(a, p)
    b = as_mod(b, p).reshape(-1, 1)
    aug = np.hstack([a, b])
    r, pivots = rref(aug, p)
    n = a.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n]
    return x


def in_span(basis, v, p: int) -> bool:
    basis = np.asarray(basis, dtype=np.int64)
    v = as_mod(v, p).reshape(1, -1)
    if basis.size == 0:
        return not v.any()
    return rank(np.vstack([basis, v]), p) == rank(basis, p)


def same_span(a, b, p: int) -> bool:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    ra, rb = rank(a, p) if a.size else 0, rank(b, p) if b.size else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(np.vstack([a, b]), p) == ra


def intersect(a, b, p: int, ncols: int) -> np.ndarray:
    """Basis of rowspace(a) ∩ rowspace(b)."""
    a = row_basis(a, p, ncols)
    b = row_basis(b, p, ncols)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    # x a = y b  <=>  (x, -y) in the left nullspace of [a; b]
    stacked = np.vstack([a, (-b) % p])
    coeffs = nullspace(stacked.T, p)
    if coeffs.shape[0] == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    return row_basis(coeffs[:, : a.shape[0]] @ a % p, p, ncols)


def complement_in(sub, ambient, p: int) -> np.ndarray:
    """Rows of ``ambient`` (in order) that extend a basis of ``sub`` to one of the span of both.

    The returned rows are representatives of a basis of span(ambient)/span(sub)
    when span(sub) is contained in span(ambient).
    """
    sub = np.asarray(sub, dtype=np.int64)
    ambient = np.asarray(ambient, dtype=np.int64)
    ncols = ambient.shape[1] if ambient.ndim == 2 else sub.shape[1]
    current = row_basis(sub, p, ncols) if sub.size else np.zeros((0, ncols), dtype=np.int64)
    r = current.shape[0]
    picked = []
    for v in ambient:
        trial = np.vstack([current, v[None, :]])
        if rank(trial, p) > r:
            current = trial
            r += 1
            picked.append(v % p)
    if not picked:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(picked, dtype=np.int64)


class RowSpaceAccumulator:
    """Incrementally maintained reduced row basis; feeds large equation sets in chunks."""

    def __init__(self, ncols: int, p: int):
        self.p = p
        self.ncols = ncols
        self.basis = np.zeros((0, ncols), dtype=np.int64)

    def add(self, rows) -> None:
        rows = as_mod(rows, self.p)
        if rows.size == 0:
            return
        self.basis = row_basis(np.vstack([self.basis, rows]), self.p, self.ncols)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]
