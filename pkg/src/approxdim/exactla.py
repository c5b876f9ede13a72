"""Dense linear algebra over a prime field GF(p).

Matrices are plain ``numpy`` int64 arrays with entries in ``[0, p)``.  Every
product of two reduced entries fits comfortably in int64 for the default
modulus, so reductions happen after each multiply-accumulate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 32003


class DimensionMismatch(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 3 or not _is_prime(self.p):
            raise ValueError(f"field modulus must be a prime >= 3, got {self.p}")
        # int64 accumulation of row updates must not overflow
        if self.p >= 3_000_000_000:
            raise ValueError("modulus too large for int64 accumulation")


def as_matrix(a, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if shape is not None:
        m = m.reshape(shape)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {m.shape}")
    return np.mod(m, p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    if a.shape[1] * (p - 1) ** 2 < 2**62:
        return (a @ b) % p
    # chunk the inner dimension to stay inside int64
    out = zeros(a.shape[0], b.shape[1])
    step = max(1, (2**62) // ((p - 1) ** 2))
    for k in range(0, a.shape[1], step):
        out = (out + a[:, k:k + step] @ b[k:k + step, :]) % p
    return out


def inv_scalar(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(int(a), -1, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns ``(R, pivots)`` with ``rank = len(pivots)``.

    Pivots are chosen as the leftmost nonzero column and, within it, the
    smallest row index, so results are reproducible.
    """
    r = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = inv_scalar(int(r[row, col]), p)
        if inv != 1:
            r[row] = (r[row] * inv) % p
        colvals = r[:, col].copy()
        colvals[row] = 0
        hit = np.flatnonzero(colvals)
        if hit.size:
            r[hit] = (r[hit] - np.outer(colvals[hit], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(a, p)[1])


def kernel_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of ``{v : a @ v == 0}``."""
    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    r, pivots = rref(a, p)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, f]) % p
    return basis


def left_kernel_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of ``{w : w @ a == 0}``."""
    return kernel_basis(a.T, p)


def column_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Columns of ``a`` at pivot positions; a basis of the column space."""
    if a.shape[1] == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a, p)
    return a[:, pivots] % p


def row_basis(a: np.ndarray, p: int) -> np.ndarray:
    r, pivots = rref(a, p)
    return r[: len(pivots)]


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """A particular ``X`` with ``a @ X == b``, or ``None`` if inconsistent."""
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"row counts differ: {a.shape} vs {b.shape}")
    n = a.shape[1]
    k = b.shape[1]
    if a.shape[0] == 0:
        return zeros(n, k)
    aug = np.concatenate([a % p, b % p], axis=1)
    r, pivots = rref(aug, p)
    if any(c >= n for c in pivots):
        return None
    x = zeros(n, k)
    for i, c in enumerate(pivots):
        x[c] = r[i, n:]
    return x


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch("inverse of a non-square matrix")
    x = solve(a, identity(n), p)
    if x is None or rank(a, p) != n:
        raise ZeroDivisionError("matrix is singular")
    return x


def right_inverse(a: np.ndarray, p: int) -> np.ndarray:
    """``s`` with ``a @ s == I``; ``a`` must have full row rank."""
    s = solve(a, identity(a.shape[0]), p)
    if s is None:
        raise ValueError("matrix does not have full row rank")
    return s


def left_inverse(a: np.ndarray, p: int) -> np.ndarray:
    """``r`` with ``r @ a == I``; ``a`` must have full column rank."""
    return right_inverse(a.T, p).T


def in_column_space(a: np.ndarray, v: np.ndarray, p: int) -> bool:
    return solve(a, v.reshape(-1, 1) if v.ndim == 1 else v, p) is not None


def charpoly(a: np.ndarray, p: int) -> list[int]:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(xI - a)`` (Faddeev-LeVerrier; needs p > n)."""
    n = a.shape[0]
    coeffs = [1]
    m = zeros(n, n)
    for k in range(1, n + 1):
        m = (matmul(a, m, p) + coeffs[-1] * identity(n)) % p
        am = matmul(a, m, p)
        c = (-int(np.trace(am) % p) * inv_scalar(k, p)) % p
        coeffs.append(c)
    return coeffs


def poly_roots(coeffs: list[int], p: int) -> list[int]:
    """All roots in GF(p), by evaluating at every field element."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        acc = (acc * xs + c) % p
    return [int(x) for x in np.flatnonzero(acc == 0)]


def matpow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = a % p
    while e:
        if e & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        e >>= 1
    return result


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
