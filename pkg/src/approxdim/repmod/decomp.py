"""Endomorphism algebras, Krull-Schmidt decomposition and isomorphism tests."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import exactla as la
from .module import (as_cols, Morphism, Representation, hom_basis, hom_matrix, identity_morphism,
                     linear_combination, submodule)


class FieldTooSmall(ValueError):
    pass


class RandomizationExhausted(RuntimeError):
    pass


SPLIT_BUDGET = 60


def _trace_gram(basis: list[Morphism], other: list[Morphism] | None = None) -> np.ndarray:
    """``G[k, l] = tr(other[l] @ basis[k])`` with traces summed over vertices."""
    other = basis if other is None else other
    p = basis[0].p
    f = np.stack([np.concatenate([c.reshape(-1) for c in g.comps]) for g in basis])
    g = np.stack([np.concatenate([c.T.reshape(-1) for c in h.comps]) for h in other])
    return la.matmul(f, g.T, p)


@dataclass(frozen=True)
class EndAlgebra:
    basis: tuple[Morphism, ...]
    radical: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def top_dim(self) -> int:
        return len(self.basis) - len(self.radical)

    def structure_constants(self) -> np.ndarray:
        """``c[i, j]`` are the coordinates of ``basis[i] @ basis[j]``."""
        m = self.dim
        if m == 0:
            return np.zeros((0, 0, 0), dtype=np.int64)
        p = self.basis[0].p
        mat = hom_matrix(list(self.basis), self.basis[0].flat().size)
        prods = np.stack([(a @ b).flat() for a in self.basis for b in self.basis])
        coeffs = la.solve(mat.T, prods.T, p)
        if coeffs is None:
            raise ArithmeticError("endomorphism products left the span of the basis")
        return coeffs.T.reshape(m, m, m)


def _check_field(m: Representation):
    if m.p <= m.total_dim ** 2:
        raise FieldTooSmall(f"p={m.p} must exceed total_dim^2={m.total_dim ** 2}")


@lru_cache(maxsize=100_000)
def end_algebra(m: Representation) -> EndAlgebra:
    """Basis of ``End(m)`` with its Jacobson radical.

    The radical is the radical of the trace form ``(f, g) -> tr(f g)`` on
    ``m``, which is exact once the characteristic exceeds ``dim m``.
    """
    basis = hom_basis(m, m)
    if m.p <= max(len(basis), m.total_dim):
        raise FieldTooSmall(f"p={m.p} too small for End of dimension {len(basis)}")
    if not basis:
        return EndAlgebra((), ())
    gram = _trace_gram(basis)
    null = la.kernel_basis(gram, m.p)
    rad = tuple(linear_combination(basis, row) for row in null)
    return EndAlgebra(tuple(basis), rad)


def is_indecomposable(m: Representation) -> bool:
    return not m.is_zero and end_algebra(m).top_dim == 1


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[Representation, ...]
    inclusions: tuple[Morphism, ...]

    def iso_matrix(self, v: int) -> np.ndarray:
        cols = [f.comps[v - 1] for f in self.inclusions]
        return np.concatenate(cols, axis=1) if cols else la.zeros(0, 0)


def _try_split(n: Representation, rng: np.random.Generator):
    p = n.p
    basis = list(end_algebra(n).basis)
    for _ in range(SPLIT_BUDGET):
        phi = linear_combination(basis, rng.integers(0, p, size=len(basis)))
        roots: set[int] = set()
        for c in phi.comps:
            if c.shape[0]:
                roots.update(la.poly_roots(la.charpoly(c, p), p))
        for lam in sorted(roots):
            psi = [(c - lam * la.identity(c.shape[0])) % p for c in phi.comps]
            powd = [la.matpow(c, c.shape[0], p) for c in psi]
            kers = [la.kernel_basis(c, p).T if c.shape[0] else la.zeros(0, 0) for c in powd]
            kdim = sum(k.shape[1] for k in kers)
            if 0 < kdim < n.total_dim:
                ims = [la.column_basis(c, p) if c.shape[0] else la.zeros(0, 0) for c in powd]
                return kers, ims
    raise RandomizationExhausted("no splitting endomorphism found")


@lru_cache(maxsize=100_000)
def decompose(m: Representation, seed: int = 0) -> Decomposition:
    """Split ``m`` into indecomposables via Fitting's lemma on random endomorphisms."""
    if m.is_zero:
        return Decomposition((), ())
    _check_field(m)
    rng = np.random.default_rng(seed)
    parts, incls = [], []
    stack = [(m, identity_morphism(m))]
    while stack:
        n, incl = stack.pop()
        if is_indecomposable(n):
            parts.append(n)
            incls.append(incl)
            continue
        kers, ims = _try_split(n, rng)
        for spaces in (ims, kers):
            sub, sincl = submodule(n, [as_cols(s, n.dims[v]) for v, s in enumerate(spaces)])
            stack.append((sub, incl @ sincl))
    order = sorted(range(len(parts)), key=lambda k: (-parts[k].total_dim, parts[k].dims))
    return Decomposition(tuple(parts[k] for k in order), tuple(incls[k] for k in order))


def indecomposables_isomorphic(x: Representation, y: Representation) -> bool:
    """Deterministic test for indecomposable ``x`` and ``y``.

    They are isomorphic iff some composite ``g f`` of basis maps is not
    nilpotent, i.e. has nonzero trace in the local ring ``End(x)``.
    """
    if x.dims != y.dims:
        return False
    if x == y:
        return True
    hxy, hyx = hom_basis(x, y), hom_basis(y, x)
    if not hxy or not hyx:
        return False
    return bool(_trace_gram(hxy, hyx).any())


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> bool:
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    if m.dims != n.dims:
        return False
    if m == n or m.is_zero:
        return True
    _check_field(m)
    basis = hom_basis(m, n)
    if not basis:
        return False
    rng = np.random.default_rng(seed)
    for _ in range(3):
        f = linear_combination(basis, rng.integers(0, m.p, size=len(basis)))
        if f.is_iso():
            return True
    return multiset_match(decompose(m, seed).parts, decompose(n, seed).parts)


def multiset_match(xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        for k, y in enumerate(remaining):
            if indecomposables_isomorphic(x, y):
                del remaining[k]
                break
        else:
            return False
    return True


def iso_classes(mods, key=lambda x: x) -> list[list]:
    """Group items whose ``key`` modules are isomorphic indecomposables."""
    classes: list[list] = []
    for item in mods:
        for cls in classes:
            if indecomposables_isomorphic(key(cls[0]), key(item)):
                cls.append(item)
                break
        else:
            classes.append([item])
    return classes
