"""Projective covers, injective envelopes, syzygies, duality, transpose and AR translates.

Everything on the right-module side goes through the opposite algebra, so
``dual`` sends a module over ``A`` to one over ``A.op`` and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import exactla as la
from .module import (Morphism, Representation, dsum, from_generators, generator_offsets, kernel,
                     cokernel, projective, radical_socle_top, zero_module)


class LiftFailed(ArithmeticError):
    pass


@dataclass(frozen=True)
class Cover:
    """A projective cover ``map: module -> target`` with ``module = sum P(tops)``."""

    module: Representation
    map: Morphism
    tops: tuple[int, ...]


@dataclass(frozen=True)
class Envelope:
    module: Representation
    map: Morphism
    socles: tuple[int, ...]


def dual(m: Representation) -> Representation:
    """Vector-space dual; a module over the opposite algebra."""
    alg = m.algebra.op
    return Representation(alg, m.dims, [a.T for a in m.maps])


def dual_morphism(f: Morphism) -> Morphism:
    return Morphism(dual(f.target), dual(f.source), [c.T for c in f.comps])


@lru_cache(maxsize=100_000)
def projective_cover(m: Representation) -> Cover:
    p = m.p
    alg = m.algebra
    (rad, rad_incl), _, _ = radical_socle_top(m)
    tops, images = [], []
    for v in alg.vertices:
        d = m.dims[v - 1]
        span = rad_incl.comps[v - 1]
        r = span.shape[1]
        for j in range(d):
            e = la.zeros(d, 1)
            e[j, 0] = 1
            trial = np.concatenate([span, e], axis=1)
            if la.rank(trial, p) > r:
                span, r = trial, r + 1
                tops.append(v)
                images.append(e)
    pi = from_generators(alg, tops, m, images)
    if not pi.is_epi():
        raise LiftFailed("projective cover is not surjective")
    return Cover(pi.source, pi, tuple(tops))


@lru_cache(maxsize=100_000)
def injective_envelope(m: Representation) -> Envelope:
    cov = projective_cover(dual(m))
    iota = dual_morphism(cov.map)
    return Envelope(iota.target, iota, cov.tops)


@lru_cache(maxsize=100_000)
def _syzygy1(m: Representation) -> tuple[Representation, Morphism]:
    return kernel(projective_cover(m).map)


@lru_cache(maxsize=100_000)
def _cosyzygy1(m: Representation) -> tuple[Representation, Morphism]:
    return cokernel(injective_envelope(m).map)


def syzygy(m: Representation, k: int = 1) -> Representation:
    """``k``-th syzygy for ``k >= 1``; negative ``k`` gives cosyzygies."""
    if k == 0:
        return m
    for _ in range(abs(k)):
        m = (_syzygy1(m) if k > 0 else _cosyzygy1(m))[0]
    return m


def cosyzygy(m: Representation, k: int = 1) -> Representation:
    return syzygy(m, -k)


def syzygy_with_inclusion(m: Representation) -> tuple[Representation, Morphism]:
    return _syzygy1(m)


def lift_through(epi: Morphism, g: Morphism, tops) -> Morphism:
    """``h`` with ``epi @ h == g`` where ``g.source = sum P(tops)``."""
    alg = g.source.algebra
    p = g.p
    offs = generator_offsets(alg, list(tops))
    images = []
    for i, off in zip(tops, offs):
        y = g.comps[i - 1][:, off:off + 1]
        x = la.solve(epi.comps[i - 1], y, p)
        if x is None:
            raise LiftFailed("element has no preimage")
        images.append(x)
    return from_generators(alg, list(tops), epi.source, images)


def presentation(m: Representation) -> tuple[Cover, Cover, Morphism]:
    """Minimal projective presentation ``P1 -> P0 -> m -> 0``; the third entry is ``P1 -> P0``."""
    c0 = projective_cover(m)
    omega, incl = kernel(c0.map)
    c1 = projective_cover(omega)
    return c0, c1, incl @ c1.map


@lru_cache(maxsize=100_000)
def transpose(m: Representation) -> Representation:
    """Auslander-Bridger transpose, a module over the opposite algebra."""
    alg = m.algebra
    opp = alg.op
    c0, c1, d = presentation(m)
    if not c0.tops:
        return zero_module(opp)
    src_offs = generator_offsets(alg, list(c1.tops))
    # layout of P0 at each vertex: summand r occupies a contiguous slice
    slices = []
    for v in alg.vertices:
        pos, row = 0, []
        for i in c0.tops:
            size = len(alg.basis_from_to(i, v))
            row.append((pos, pos + size))
            pos += size
        slices.append(row)
    images = []
    target = dsum(opp, [projective(opp, j) for j in c1.tops])
    for r, i in enumerate(c0.tops):
        parts = []
        for s, j in enumerate(c1.tops):
            col = d.comps[j - 1][:, src_offs[s]]
            a, b = slices[j - 1][r]
            # coordinates over paths i -> j in A read as op-paths j -> i
            parts.append(col[a:b])
        images.append(np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64))
    dual_map = from_generators(opp, list(c0.tops), target, images)
    return cokernel(dual_map)[0]


def tau(m: Representation, direction: str = "forward") -> Representation:
    """AR translate ``D Tr`` (forward) or ``Tr D`` (inverse)."""
    if direction == "forward":
        return dual(transpose(m))
    if direction == "inverse":
        return transpose(dual(m))
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def tau_inverse(m: Representation) -> Representation:
    return tau(m, "inverse")


def is_projective(m: Representation) -> bool:
    return projective_cover(m).module.dims == m.dims


def is_injective(m: Representation) -> bool:
    return injective_envelope(m).module.dims == m.dims
