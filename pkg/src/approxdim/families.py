"""Generated module families: indecomposables, random modules, tilting searches."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from . import exactla as la
from .algebra import Algebra
from .approx import ext_dim, is_tilting, is_wakamatsu
from .repmod import (Representation, base_change, decompose, dsum, generated_submodule,
                     indecomposables_isomorphic, injective, is_injective, is_projective,
                     projective, quotient, radical_socle_top, tau, tau_inverse)
from .stablecat import almost_split_starting_at


def _add_new(found: list[Representation], pending: list[Representation], x: Representation,
             max_dim: int):
    if x.is_zero or x.total_dim > max_dim:
        return
    for y in found:
        if indecomposables_isomorphic(x, y):
            return
    found.append(x)
    pending.append(x)


@lru_cache(maxsize=100)
def indecomposables(alg: Algebra, max_dim: int = 12, limit: int = 200) -> tuple[Representation, ...]:
    """Indecomposables reachable from the projectives and injectives along the AR quiver.

    Neighbours of ``X`` are its translates, the middle summands of the almost
    split sequence starting at ``X``, summands of ``rad X`` for projective
    ``X`` and of ``X / soc X`` for injective ``X``.  For a connected
    representation-finite algebra this is every indecomposable.
    """
    found: list[Representation] = []
    pending: list[Representation] = []
    for i in alg.vertices:
        _add_new(found, pending, projective(alg, i), max_dim)
        _add_new(found, pending, injective(alg, i), max_dim)
    while pending and len(found) < limit:
        x = pending.pop(0)
        neigh = []
        proj, inj = is_projective(x), is_injective(x)
        if not proj:
            neigh.append(tau(x))
        if not inj:
            neigh.append(tau_inverse(x))
            neigh.extend(almost_split_starting_at(x).middle_parts())
        if proj:
            (rad, _), _, _ = radical_socle_top(x)
            neigh.extend(decompose(rad).parts)
        if inj:
            _, (_, soc_incl), _ = radical_socle_top(x)
            q, _ = quotient(x, soc_incl.comps)
            neigh.extend(decompose(q).parts)
        for y in neigh:
            for part in decompose(y).parts:
                _add_new(found, pending, part, max_dim)
    found.sort(key=lambda m: (m.total_dim, m.dims))
    return tuple(found)


def random_invertible(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.integers(0, p, size=(n, n))
        if la.rank(g, p) == n:
            return g


def scramble(m: Representation, rng: np.random.Generator) -> Representation:
    """Random base change of ``m`` (an isomorphic copy)."""
    mats = [random_invertible(d, m.p, rng) for d in m.dims]
    return base_change(m, mats)[0]


def random_module(alg: Algebra, rng: np.random.Generator, max_dim: int = 8,
                  tries: int = 20) -> Representation:
    """A random quotient of a small sum of projectives, then a random base change."""
    for _ in range(tries):
        k = int(rng.integers(1, 3))
        tops = [int(rng.integers(1, alg.n + 1)) for _ in range(k)]
        big = dsum(alg, [projective(alg, i) for i in tops])
        gens = []
        for _ in range(int(rng.integers(0, 3))):
            v = int(rng.integers(1, alg.n + 1))
            if big.dims[v - 1]:
                gens.append((v, rng.integers(0, alg.p, size=big.dims[v - 1])))
        sub, incl = generated_submodule(big, gens)
        q, _ = quotient(big, incl.comps)
        if 0 < q.total_dim <= max_dim:
            return scramble(q, rng)
    return scramble(projective(alg, int(rng.integers(1, alg.n + 1))), rng)


def random_sum_of_indecomposables(alg: Algebra, rng: np.random.Generator, count: int,
                                  max_dim: int = 12) -> tuple[Representation, list[Representation]]:
    pool = indecomposables(alg)
    picks = [pool[int(rng.integers(0, len(pool)))] for _ in range(count)]
    m = dsum(alg, picks)
    if m.total_dim > max_dim:
        return random_sum_of_indecomposables(alg, rng, max(1, count - 1), max_dim)
    return scramble(m, rng), picks


def _compatible_sets(alg: Algebra, pool, size_range):
    """Subsets of ``pool`` with pairwise vanishing ``Ext^1`` (including self-extensions)."""
    rigid = [i for i, x in enumerate(pool) if ext_dim(x, x, 1) == 0]
    ok = {(i, j): ext_dim(pool[i], pool[j], 1) == 0 and ext_dim(pool[j], pool[i], 1) == 0
          for i in rigid for j in rigid if i < j}
    for size in size_range:
        for combo in combinations(rigid, size):
            if all(ok[(a, b)] for a, b in combinations(combo, 2)):
                yield combo


@lru_cache(maxsize=100)
def basic_tilting_modules(alg: Algebra, cutoff: int = 12) -> tuple[Representation, ...]:
    """Basic tilting modules, searched over sets of ``n`` pairwise Ext^1-orthogonal indecomposables."""
    pool = indecomposables(alg)
    out = []
    for combo in _compatible_sets(alg, pool, [alg.n]):
        t = dsum(alg, [pool[i] for i in combo])
        if is_tilting(t, cutoff).status == "yes":
            out.append(t)
    return tuple(out)


@lru_cache(maxsize=100)
def basic_wakamatsu_modules(alg: Algebra, cutoff: int = 12) -> tuple[Representation, ...]:
    """Basic modules whose Wakamatsu verdict is not negative, over all Ext^1-compatible subsets."""
    pool = indecomposables(alg)
    out = []
    for combo in _compatible_sets(alg, pool, range(1, len(pool) + 1)):
        w = dsum(alg, [pool[i] for i in combo])
        if is_wakamatsu(w, cutoff).status != "no":
            out.append(w)
    return tuple(out)
