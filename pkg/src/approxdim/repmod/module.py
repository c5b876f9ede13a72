"""Representations, morphisms, Hom spaces and kernel/image/cokernel."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import exactla as la
from ..algebra import Algebra, path_target


class AlgebraMismatch(ValueError):
    pass


# counts rank-nullity verifications made by sub_quotient
STATS = {"sub_quotient_checks": 0, "rank_nullity_violations": 0}


def as_cols(x, rows: int) -> np.ndarray:
    """View ``x`` as a matrix with ``rows`` rows; empty input becomes ``rows x 0``."""
    x = np.asarray(x, dtype=np.int64)
    if x.size == 0:
        return la.zeros(rows, 0)
    return x.reshape(rows, -1)


def _freeze(m: np.ndarray) -> np.ndarray:
    m = np.ascontiguousarray(m, dtype=np.int64)
    m.setflags(write=False)
    return m


class Representation:
    """A finite-dimensional module: a vector space per vertex and a matrix per arrow.

    ``maps[k]`` is the matrix of arrow ``k: i -> j``; it has shape
    ``(dims[j-1], dims[i-1])`` and acts on column vectors.  Instances are
    immutable and compare (and hash) by content.
    """

    __slots__ = ("algebra", "dims", "maps", "name", "_key", "_paths")

    def __init__(self, algebra: Algebra, dims, maps, name: str = ""):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n or min(self.dims, default=0) < 0:
            raise ValueError(f"need {algebra.n} nonnegative dimensions, got {self.dims}")
        p = algebra.p
        arrows = algebra.quiver.arrows
        if len(maps) != len(arrows):
            raise ValueError(f"need {len(arrows)} arrow matrices, got {len(maps)}")
        frozen = []
        for a, m in zip(arrows, maps):
            shape = (self.dims[a.target - 1], self.dims[a.source - 1])
            m = np.asarray(m, dtype=np.int64).reshape(shape) % p
            frozen.append(_freeze(m))
        self.maps = tuple(frozen)
        self.name = name
        self._key = None
        self._paths = {}

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    @property
    def p(self) -> int:
        return self.algebra.p

    def key(self):
        if self._key is None:
            self._key = (id(self.algebra), self.dims, tuple(m.tobytes() for m in self.maps))
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        return isinstance(other, Representation) and self.key() == other.key()

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<{label}dims={self.dims} over {self.algebra.name or '?'}>"

    def dim_at(self, v: int) -> int:
        return self.dims[v - 1]

    def path_matrix(self, path) -> np.ndarray:
        """Matrix of a path ``(source, arrows)`` acting from its source space to its target space."""
        m = self._paths.get(path)
        if m is None:
            src, arrows = path
            if not arrows:
                m = la.identity(self.dims[src - 1])
            else:
                m = self.path_matrix((src, arrows[:-1]))
                m = la.matmul(self.maps[arrows[-1]], m, self.p)
            self._paths[path] = m
        return m

    def basis_matrix(self, k: int) -> np.ndarray:
        return self.path_matrix(self.algebra.basis[k])

    def element_matrix(self, i: int, j: int, coords: np.ndarray) -> np.ndarray:
        """Matrix ``M_i -> M_j`` of an algebra element supported on paths from i to j."""
        out = la.zeros(self.dims[j - 1], self.dims[i - 1])
        for k in self.algebra.basis_from_to(i, j):
            c = int(coords[k]) % self.p
            if c:
                out = (out + c * self.basis_matrix(k)) % self.p
        return out


class Morphism:
    """Per-vertex matrices ``comps[v-1]: source_v -> target_v`` intertwining the arrow maps."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: Representation, target: Representation, comps):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("source and target live over different algebras")
        self.source = source
        self.target = target
        p = source.p
        out = []
        for v, c in enumerate(comps):
            shape = (target.dims[v], source.dims[v])
            out.append(_freeze(np.asarray(c, dtype=np.int64).reshape(shape) % p))
        if len(out) != source.algebra.n:
            raise ValueError("one component per vertex is required")
        self.comps = tuple(out)

    @property
    def p(self) -> int:
        return self.source.p

    def __repr__(self):
        return f"<Morphism {self.source.dims} -> {self.target.dims}>"

    def __matmul__(self, other: Morphism) -> Morphism:
        """``g @ f`` is the composite "first f, then g"."""
        if other.target != self.source:
            raise ValueError("morphisms are not composable")
        p = self.p
        return Morphism(other.source, self.target,
                        [la.matmul(g, f, p) for g, f in zip(self.comps, other.comps)])

    def __add__(self, other: Morphism) -> Morphism:
        return Morphism(self.source, self.target, [(a + b) % self.p for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other: Morphism) -> Morphism:
        return Morphism(self.source, self.target, [(a - b) % self.p for a, b in zip(self.comps, other.comps)])

    def scale(self, c: int) -> Morphism:
        return Morphism(self.source, self.target, [(c * a) % self.p for a in self.comps])

    def flat(self) -> np.ndarray:
        parts = [c.reshape(-1) for c in self.comps]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def is_zero(self) -> bool:
        return all(not c.any() for c in self.comps)

    def is_valid(self) -> bool:
        p = self.p
        for k, a in enumerate(self.source.algebra.quiver.arrows):
            left = la.matmul(self.comps[a.target - 1], self.source.maps[k], p)
            right = la.matmul(self.target.maps[k], self.comps[a.source - 1], p)
            if not np.array_equal(left, right):
                return False
        return True

    def ranks(self) -> list[int]:
        return [la.rank(c, self.p) for c in self.comps]

    def is_mono(self) -> bool:
        return all(r == c.shape[1] for r, c in zip(self.ranks(), self.comps))

    def is_epi(self) -> bool:
        return all(r == c.shape[0] for r, c in zip(self.ranks(), self.comps))

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_mono()


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, [la.identity(d) for d in m.dims])


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(m, n, [la.zeros(e, d) for d, e in zip(m.dims, n.dims)])


def morphism_from_flat(m: Representation, n: Representation, vec: np.ndarray) -> Morphism:
    comps, pos = [], 0
    for d, e in zip(m.dims, n.dims):
        comps.append(vec[pos:pos + d * e].reshape(e, d))
        pos += d * e
    return Morphism(m, n, comps)


def linear_combination(basis: list[Morphism], coeffs) -> Morphism:
    src, tgt = basis[0].source, basis[0].target
    vec = np.zeros_like(basis[0].flat())
    p = src.p
    for c, f in zip(coeffs, basis):
        vec = (vec + int(c) * f.flat()) % p
    return morphism_from_flat(src, tgt, vec)


# ---------------------------------------------------------------- constructions

def zero_module(alg: Algebra) -> Representation:
    return Representation(alg, [0] * alg.n, [la.zeros(0, 0) for _ in alg.quiver.arrows])


def simple(alg: Algebra, i: int) -> Representation:
    dims = [1 if v == i else 0 for v in alg.vertices]
    maps = [la.zeros(dims[a.target - 1], dims[a.source - 1]) for a in alg.quiver.arrows]
    return Representation(alg, dims, maps, name=f"S{i}")


@lru_cache(maxsize=None)
def _projective(alg: Algebra, i: int) -> Representation:
    rows_at = {v: alg.basis_from_to(i, v) for v in alg.vertices}
    dims = [len(rows_at[v]) for v in alg.vertices]
    maps = []
    for k, a in enumerate(alg.quiver.arrows):
        src_b, tgt_b = rows_at[a.source], rows_at[a.target]
        m = la.zeros(len(tgt_b), len(src_b))
        ab = alg.arrow_basis[k]
        for col, b in enumerate(src_b):
            prod = alg.mult[b, ab]
            for row, t in enumerate(tgt_b):
                m[row, col] = prod[t]
        maps.append(m)
    return Representation(alg, dims, maps, name=f"P{i}")


def projective(alg: Algebra, i: int) -> Representation:
    """Indecomposable projective at ``i``: paths starting at ``i``, graded by target."""
    if not 1 <= i <= alg.n:
        raise ValueError(f"vertex {i} out of range")
    return _projective(alg, i)


def injective(alg: Algebra, i: int) -> Representation:
    """Indecomposable injective at ``i``, the dual of the opposite algebra's projective."""
    from .functors import dual
    m = dual(projective(alg.op, i))
    m.name = f"I{i}"
    return m


def standard_module(alg: Algebra, kind: str, i: int) -> Representation:
    if not 1 <= i <= alg.n:
        raise ValueError(f"vertex {i} out of range")
    if kind == "simple":
        return simple(alg, i)
    if kind == "projective":
        return projective(alg, i)
    if kind == "injective":
        return injective(alg, i)
    raise ValueError(f"unknown standard module kind {kind!r}")


def direct_sum_full(mods: list[Representation]):
    """Direct sum with canonical injections and projections."""
    if not mods:
        raise ValueError("empty direct sum needs an algebra; use zero_module")
    alg = mods[0].algebra
    for m in mods:
        if m.algebra is not alg:
            raise AlgebraMismatch("summands over different algebras")
    dims = [sum(m.dims[v] for m in mods) for v in range(alg.n)]
    maps = [la.block_diag([m.maps[k] for m in mods]) for k in range(len(alg.quiver.arrows))]
    total = Representation(alg, dims, maps)
    injections, projections = [], []
    offs = [0] * alg.n
    for m in mods:
        inj, proj = [], []
        for v in range(alg.n):
            e = la.zeros(dims[v], m.dims[v])
            e[offs[v]:offs[v] + m.dims[v], :] = la.identity(m.dims[v])
            inj.append(e)
            proj.append(e.T.copy())
            offs[v] += m.dims[v]
        injections.append(Morphism(m, total, inj))
        projections.append(Morphism(total, m, proj))
    return total, injections, projections


def direct_sum(*mods: Representation) -> Representation:
    mods = [m for m in mods]
    if len(mods) == 1:
        return mods[0]
    return direct_sum_full(mods)[0]


def dsum(alg: Algebra, mods) -> Representation:
    mods = list(mods)
    if not mods:
        return zero_module(alg)
    return direct_sum(*mods)


def power(m: Representation, k: int) -> Representation:
    return dsum(m.algebra, [m] * k)


def regular_module(alg: Algebra) -> Representation:
    return dsum(alg, [projective(alg, i) for i in alg.vertices])


def dual_regular_module(alg: Algebra) -> Representation:
    return dsum(alg, [injective(alg, i) for i in alg.vertices])


def validate_module(m: Representation) -> list[tuple[int, np.ndarray]]:
    """Violated relations as ``(relation index, residual matrix)``; empty when valid."""
    out = []
    for r, rel in enumerate(m.algebra.relations):
        src = rel[0][1][0]
        tgt = path_target(m.algebra.quiver, rel[0][1])
        acc = la.zeros(m.dims[tgt - 1], m.dims[src - 1])
        for c, path in rel:
            acc = (acc + c * m.path_matrix(path)) % m.p
        if acc.any():
            out.append((r, acc))
    return out


def base_change(m: Representation, mats) -> tuple[Representation, Morphism]:
    """Transport ``m`` along invertible per-vertex matrices; returns the new module and the iso ``m -> new``."""
    p = m.p
    invs = [la.inverse(g, p) for g in mats]
    maps = []
    for k, a in enumerate(m.algebra.quiver.arrows):
        maps.append(la.matmul(la.matmul(mats[a.target - 1], m.maps[k], p), invs[a.source - 1], p))
    new = Representation(m.algebra, m.dims, maps)
    return new, Morphism(m, new, mats)


# ---------------------------------------------------------------- Hom spaces

def _hom_system(m: Representation, n: Representation) -> np.ndarray:
    p = m.p
    alg = m.algebra
    offs, pos = [], 0
    for d, e in zip(m.dims, n.dims):
        offs.append(pos)
        pos += d * e
    blocks = []
    for k, a in enumerate(alg.quiver.arrows):
        s, t = a.source - 1, a.target - 1
        rows = n.dims[t] * m.dims[s]
        if rows == 0:
            continue
        eq = la.zeros(rows, pos)
        if n.dims[t] * m.dims[t]:
            eq[:, offs[t]:offs[t] + n.dims[t] * m.dims[t]] += np.kron(la.identity(n.dims[t]), m.maps[k].T)
        if n.dims[s] * m.dims[s]:
            eq[:, offs[s]:offs[s] + n.dims[s] * m.dims[s]] -= np.kron(n.maps[k], la.identity(m.dims[s]))
        blocks.append(eq % p)
    if not blocks:
        return la.zeros(0, pos)
    return np.concatenate(blocks)


@lru_cache(maxsize=200_000)
def _hom_basis(m: Representation, n: Representation) -> tuple[Morphism, ...]:
    ker = la.kernel_basis(_hom_system(m, n), m.p)
    return tuple(morphism_from_flat(m, n, row) for row in ker)


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("Hom between modules over different algebras")
    return list(_hom_basis(m, n))


@lru_cache(maxsize=200_000)
def _hom_dim(m: Representation, n: Representation) -> int:
    system = _hom_system(m, n)
    return system.shape[1] - la.rank(system, m.p)


def hom_dim(m: Representation, n: Representation) -> int:
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("Hom between modules over different algebras")
    return _hom_dim(m, n)


def hom_matrix(basis: list[Morphism], width: int) -> np.ndarray:
    """Stack flattened morphisms as rows."""
    if not basis:
        return la.zeros(0, width)
    return np.stack([f.flat() for f in basis])


# ---------------------------------------------------------------- sub / quotient

def submodule(m: Representation, spaces) -> tuple[Representation, Morphism]:
    """Submodule spanned by per-vertex column bases (assumed arrow-stable and independent)."""
    p = m.p
    spaces = [as_cols(s, m.dims[v]) for v, s in enumerate(spaces)]
    lefts = [la.left_inverse(s, p) if s.shape[1] else la.zeros(0, s.shape[0]) for s in spaces]
    maps = []
    for k, a in enumerate(m.algebra.quiver.arrows):
        s, t = a.source - 1, a.target - 1
        maps.append(la.matmul(lefts[t], la.matmul(m.maps[k], spaces[s], p), p))
    sub = Representation(m.algebra, [s.shape[1] for s in spaces], maps)
    return sub, Morphism(sub, m, spaces)


def quotient(m: Representation, spaces) -> tuple[Representation, Morphism]:
    """Quotient by the submodule spanned by per-vertex column bases."""
    p = m.p
    projs, sections = [], []
    for v, s in enumerate(spaces):
        s = as_cols(s, m.dims[v])
        if s.shape[1]:
            proj = la.left_kernel_basis(s, p)
        else:
            proj = la.identity(m.dims[v])
        projs.append(proj)
        sections.append(la.right_inverse(proj, p) if proj.shape[0] else la.zeros(m.dims[v], 0))
    maps = []
    for k, a in enumerate(m.algebra.quiver.arrows):
        s, t = a.source - 1, a.target - 1
        maps.append(la.matmul(projs[t], la.matmul(m.maps[k], sections[s], p), p))
    q = Representation(m.algebra, [pr.shape[0] for pr in projs], maps)
    return q, Morphism(m, q, projs)


def generated_submodule(m: Representation, vectors) -> tuple[Representation, Morphism]:
    """Smallest submodule containing the given ``(vertex, vector)`` pairs."""
    p = m.p
    spaces = [la.zeros(d, 0) for d in m.dims]
    pending = list(vectors)
    while pending:
        v, x = pending.pop()
        x = np.asarray(x, dtype=np.int64).reshape(-1, 1) % p
        cur = spaces[v - 1]
        if not x.any() or (cur.shape[1] and la.in_column_space(cur, x, p)):
            continue
        spaces[v - 1] = np.concatenate([cur, x], axis=1)
        for k, a in enumerate(m.algebra.quiver.arrows):
            if a.source == v:
                pending.append((a.target, la.matmul(m.maps[k], x, p)))
    return submodule(m, spaces)


@dataclass(frozen=True)
class SubQuotient:
    kernel: Representation
    kernel_incl: Morphism
    image: Representation
    image_epi: Morphism
    image_incl: Morphism
    cokernel: Representation
    cokernel_proj: Morphism


def sub_quotient(f: Morphism) -> SubQuotient:
    p = f.p
    kers, ims = [], []
    for v, c in enumerate(f.comps):
        kers.append(la.kernel_basis(c, p).T if c.shape[1] else la.zeros(0, 0))
        ims.append(la.column_basis(c, p) if c.shape[0] else la.zeros(0, 0))
        if kers[-1].shape[1] + ims[-1].shape[1] != f.source.dims[v]:
            STATS["rank_nullity_violations"] += 1
            raise ArithmeticError("rank-nullity violated in sub_quotient")
        STATS["sub_quotient_checks"] += 1
    kernel, kincl = submodule(f.source, [as_cols(k, f.source.dims[v]) for v, k in enumerate(kers)])
    image, iincl = submodule(f.target, [as_cols(i, f.target.dims[v]) for v, i in enumerate(ims)])
    epi_comps = []
    for v, c in enumerate(f.comps):
        basis = iincl.comps[v]
        epi_comps.append(la.matmul(la.left_inverse(basis, p), c, p) if basis.shape[1] else la.zeros(0, c.shape[1]))
    iepi = Morphism(f.source, image, epi_comps)
    coker, cproj = quotient(f.target, iincl.comps)
    for v in range(f.source.algebra.n):
        if image.dims[v] + coker.dims[v] != f.target.dims[v]:
            STATS["rank_nullity_violations"] += 1
            raise ArithmeticError("rank-nullity violated in sub_quotient")
    return SubQuotient(kernel, kincl, image, iepi, iincl, coker, cproj)


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    p = f.p
    kers = [la.kernel_basis(c, p).T if c.shape[1] else la.zeros(c.shape[1], 0) for c in f.comps]
    return submodule(f.source, [as_cols(k, f.source.dims[v]) for v, k in enumerate(kers)])


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    p = f.p
    ims = [la.column_basis(c, p) if c.shape[0] else la.zeros(0, 0) for c in f.comps]
    return quotient(f.target, [as_cols(i, f.target.dims[v]) for v, i in enumerate(ims)])


def radical_socle_top(m: Representation):
    """``(rad, rad_incl), (soc, soc_incl), (top, top_proj)``."""
    p = m.p
    rad_spaces, soc_spaces = [], []
    arrows = m.algebra.quiver.arrows
    for v in m.algebra.vertices:
        d = m.dims[v - 1]
        incoming = [m.maps[k] for k, a in enumerate(arrows) if a.target == v]
        cols = np.concatenate(incoming, axis=1) if incoming else la.zeros(d, 0)
        rad_spaces.append(la.column_basis(cols, p) if cols.shape[1] and d else la.zeros(d, 0))
        outgoing = [m.maps[k] for k, a in enumerate(arrows) if a.source == v]
        rows = np.concatenate(outgoing, axis=0) if outgoing else la.zeros(0, d)
        soc_spaces.append(la.kernel_basis(rows, p).T if d else la.zeros(0, 0))
    rad = submodule(m, [as_cols(s, m.dims[v]) for v, s in enumerate(rad_spaces)])
    soc = submodule(m, [as_cols(s, m.dims[v]) for v, s in enumerate(soc_spaces)])
    top = quotient(m, rad[1].comps)
    return rad, soc, top


def from_generators(alg: Algebra, tops: list[int], target: Representation, images) -> Morphism:
    """Morphism from ``P(tops[0]) + P(tops[1]) + ...`` sending generator ``r`` to ``images[r]``."""
    source = dsum(alg, [projective(alg, i) for i in tops])
    p = alg.p
    comps = []
    for v in alg.vertices:
        cols = []
        for i, x in zip(tops, images):
            x = np.asarray(x, dtype=np.int64).reshape(-1, 1)
            for k in alg.basis_from_to(i, v):
                cols.append(la.matmul(target.basis_matrix(k), x, p))
        comps.append(np.concatenate(cols, axis=1) if cols else la.zeros(target.dims[v - 1], 0))
    return Morphism(source, target, comps)


def generator_offsets(alg: Algebra, tops: list[int]) -> list[int]:
    """Position of each summand's generator inside ``sum P(tops)`` at its top vertex."""
    seen = {v: 0 for v in alg.vertices}
    out = []
    for i in tops:
        out.append(seen[i])
        seen_dims = projective(alg, i).dims
        for v in alg.vertices:
            seen[v] += seen_dims[v - 1]
    return out
