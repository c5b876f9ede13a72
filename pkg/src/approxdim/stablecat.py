"""Stable Hom, almost split sequences, nodes and the standing-hypothesis report."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import exactla as la
from .algebra import Algebra, blocks
from .repmod import (Morphism, Representation, decompose, direct_sum_full, end_algebra,
                     hom_basis, hom_dim, injective, is_indecomposable, is_injective, is_isomorphic,
                     is_projective, lift_through, linear_combination, projective, projective_cover,
                     simple, sub_quotient, syzygy_with_inclusion, tau, tau_inverse)


class IsInjective(ValueError):
    pass


class NotIndecomposable(ValueError):
    pass


def stable_hom_dim(m: Representation, n: Representation) -> int:
    """``dim Hom(m, n)`` modulo maps factoring through a projective."""
    total = hom_dim(m, n)
    if total == 0:
        return 0
    cover = projective_cover(n)
    through = [(cover.map @ g).flat() for g in hom_basis(m, cover.module)]
    if not through:
        return total
    return total - la.rank(np.stack(through), m.p)


@dataclass(frozen=True)
class AlmostSplitSequence:
    left: Representation
    middle: Representation
    right: Representation
    mono: Morphism
    epi: Morphism

    def middle_parts(self) -> tuple[Representation, ...]:
        return decompose(self.middle).parts

    def to_json(self):
        return {"left": list(self.left.dims), "middle": list(self.middle.dims),
                "right": list(self.right.dims),
                "middle_parts": [list(x.dims) for x in self.middle_parts()]}


def _coords_modulo(sub: np.ndarray, comp: np.ndarray, vec: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of ``vec`` along ``comp`` in the decomposition ``span(sub) + span(comp)`` (rows)."""
    basis = np.vstack([sub, comp]) if sub.shape[0] else comp
    x = la.solve(basis.T, vec.reshape(-1, 1), p)
    if x is None:
        raise ArithmeticError("cocycle left the space of cocycles")
    return x[sub.shape[0]:, 0]


def splits(mono: Morphism) -> bool:
    """Whether ``mono`` admits a retraction."""
    p = mono.p
    candidates = hom_basis(mono.target, mono.source)
    if not candidates:
        return mono.source.is_zero
    ident = np.concatenate([np.eye(d, dtype=np.int64).reshape(-1) for d in mono.source.dims])
    rows = np.stack([(r @ mono).flat() for r in candidates])
    return la.solve(rows.T, ident.reshape(-1, 1), p) is not None


@lru_cache(maxsize=10_000)
def almost_split_starting_at(m: Representation) -> AlmostSplitSequence:
    if not is_indecomposable(m):
        raise NotIndecomposable("almost split sequences start at indecomposables")
    if is_injective(m):
        raise IsInjective("an injective module starts no almost split sequence")
    p = m.p
    x = tau_inverse(m)
    cover = projective_cover(x)
    omega, incl = syzygy_with_inclusion(x)
    cocycles = hom_basis(omega, m)
    boundaries = [g @ incl for g in hom_basis(cover.module, m)]
    width = cocycles[0].flat().size if cocycles else 0
    bmat = la.row_basis(np.stack([b.flat() for b in boundaries]), p) if boundaries else la.zeros(0, width)
    comp = []
    span = bmat
    for c in cocycles:
        trial = np.vstack([span, c.flat()[None, :]])
        if la.rank(trial, p) > span.shape[0]:
            span = trial
            comp.append(c)
    if not comp:
        raise ArithmeticError("Ext^1(tau^-1 M, M) vanished")
    # right action of rad End(x) on Ext^1(x, m), expressed on the complement basis
    blocks_ = []
    for r in end_algebra(x).radical:
        lifted = lift_through(cover.map, r @ cover.map, cover.tops)
        moved = lifted @ incl
        restricted = []
        for v in range(x.algebra.n):
            sol = la.solve(incl.comps[v], moved.comps[v], p)
            if sol is None:
                raise ArithmeticError("lifted endomorphism does not preserve the syzygy")
            restricted.append(sol)
        r_hat = Morphism(omega, omega, restricted)
        cols = [_coords_modulo(bmat, np.stack([c.flat() for c in comp]), (c @ r_hat).flat(), p)
                for c in comp]
        blocks_.append(np.stack(cols, axis=1))
    if blocks_:
        ann = la.kernel_basis(np.vstack(blocks_), p)
    else:
        ann = la.identity(len(comp))
    if ann.shape[0] == 0:
        raise ArithmeticError("no Ext class annihilated by the radical")
    cls = linear_combination(comp, ann[0])
    # pushout of 0 -> omega -> P0 -> x -> 0 along cls
    both, incs, projs = direct_sum_full([m, cover.module])
    neg_incl = incl.scale(p - 1)
    glue = incs[0] @ cls + incs[1] @ neg_incl
    sq = sub_quotient(glue)
    e = sq.cokernel
    mono = sq.cokernel_proj @ incs[0]
    # E -> x induced by (0, pi)
    comps = []
    for v in range(x.algebra.n):
        pr = sq.cokernel_proj.comps[v]
        img = la.matmul(cover.map.comps[v], projs[1].comps[v], p)
        sec = la.right_inverse(pr, p) if pr.shape[0] else la.zeros(pr.shape[1], 0)
        comps.append(la.matmul(img, sec, p))
    epi = Morphism(e, x, comps)
    seq = AlmostSplitSequence(m, e, x, mono, epi)
    _check_sequence(seq)
    return seq


def _check_sequence(seq: AlmostSplitSequence):
    if not seq.mono.is_mono() or not seq.epi.is_epi() or not (seq.epi @ seq.mono).is_zero():
        raise ArithmeticError("pushout did not give a short exact sequence")
    if not seq.epi.is_valid():
        raise ArithmeticError("induced map is not a module map")
    if splits(seq.mono):
        raise ArithmeticError("almost split sequence splits")


def verify_almost_split(seq: AlmostSplitSequence) -> bool:
    """Non-split, exact, end terms related by tau, and dimension vectors add up."""
    dims_ok = all(a + c == b for a, b, c in zip(seq.left.dims, seq.middle.dims, seq.right.dims))
    exact = (seq.mono.is_mono() and seq.epi.is_epi() and (seq.epi @ seq.mono).is_zero())
    return dims_ok and exact and not splits(seq.mono) and is_isomorphic(tau(seq.right), seq.left)


def is_node(s: Representation) -> bool:
    if s.total_dim != 1:
        raise ValueError("nodes are simple modules")
    if is_projective(s) or is_injective(s):
        return False
    seq = almost_split_starting_at(s)
    return all(is_projective(x) for x in seq.middle_parts())


@dataclass(frozen=True)
class HypothesisReport:
    nodes: tuple[int, ...]
    semisimple_blocks: tuple[tuple[int, ...], ...]
    self_injective: bool
    proj_inj: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.nodes and not self.semisimple_blocks

    def to_json(self):
        return {"nodes": [f"S{i}" for i in self.nodes],
                "semisimple_blocks": [list(b) for b in self.semisimple_blocks],
                "self_injective": self.self_injective,
                "proj_inj": [f"P{i}" for i in self.proj_inj]}


@lru_cache(maxsize=100)
def hypothesis_report(alg: Algebra) -> HypothesisReport:
    nodes = tuple(i for i in alg.vertices if is_node(simple(alg, i)))
    semis = tuple(tuple(b.vertices) for b in blocks(alg) if b.semisimple)
    injs = [injective(alg, j) for j in alg.vertices]
    tops = tuple(i for i in alg.vertices
                 if any(is_isomorphic(projective(alg, i), e) for e in injs))
    return HypothesisReport(nodes, semis, len(tops) == alg.n, tops)
