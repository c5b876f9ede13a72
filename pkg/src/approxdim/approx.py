"""Left add-omega approximations and the homological dimensions built on them.

The approximation chain of a module ``M`` is built from minimal left
approximations at every step, so its verdict is a function of ``(omega, M)``
alone.  Values that could not be settled within ``cutoff`` steps are reported
as ``AtLeast(cutoff)``; ``Infinity`` is only ever produced by a certifying
argument (a zero cokernel, or self-injectivity for dominant dimension).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import exactla as la
from .algebra import Algebra
from .repmod import (Morphism, Representation, decompose, direct_sum_full, dsum,
                     end_algebra, hom_basis, hom_dim, indecomposables_isomorphic,
                     injective_envelope, is_injective, is_projective, iso_classes,
                     projective, projective_cover, regular_module, sub_quotient, syzygy, cosyzygy,
                     zero_module, zero_morphism)
from .repmod.decomp import _trace_gram


class DegenerateOmega(ValueError):
    pass


class HypothesisUnverifiable(RuntimeError):
    pass


class NotWakamatsu(ValueError):
    pass


# ---------------------------------------------------------------- ExtendedNat

FINITE, INFINITY, AT_LEAST = "finite", "infinity", "at_least"


@dataclass(frozen=True)
class ExtendedNat:
    kind: str
    value: int = 0

    @staticmethod
    def finite(n: int) -> ExtendedNat:
        return ExtendedNat(FINITE, int(n))

    @staticmethod
    def infinity() -> ExtendedNat:
        return ExtendedNat(INFINITY, 0)

    @staticmethod
    def at_least(n: int) -> ExtendedNat:
        return ExtendedNat(AT_LEAST, int(n))

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == INFINITY

    @property
    def is_cutoff(self) -> bool:
        return self.kind == AT_LEAST

    def capped(self, cap: int) -> int:
        """Value clipped to ``cap``; infinite and cutoff values become ``cap`` once they reach it."""
        if self.kind == INFINITY:
            return cap
        return min(self.value, cap)

    def lower(self) -> float:
        return float("inf") if self.kind == INFINITY else self.value

    def upper(self) -> float:
        return self.value if self.kind == FINITE else float("inf")

    def ge(self, n: int) -> bool | None:
        """``self >= n`` when decidable, else ``None``."""
        if self.lower() >= n:
            return True
        if self.upper() < n:
            return False
        return None

    def definitely_less(self, other: ExtendedNat) -> bool:
        """True only when every value consistent with ``self`` is below every value consistent with ``other``."""
        return self.upper() < other.lower()

    def render(self) -> str:
        if self.kind == FINITE:
            return str(self.value)
        if self.kind == INFINITY:
            return "Infinity (certified)"
        return f">= {self.value} (cutoff)"

    def to_json(self):
        if self.kind == FINITE:
            return {"kind": "finite", "value": self.value}
        if self.kind == INFINITY:
            return {"kind": "infinity"}
        return {"kind": "at_least", "value": self.value}

    def __str__(self):
        return self.render()


def cap_equal(a: ExtendedNat, b: ExtendedNat, cap: int) -> bool:
    """Equality after clipping at ``cap``; exact when both values are certified."""
    if a.kind != AT_LEAST and b.kind != AT_LEAST:
        if a.kind != b.kind:
            # a certified Infinity agrees with a finite value only above the cap
            fin = a if a.kind == FINITE else b
            return fin.value >= cap
        return a.value == b.value
    return a.capped(cap) == b.capped(cap)


# ---------------------------------------------------------------- approximations

@dataclass(frozen=True)
class Summands:
    """Distinct indecomposable summands of ``omega``, one per isomorphism class."""

    parts: tuple[Representation, ...]
    multiplicities: tuple[int, ...]


@lru_cache(maxsize=10_000)
def summand_classes(omega: Representation) -> Summands:
    parts = decompose(omega).parts
    classes = iso_classes(parts)
    return Summands(tuple(c[0] for c in classes), tuple(len(c) for c in classes))


@lru_cache(maxsize=100_000)
def _radical_maps(wi: Representation, wj: Representation, same: bool) -> tuple[Morphism, ...]:
    if not same:
        return tuple(hom_basis(wi, wj))
    return end_algebra(wj).radical


@dataclass(frozen=True)
class Approximation:
    source: Representation
    target: Representation
    map: Morphism
    classes: tuple[Representation, ...]
    multiplicities: tuple[int, ...]


def minimal_left_approximation(m: Representation, omega: Representation) -> Approximation:
    """Minimal left add-omega approximation ``f: m -> E``.

    For each indecomposable class ``W_j`` the components of ``f`` run over a
    basis of ``Hom(m, W_j)`` modulo maps factoring through a radical map of
    ``add omega``; such an ``f`` is an approximation and no component can be
    dropped.
    """
    alg = m.algebra
    p = m.p
    ws = summand_classes(omega).parts
    homs = [hom_basis(m, w) for w in ws]
    chosen: list[list[Morphism]] = []
    for j, wj in enumerate(ws):
        basis = homs[j]
        if not basis:
            chosen.append([])
            continue
        width = basis[0].flat().size
        rad_rows = []
        for i, wi in enumerate(ws):
            for h in _radical_maps(wi, wj, i == j):
                for g in homs[i]:
                    rad_rows.append((h @ g).flat())
        span = la.row_basis(np.stack(rad_rows), p) if rad_rows else la.zeros(0, width)
        r = span.shape[0]
        picks = []
        for g in basis:
            trial = np.vstack([span, g.flat()[None, :]])
            if la.rank(trial, p) > r:
                span, r = trial, r + 1
                picks.append(g)
        chosen.append(picks)
    mults = tuple(len(c) for c in chosen)
    targets = [w for w, c in zip(ws, chosen) for _ in c]
    maps = [g for c in chosen for g in c]
    if not targets:
        e = zero_module(alg)
        return Approximation(m, e, zero_morphism(m, e), ws, mults)
    e, incs, _ = direct_sum_full(targets)
    f = incs[0] @ maps[0]
    for inc, g in zip(incs[1:], maps[1:]):
        f = f + inc @ g
    return Approximation(m, e, f, ws, mults)


def is_left_minimal(f: Morphism) -> bool:
    """Every ``h`` with ``h f = f`` is invertible.

    Such ``h`` form ``1 + K`` where ``K = {k : k f = 0}`` is a left ideal of
    ``End(E)``; all of ``1 + K`` is invertible exactly when ``K`` lies in the
    radical, which we test against the trace form.
    """
    e = f.target
    if e.is_zero:
        return True
    p = f.p
    ends = hom_basis(e, e)
    rows = np.stack([(h @ f).flat() for h in ends]) if f.source.total_dim else la.zeros(len(ends), 0)
    coeffs = la.left_kernel_basis(rows, p) if rows.shape[1] else la.identity(len(ends))
    if coeffs.shape[0] == 0:
        return True
    gram = _trace_gram(ends)
    return not la.matmul(coeffs, gram, p).any()


def is_left_approximation(f: Morphism, omega: Representation) -> bool:
    """``Hom(E, W) -> Hom(M, W)`` is onto for every indecomposable summand ``W`` of omega."""
    p = f.p
    for w in summand_classes(omega).parts:
        target = hom_dim(f.source, w)
        if target == 0:
            continue
        comps = [(g @ f).flat() for g in hom_basis(f.target, w)]
        got = la.rank(np.stack(comps), p) if comps else 0
        if got != target:
            return False
    return True


# ---------------------------------------------------------------- chains

@dataclass
class ChainStep:
    source_dims: tuple[int, ...]
    multiplicities: tuple[int, ...]
    mono: bool
    cokernel_dims: tuple[int, ...] | None

    def to_json(self):
        return {"source_dims": list(self.source_dims),
                "multiplicities": list(self.multiplicities),
                "mono": self.mono,
                "cokernel_dims": None if self.cokernel_dims is None else list(self.cokernel_dims)}


@dataclass
class ApproximationChain:
    steps: list[ChainStep] = field(default_factory=list)
    verdict: ExtendedNat | None = None

    def to_json(self):
        return {"verdict": self.verdict.to_json() if self.verdict else None,
                "steps": [s.to_json() for s in self.steps]}


@lru_cache(maxsize=100_000)
def _lapp(omega: Representation, m: Representation, cutoff: int):
    chain = ApproximationChain()
    if m.is_zero:
        chain.verdict = ExtendedNat.infinity()
        return chain.verdict, chain
    t = m
    for i in range(1, cutoff + 1):
        approx = minimal_left_approximation(t, omega)
        sq = sub_quotient(approx.map)
        if not sq.kernel.is_zero:
            chain.steps.append(ChainStep(t.dims, approx.multiplicities, False, None))
            chain.verdict = ExtendedNat.finite(i - 1)
            return chain.verdict, chain
        c = sq.cokernel
        chain.steps.append(ChainStep(t.dims, approx.multiplicities, True, c.dims))
        if c.is_zero:
            chain.verdict = ExtendedNat.infinity()
            return chain.verdict, chain
        t = c
    chain.verdict = ExtendedNat.at_least(cutoff)
    return chain.verdict, chain


def lapp(omega: Representation, m: Representation, cutoff: int = 12) -> tuple[ExtendedNat, ApproximationChain]:
    """omega-left approximation dimension of ``m`` with its evidence chain."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    if omega.is_zero:
        raise DegenerateOmega("omega must be nonzero")
    if omega.algebra is not m.algebra:
        raise ValueError("omega and m live over different algebras")
    return _lapp(omega, m, cutoff)


def lapp_value(omega, m, cutoff: int = 12) -> ExtendedNat:
    return lapp(omega, m, cutoff)[0]


def fadim(omega: Representation, cutoff: int = 12) -> ExtendedNat:
    return lapp(omega, regular_module(omega.algebra), cutoff)[0]


def in_cogen(m: Representation, omega: Representation) -> bool:
    """``m`` embeds in a module of ``add omega``."""
    if m.is_zero:
        return True
    return minimal_left_approximation(m, omega).map.is_mono()


# ---------------------------------------------------------------- Ext and pd

def ext_dim(m: Representation, n_mod: Representation, n: int) -> int:
    """``dim Ext^n(m, n_mod)`` from the minimal projective resolution of ``m``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return hom_dim(m, n_mod)
    prev = syzygy(m, n - 1)
    cover = projective_cover(prev).module
    cur = syzygy(m, n)
    return hom_dim(cur, n_mod) - hom_dim(cover, n_mod) + hom_dim(prev, n_mod)


def ext_dim_injective(m: Representation, n_mod: Representation, n: int) -> int:
    """Same dimension computed from the minimal injective coresolution of the second argument."""
    if n == 0:
        return hom_dim(m, n_mod)
    prev = cosyzygy(n_mod, n - 1)
    env = injective_envelope(prev).module
    cur = cosyzygy(n_mod, n)
    return hom_dim(m, cur) - hom_dim(m, env) + hom_dim(m, prev)


def pd(m: Representation, cutoff: int = 12) -> ExtendedNat:
    if m.is_zero:
        return ExtendedNat.finite(0)
    for n in range(cutoff):
        if syzygy(m, n + 1).is_zero:
            return ExtendedNat.finite(n)
    return ExtendedNat.at_least(cutoff)


def injective_dimension(m: Representation, cutoff: int = 12) -> ExtendedNat:
    if m.is_zero:
        return ExtendedNat.finite(0)
    for n in range(cutoff):
        if cosyzygy(m, n + 1).is_zero:
            return ExtendedNat.finite(n)
    return ExtendedNat.at_least(cutoff)


def self_orthogonal(omega: Representation, degrees) -> dict[int, bool]:
    return {i: ext_dim(omega, omega, i) == 0 for i in degrees}


# ---------------------------------------------------------------- tilting

@dataclass(frozen=True)
class Verdict:
    status: str
    n: int | None = None
    reason: str = ""

    def to_json(self):
        out = {"status": self.status}
        if self.n is not None:
            out["n"] = self.n
        if self.reason:
            out["reason"] = self.reason
        return out

    def render(self) -> str:
        if self.status == "yes":
            return f"yes ({self.n})"
        if self.status == "no":
            return f"no ({self.reason})"
        return self.status


def _first_ext_failure(omega, degrees) -> int | None:
    for i in degrees:
        if ext_dim(omega, omega, i):
            return i
    return None


@lru_cache(maxsize=10_000)
def is_tilting(omega: Representation, cutoff: int = 12) -> Verdict:
    if omega.is_zero:
        return Verdict("no", reason="zero module")
    d = pd(omega, cutoff)
    degrees = range(1, (d.value if d.is_finite else cutoff) + 1)
    bad = _first_ext_failure(omega, degrees)
    if bad is not None:
        return Verdict("no", reason=f"self-orthogonality fails in degree {bad}")
    if not d.is_finite:
        return Verdict("inconclusive", reason="projective dimension not settled")
    v = lapp(omega, regular_module(omega.algebra), cutoff)[0]
    if v.is_infinite:
        return Verdict("yes", n=d.value)
    if v.is_finite:
        return Verdict("no", reason="no add-omega coresolution of the regular module")
    return Verdict("inconclusive", reason="coresolution not settled")


@lru_cache(maxsize=10_000)
def is_wakamatsu(omega: Representation, cutoff: int = 12) -> Verdict:
    if omega.is_zero:
        return Verdict("no", reason="zero module")
    d = pd(omega, cutoff)
    degrees = range(1, (d.value if d.is_finite else cutoff) + 1)
    bad = _first_ext_failure(omega, degrees)
    if bad is not None:
        return Verdict("no", reason=f"self-orthogonality fails in degree {bad}")
    fa = fadim(omega, cutoff)
    if fa.is_finite:
        return Verdict("no", reason=f"faithful dimension {fa.value}")
    if is_tilting(omega, cutoff).status == "yes":
        return Verdict("certified")
    if fa.is_infinite and d.is_finite:
        return Verdict("certified")
    return Verdict("up_to_cutoff")


# ---------------------------------------------------------------- dominant dimension

@lru_cache(maxsize=1_000)
def projective_injectives(alg: Algebra) -> tuple[Representation, ...]:
    """Indecomposable projective-injective modules, one per vertex that carries one."""
    return tuple(projective(alg, i) for i in alg.vertices if is_injective(projective(alg, i)))


def proj_inj_sum(alg: Algebra) -> Representation:
    return dsum(alg, projective_injectives(alg))


@lru_cache(maxsize=1_000)
def is_self_injective(alg: Algebra) -> bool:
    return len(projective_injectives(alg)) == alg.n


def domdim(m: Representation, cutoff: int = 12, method: str = "coresolution") -> ExtendedNat:
    alg = m.algebra
    if method not in ("lapp", "coresolution"):
        raise ValueError(f"unknown method {method!r}")
    if is_self_injective(alg) or m.is_zero:
        return ExtendedNat.infinity()
    if method == "lapp":
        q = proj_inj_sum(alg)
        if q.is_zero:
            return ExtendedNat.finite(0)
        return lapp(q, m, cutoff)[0]
    t = m
    for k in range(cutoff):
        if t.is_zero:
            return ExtendedNat.infinity()
        if not is_projective(injective_envelope(t).module):
            return ExtendedNat.finite(k)
        t = cosyzygy(t)
    if t.is_zero:
        return ExtendedNat.infinity()
    return ExtendedNat.at_least(cutoff)


# ---------------------------------------------------------------- torsionfree, G-dimension

def torsionfree_check(omega: Representation, m: Representation, n: int, cutoff: int = 12) -> bool:
    """``m`` is omega-n-torsionfree: ``fadim omega >= n+2`` and ``lapp(omega, m) = n``."""
    if cutoff < n + 2:
        raise ValueError("cutoff must be at least n + 2")
    fa = fadim(omega, cutoff).ge(n + 2)
    if fa is None:
        raise HypothesisUnverifiable(f"faithful dimension not settled up to {n + 2}")
    if not fa:
        return False
    return lapp(omega, m, cutoff)[0] == ExtendedNat.finite(n)


def gdim_zero(omega: Representation, m: Representation, cutoff: int = 12) -> Verdict:
    if is_wakamatsu(omega, cutoff).status == "no":
        raise NotWakamatsu("omega is not Wakamatsu tilting")
    v = lapp(omega, m, cutoff)[0]
    if v.is_finite:
        return Verdict("no", reason=f"lapp is {v.value}")
    for i in range(1, cutoff + 1):
        if ext_dim(m, omega, i):
            return Verdict("no", reason=f"Ext^{i}(M, omega) is nonzero")
    return Verdict("yes_up_to_cutoff")


def basic_part(m: Representation) -> Representation:
    """One copy of each indecomposable summand."""
    return dsum(m.algebra, summand_classes(m).parts)


def is_basic(m: Representation) -> bool:
    return all(k == 1 for k in summand_classes(m).multiplicities)


def in_add(m: Representation, omega: Representation) -> bool:
    ws = summand_classes(omega).parts
    return all(any(indecomposables_isomorphic(x, w) for w in ws) for x in decompose(m).parts)
