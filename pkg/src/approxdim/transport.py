"""Transport maps along explicit stable equivalences and the transfer checks.

A pair ``(Lambda, Gamma)`` carries an object-level functor ``F`` between the
stable categories.  Modules are split as ``Y + I' + P'`` (no injective
summands / injective without projective summands / projective-injective) and
sent to ``F'(Y) + F(I') + Q'`` where ``F' = tau_Gamma F tau_Lambda^-1``.
``F`` only sees the stable category, so projective summands are stripped
before it is applied; ``F'`` strips injective summands instead.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .algebra import Algebra
from .approx import (ExtendedNat, cap_equal, ext_dim, fadim, domdim, gdim_zero, in_add,
                     is_basic, is_self_injective, is_tilting, is_wakamatsu, lapp, pd,
                     proj_inj_sum, self_orthogonal, torsionfree_check,
                     HypothesisUnverifiable)
from .corpus import corpus_algebra
from .families import (basic_tilting_modules, basic_wakamatsu_modules, indecomposables,
                       random_sum_of_indecomposables)
from .repmod import (Representation, decompose, dsum, dual_regular_module,
                     is_injective, is_isomorphic, is_projective, regular_module, syzygy, tau,
                     tau_inverse, zero_module)
from .stablecat import HypothesisReport, hypothesis_report


class NotSelfInjective(ValueError):
    pass


class HypothesisFailed(ValueError):
    pass


# ---------------------------------------------------------------- functors

@dataclass(frozen=True)
class StableFunctorSpec:
    kind: str  # "identity" or "syzygy"
    source: Algebra
    target: Algebra
    power: int = 0

    def __post_init__(self):
        if self.kind not in ("identity", "syzygy"):
            raise ValueError(f"unknown functor kind {self.kind!r}")
        if self.kind == "syzygy":
            if self.power == 0:
                raise ValueError("syzygy power must be nonzero")
            if self.source is not self.target:
                raise ValueError("syzygy functors are self-equivalences")
            if not is_self_injective(self.source):
                raise NotSelfInjective(f"{self.source.name} is not self-injective")
        elif self.source is not self.target:
            raise ValueError("identity functor needs source = target")

    def inverse(self) -> StableFunctorSpec:
        if self.kind == "identity":
            return StableFunctorSpec("identity", self.target, self.source)
        return StableFunctorSpec("syzygy", self.target, self.source, -self.power)

    def label(self) -> str:
        return "Id" if self.kind == "identity" else f"Omega^{self.power}"


def _drop(m: Representation, test: Callable[[Representation], bool]) -> Representation:
    parts = [x for x in decompose(m).parts if not test(x)]
    return dsum(m.algebra, parts)


def strip_projective(m: Representation) -> Representation:
    return _drop(m, is_projective)


def strip_injective(m: Representation) -> Representation:
    return _drop(m, is_injective)


class _Memo:
    """Thread-safe memo; entries are idempotent so concurrent writers agree."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: dict = {}

    def get_or_compute(self, key, fn):
        with self._lock:
            if key in self._data:
                return self._data[key]
        value = fn()
        with self._lock:
            self._data[key] = value
        return value

    def clear(self):
        with self._lock:
            self._data.clear()


FUNCTOR_MEMO = _Memo()


def _spec_key(f: StableFunctorSpec):
    return (f.kind, id(f.source), id(f.target), f.power)


def apply_F(f: StableFunctorSpec, m: Representation) -> Representation:
    if m.algebra is not f.source:
        raise ValueError("module is not over the functor's source algebra")

    def run():
        x = strip_projective(m)
        if f.kind == "identity" or x.is_zero:
            return x if not x.is_zero else zero_module(f.target)
        return syzygy(x, f.power)

    return FUNCTOR_MEMO.get_or_compute(("F", _spec_key(f), m.key()), run)


def apply_F_prime(f: StableFunctorSpec, m: Representation) -> Representation:
    if m.algebra is not f.source:
        raise ValueError("module is not over the functor's source algebra")

    def run():
        x = strip_injective(m)
        if x.is_zero:
            return zero_module(f.target)
        return tau(apply_F(f, tau_inverse(x)))

    return FUNCTOR_MEMO.get_or_compute(("F'", _spec_key(f), m.key()), run)


# ---------------------------------------------------------------- splits and correspondences

@dataclass(frozen=True)
class SummandSplit:
    Y: Representation
    Iprime: Representation
    Pprime: Representation
    y_parts: tuple[Representation, ...] = ()
    i_parts: tuple[Representation, ...] = ()
    p_parts: tuple[Representation, ...] = ()


def split_module(m: Representation) -> SummandSplit:
    ys, is_, ps = [], [], []
    for x in decompose(m).parts:
        proj, inj = is_projective(x), is_injective(x)
        if proj and inj:
            ps.append(x)
        elif inj:
            is_.append(x)
        else:
            ys.append(x)
    alg = m.algebra
    return SummandSplit(dsum(alg, ys), dsum(alg, is_), dsum(alg, ps), tuple(ys), tuple(is_), tuple(ps))


def transport(f: StableFunctorSpec, m: Representation, qprime: Representation | None = None) -> Representation:
    """``F'(Y) + F(I') + Q'`` for ``m = Y + I' + P'``."""
    s = split_module(m)
    parts = [apply_F_prime(f, s.Y), apply_F(f, s.Iprime)]
    if qprime is not None:
        parts.append(qprime)
    return dsum(f.target, [x for x in parts if not x.is_zero])


def phi(f: StableFunctorSpec, omega: Representation) -> Representation:
    if omega.is_zero:
        raise ValueError("phi needs a nonzero module")
    return transport(f, omega, proj_inj_sum(f.target))


def psi(f: StableFunctorSpec, nu: Representation) -> Representation:
    return phi(f.inverse(), nu)


# ---------------------------------------------------------------- pairs

@dataclass(frozen=True)
class PairSpec:
    name: str
    lam: Algebra
    gamma: Algebra
    functor: StableFunctorSpec
    negative_control: bool = False

    @property
    def reports(self) -> tuple[HypothesisReport, HypothesisReport]:
        return hypothesis_report(self.lam), hypothesis_report(self.gamma)

    @property
    def valid(self) -> bool:
        a, b = self.reports
        return a.ok and b.ok

    def flags(self) -> list[str]:
        out = []
        for side, rep in zip(("lambda", "gamma"), self.reports):
            if rep.nodes:
                out.append(f"{side} has nodes " + ",".join(f"S{i}" for i in rep.nodes))
            if rep.semisimple_blocks:
                out.append(f"{side} has semisimple blocks")
        return out


def _identity_pair(name, alg_name, negative=False):
    a = corpus_algebra(alg_name)
    return PairSpec(name, a, a, StableFunctorSpec("identity", a, a), negative)


def _syzygy_pair(name, alg_name, k):
    a = corpus_algebra(alg_name)
    return PairSpec(name, a, a, StableFunctorSpec("syzygy", a, a, k))


@lru_cache(maxsize=1)
def curated_pairs() -> tuple[PairSpec, ...]:
    return (
        _identity_pair("a3-id", "a3"),
        _identity_pair("nak33-id", "nak33"),
        _syzygy_pair("nak33-syz1", "nak33", 1),
        _syzygy_pair("nak33-syz2", "nak33", 2),
        _identity_pair("square-id", "square"),
        _identity_pair("nak32-id", "nak32", negative=True),
        _identity_pair("kx2-id", "kx2", negative=True),
    )


def get_pair(name: str) -> PairSpec:
    for pair in curated_pairs():
        if pair.name == name:
            return pair
    raise KeyError(f"unknown pair {name!r}; known: {', '.join(p.name for p in curated_pairs())}")


# ---------------------------------------------------------------- reports

def describe_module(m: Representation) -> dict:
    return {"dims": list(m.dims),
            "summands": [list(x.dims) for x in decompose(m).parts] if not m.is_zero else []}


def _value(v):
    if isinstance(v, ExtendedNat):
        return v.to_json()
    if hasattr(v, "to_json"):
        return v.to_json()
    return v


@dataclass
class Report:
    pair: str
    check: str
    inputs: dict
    lhs: object
    rhs: object
    cutoff: int
    status: str  # pass, fail, skipped
    hypothesis_flags: list[str] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"pair": self.pair, "check": self.check, "inputs": self.inputs,
                "lhs": _value(self.lhs), "rhs": _value(self.rhs), "cutoff": self.cutoff,
                "pass": self.status == "pass", "status": self.status,
                "hypothesis_flags": list(self.hypothesis_flags), "evidence": self.evidence}


CHECK_KINDS = ("lapp", "fadim", "domdim", "extiso", "wakamatsu", "tilting", "phipsi",
               "torsionfree", "gdimzero", "ntorsionfree", "gorproj", "wtc")


def _qprimes(pair: PairSpec):
    q = proj_inj_sum(pair.gamma)
    return [("0", None), ("Q", q)]


def _base_flags(pair: PairSpec) -> list[str]:
    flags = pair.flags()
    if pair.negative_control:
        flags.append("negative control")
    return flags


def _omega_hypotheses(pair: PairSpec, omega: Representation, need_ext: bool = True) -> list[str]:
    """Unmet standing hypotheses on omega.

    Besides ``Ext^1(omega, omega) = 0`` the transfer statements need every
    indecomposable projective-injective module in ``add omega``: ``Phi``
    always adds the full ``Q`` on the other side.
    """
    out = []
    if need_ext and not self_orthogonal(omega, [1])[1]:
        out.append("Ext^1(omega, omega) != 0")
    if not in_add(proj_inj_sum(pair.lam), omega):
        out.append("omega misses a projective-injective summand")
    return out


def _finish(pair, check, inputs, lhs, rhs, cutoff, ok, flags, evidence, unmet=()) -> Report:
    flags = list(flags) + [f"unmet: {u}" for u in unmet]
    if unmet:
        # informational: whether the comparison held even without the hypotheses
        evidence = dict(evidence, agrees_anyway=bool(ok))
    status = "skipped" if unmet else ("pass" if ok else "fail")
    return Report(pair.name, check, inputs, lhs, rhs, cutoff, status, flags, evidence)


def check_lapp(pair, omega, m, cutoff):
    f = pair.functor
    unmet = _omega_hypotheses(pair, omega)
    nu = phi(f, omega)
    lhs, chain = lapp(omega, m, cutoff)
    rhs_vals, ok, ev = {}, True, {"nu": describe_module(nu), "lhs_chain": chain.to_json()}
    for label, q in _qprimes(pair):
        n = transport(f, m, q)
        if n.is_zero:
            v = ExtendedNat.infinity()
        else:
            v, ch = lapp(nu, n, cutoff)
            ev[f"rhs_chain_Q'={label}"] = ch.to_json()
        rhs_vals[label] = v
        ok = ok and cap_equal(lhs, v, cutoff)
    inputs = {"omega": describe_module(omega), "M": describe_module(m)}
    return _finish(pair, "lapp", inputs, lhs, {k: v.to_json() for k, v in rhs_vals.items()},
                   cutoff, ok, _base_flags(pair), ev, unmet)


def check_fadim(pair, omega, cutoff):
    nu = phi(pair.functor, omega)
    lhs, rhs = fadim(omega, cutoff), fadim(nu, cutoff)
    return _finish(pair, "fadim", {"omega": describe_module(omega)}, lhs, rhs, cutoff,
                   cap_equal(lhs, rhs, cutoff), _base_flags(pair), {"nu": describe_module(nu)},
                   _omega_hypotheses(pair, omega))


def check_domdim(pair, m, cutoff):
    f = pair.functor
    lhs = domdim(m, cutoff)
    rhs, ok = {}, True
    for label, q in _qprimes(pair):
        n = transport(f, m, q)
        v = domdim(n, cutoff)
        rhs[label] = v.to_json()
        ok = ok and cap_equal(lhs, v, cutoff)
    return _finish(pair, "domdim", {"M": describe_module(m)}, lhs, rhs, cutoff, ok,
                   _base_flags(pair), {})


def check_extiso(pair, a, a2, degrees, cutoff):
    f = pair.functor
    b = transport(f, a, proj_inj_sum(pair.gamma))
    lhs, rhs, ok = {}, {}, True
    for label, q in _qprimes(pair):
        b2 = transport(f, a2, q)
        for n in degrees:
            left = ext_dim(a, a2, n)
            right = ext_dim(b, b2, n)
            lhs[str(n)] = left
            rhs[f"{n}/Q'={label}"] = right
            ok = ok and left == right
    return _finish(pair, "extiso", {"A": describe_module(a), "A'": describe_module(a2),
                                    "degrees": list(degrees)},
                   lhs, rhs, cutoff, ok, _base_flags(pair), {})


def _coarse(verdict) -> str:
    return "no" if verdict.status == "no" else "yes"


def check_wakamatsu(pair, omega, cutoff):
    nu = phi(pair.functor, omega)
    lhs, rhs = is_wakamatsu(omega, cutoff), is_wakamatsu(nu, cutoff)
    return _finish(pair, "wakamatsu", {"omega": describe_module(omega)}, lhs, rhs, cutoff,
                   _coarse(lhs) == _coarse(rhs), _base_flags(pair), {"nu": describe_module(nu)},
                   _omega_hypotheses(pair, omega, need_ext=False))


def check_tilting(pair, omega, cutoff):
    nu = phi(pair.functor, omega)
    lhs, rhs = is_tilting(omega, cutoff), is_tilting(nu, cutoff)
    ok = lhs.status == rhs.status and (lhs.status != "yes" or lhs.n == rhs.n)
    return _finish(pair, "tilting", {"omega": describe_module(omega)}, lhs, rhs, cutoff, ok,
                   _base_flags(pair), {"nu": describe_module(nu)},
                   _omega_hypotheses(pair, omega, need_ext=False))


def check_phipsi(pair, omega, cutoff):
    f = pair.functor
    nu = phi(f, omega)
    back = psi(f, nu)
    ok = is_isomorphic(back, omega)
    unmet = []
    if not is_basic(omega):
        unmet.append("omega is not basic")
    if is_wakamatsu(omega, cutoff).status == "no":
        unmet.append("omega is not Wakamatsu tilting")
    return _finish(pair, "phipsi", {"omega": describe_module(omega)}, describe_module(omega),
                   describe_module(back), cutoff, ok, _base_flags(pair), {"nu": describe_module(nu)},
                   unmet)


def check_torsionfree(pair, omega, m, n, cutoff):
    f = pair.functor
    flags = _base_flags(pair)
    unmet = _omega_hypotheses(pair, omega)
    inputs = {"omega": describe_module(omega), "M": describe_module(m), "n": n}
    nu = phi(f, omega)
    try:
        lhs = torsionfree_check(omega, m, n, cutoff)
    except HypothesisUnverifiable as exc:
        return _finish(pair, "torsionfree", inputs, None, None, cutoff, False, flags, {},
                       unmet + [str(exc)])
    rhs, ok = {}, True
    for label, q in _qprimes(pair):
        nn = transport(f, m, q)
        v = torsionfree_check(nu, nn, n, cutoff)
        rhs[label] = v
        ok = ok and v == lhs
    return _finish(pair, "torsionfree", inputs, lhs, rhs, cutoff, ok, flags,
                   {"nu": describe_module(nu)}, unmet)


def check_gdimzero(pair, omega, m, cutoff, check="gdimzero"):
    f = pair.functor
    flags = _base_flags(pair)
    if is_wakamatsu(omega, cutoff).status == "no":
        return _finish(pair, check, {"omega": describe_module(omega), "M": describe_module(m)},
                       None, None, cutoff, False, flags, {}, ["omega is not Wakamatsu tilting"])
    nu = phi(f, omega)
    lhs = gdim_zero(omega, m, cutoff)
    rhs, ok = {}, True
    for label, q in _qprimes(pair):
        nn = transport(f, m, q)
        v = gdim_zero(nu, nn, cutoff)
        rhs[label] = v.to_json()
        ok = ok and (v.status == lhs.status)
    return _finish(pair, check, {"omega": describe_module(omega), "M": describe_module(m)},
                   lhs, rhs, cutoff, ok, flags, {"nu": describe_module(nu)})


def check_ntorsionfree(pair, m, n, cutoff):
    """Classical n-torsionfreeness: omega is the regular module on both sides."""
    f = pair.functor
    lam = regular_module(pair.lam)
    gam = regular_module(pair.gamma)
    lhs = torsionfree_check(lam, m, n, cutoff)
    rhs, ok = {}, True
    for label, q in _qprimes(pair):
        v = torsionfree_check(gam, transport(f, m, q), n, cutoff)
        rhs[label] = v
        ok = ok and v == lhs
    return _finish(pair, "ntorsionfree", {"M": describe_module(m), "n": n}, lhs, rhs, cutoff, ok,
                   _base_flags(pair), {})


def check_gorproj(pair, m, cutoff):
    """Gorenstein projectivity is G-dimension zero relative to the regular module."""
    rep = check_gdimzero(pair, regular_module(pair.lam), m, cutoff, check="gorproj")
    return rep


def check_wtc(pair, omega, cutoff):
    f = pair.functor
    nu = phi(f, omega)
    wl, wr = is_wakamatsu(omega, cutoff), is_wakamatsu(nu, cutoff)
    pl, pr = pd(omega, cutoff), pd(nu, cutoff)
    tl, tr = is_tilting(omega, cutoff), is_tilting(nu, cutoff)
    unmet = []
    if not (wl.status != "no" and pl.is_finite):
        unmet.append("omega is not a Wakamatsu tilting module of finite projective dimension")
    ok = wr.status != "no" and pr.is_finite and tl.status == tr.status
    lhs = {"wakamatsu": wl.to_json(), "pd": pl.to_json(), "tilting": tl.to_json()}
    rhs = {"wakamatsu": wr.to_json(), "pd": pr.to_json(), "tilting": tr.to_json()}
    return _finish(pair, "wtc", {"omega": describe_module(omega)}, lhs, rhs, cutoff, ok,
                   _base_flags(pair), {"nu": describe_module(nu)}, unmet)


def verify_transfer(pair: PairSpec, check: str, inputs: dict, cutoff: int = 12) -> Report:
    """Run one check on one input tuple."""
    if check not in CHECK_KINDS:
        raise ValueError(f"unknown check {check!r}; known: {', '.join(CHECK_KINDS)}")
    if check == "lapp":
        return check_lapp(pair, inputs["omega"], inputs["M"], cutoff)
    if check == "fadim":
        return check_fadim(pair, inputs["omega"], cutoff)
    if check == "domdim":
        return check_domdim(pair, inputs["M"], cutoff)
    if check == "extiso":
        return check_extiso(pair, inputs["A"], inputs["A'"], inputs.get("degrees", range(1, 5)), cutoff)
    if check == "wakamatsu":
        return check_wakamatsu(pair, inputs["omega"], cutoff)
    if check == "tilting":
        return check_tilting(pair, inputs["omega"], cutoff)
    if check == "phipsi":
        return check_phipsi(pair, inputs["omega"], cutoff)
    if check == "torsionfree":
        return check_torsionfree(pair, inputs["omega"], inputs["M"], inputs["n"], cutoff)
    if check == "gdimzero":
        return check_gdimzero(pair, inputs["omega"], inputs["M"], cutoff)
    if check == "ntorsionfree":
        return check_ntorsionfree(pair, inputs["M"], inputs["n"], cutoff)
    if check == "gorproj":
        return check_gorproj(pair, inputs["M"], cutoff)
    return check_wtc(pair, inputs["omega"], cutoff)


# ---------------------------------------------------------------- default input sweeps

def standard_omegas(pair: PairSpec, cutoff: int = 12) -> list[Representation]:
    """Regular, dual regular, their sum, and every basic tilting module."""
    alg = pair.lam
    lam, dlam = regular_module(alg), dual_regular_module(alg)
    out = [lam, dlam, dsum(alg, [lam, dlam])]
    out.extend(basic_tilting_modules(alg, cutoff))
    return out


def wakamatsu_omegas(pair: PairSpec, cutoff: int = 12) -> list[Representation]:
    return list(basic_wakamatsu_modules(pair.lam, cutoff))


def sample_omegas(pair: PairSpec, rng: np.random.Generator, samples: int,
                  need_ext: bool = True, budget: int = 100) -> list[Representation]:
    """Random sums of indecomposables plus every projective-injective, kept when they meet the hypotheses."""
    alg = pair.lam
    q = proj_inj_sum(alg)
    out = []
    for _ in range(samples * budget):
        if len(out) == samples:
            break
        w, _ = random_sum_of_indecomposables(alg, rng, int(rng.integers(1, 4)))
        w = dsum(alg, [w, q]) if not q.is_zero else w
        if not need_ext or self_orthogonal(w, [1])[1]:
            out.append(w)
    return out


def default_inputs(pair: PairSpec, check: str, cutoff: int = 12, seed: int = 0,
                   samples: int = 50) -> list[dict]:
    alg = pair.lam
    ind = list(indecomposables(alg))
    if check == "lapp":
        return [{"omega": w, "M": m} for w in standard_omegas(pair, cutoff) for m in ind]
    if check == "domdim":
        return [{"M": m} for m in ind]
    if check in ("fadim", "tilting"):
        rng = np.random.default_rng(seed)
        out = [{"omega": w} for w in standard_omegas(pair, cutoff)]
        out += [{"omega": w} for w in sample_omegas(pair, rng, samples, need_ext=check == "fadim")]
        return out
    if check == "extiso":
        rng = np.random.default_rng(seed)
        out = []
        for _ in range(samples):
            a, _ = random_sum_of_indecomposables(alg, rng, int(rng.integers(1, 3)))
            b, _ = random_sum_of_indecomposables(alg, rng, int(rng.integers(1, 3)))
            out.append({"A": a, "A'": b, "degrees": range(1, 5)})
        return out
    if check in ("wakamatsu", "phipsi", "wtc"):
        return [{"omega": w} for w in wakamatsu_omegas(pair, cutoff)]
    if check == "torsionfree":
        ws = wakamatsu_omegas(pair, cutoff)
        return [{"omega": w, "M": m, "n": n} for w in ws for m in ind for n in range(cutoff - 1)]
    if check == "gdimzero":
        return [{"omega": w, "M": m} for w in wakamatsu_omegas(pair, cutoff) for m in ind]
    if check == "ntorsionfree":
        return [{"M": m, "n": n} for m in ind for n in range(cutoff - 1)]
    if check == "gorproj":
        return [{"M": m} for m in ind]
    raise ValueError(f"unknown check {check!r}")


def run_suite(pair: PairSpec, check: str, cutoff: int = 12, seed: int = 0,
              samples: int = 50, workers: int = 1) -> list[Report]:
    """All default inputs for one check; with ``workers > 1`` they run on a thread pool.

    Results come back in input order either way.
    """
    inputs = default_inputs(pair, check, cutoff, seed, samples)
    if workers <= 1:
        return [verify_transfer(pair, check, inp, cutoff) for inp in inputs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda inp: verify_transfer(pair, check, inp, cutoff), inputs))
