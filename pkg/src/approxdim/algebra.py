"""Bound quiver algebras kQ/I over GF(p) as explicit based algebras.

Paths compose left factor first: ``a*b`` means traverse ``a`` and then ``b``
and needs ``target(a) == source(b)``.  Vertices are numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import exactla as la
from .exactla import DEFAULT_PRIME, PrimeField

DEFAULT_MAX_LEN = 30


class RelationIllFormed(ValueError):
    pass


class NotAdmissibleWithinBound(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for a in self.arrows:
            if not (1 <= a.source <= self.vertex_count and 1 <= a.target <= self.vertex_count):
                raise ValueError(f"arrow {a.name} has an endpoint outside 1..{self.vertex_count}")

    @classmethod
    def from_list(cls, n: int, arrows) -> Quiver:
        return cls(n, tuple(Arrow(str(nm), int(s), int(t)) for nm, s, t in arrows))

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def reversed(self) -> Quiver:
        return Quiver(self.vertex_count, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


# A path is (source vertex, tuple of arrow indices); the empty tuple is e_source.
Path = tuple[int, tuple[int, ...]]
# A path expression is a list of (coefficient, path).
PathExpr = list[tuple[int, Path]]


def path_target(q: Quiver, path: Path) -> int:
    src, arrows = path
    return q.arrows[arrows[-1]].target if arrows else src


def is_composable(q: Quiver, path: Path) -> bool:
    v = path[0]
    for a in path[1]:
        if q.arrows[a].source != v:
            return False
        v = q.arrows[a].target
    return True


def path_from_names(q: Quiver, names) -> Path:
    idx = tuple(q.arrow_index(n) for n in names)
    if not idx:
        raise RelationIllFormed("a named path needs at least one arrow")
    return (q.arrows[idx[0]].source, idx)


def path_label(q: Quiver, path: Path) -> str:
    if not path[1]:
        return f"e{path[0]}"
    return "*".join(q.arrows[a].name for a in path[1])


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    semisimple: bool


def _check_relation(q: Quiver, rel: PathExpr) -> PathExpr:
    terms = list(rel)
    if not terms:
        raise RelationIllFormed("empty relation")
    ends = set()
    for c, path in terms:
        if len(path[1]) < 2:
            raise RelationIllFormed(f"relation term {path_label(q, path)} has length < 2")
        if not is_composable(q, path):
            raise RelationIllFormed(f"relation term {path_label(q, path)} is not a composable path")
        ends.add((path[0], path_target(q, path)))
    if len(ends) != 1:
        raise RelationIllFormed("relation terms do not share one source and one target")
    return terms


class Algebra:
    """A finite-dimensional algebra kQ/I with an explicit path basis.

    ``mult[i, j]`` holds the coordinates of ``basis[i] * basis[j]``.  Build
    instances with :func:`build_algebra`; the opposite algebra is available
    as :attr:`op`, and ``A.op.op is A``.
    """

    def __init__(self, quiver: Quiver, p: int, basis: list[Path], mult: np.ndarray,
                 loewy_bound: int, relations: list[PathExpr], name: str = ""):
        self.quiver = quiver
        self.p = p
        self.basis = tuple(basis)
        self.mult = mult
        self.mult.setflags(write=False)
        self.loewy_bound = loewy_bound
        self.relations = [list(r) for r in relations]
        self.name = name
        self._op: Algebra | None = None
        self._index = {b: i for i, b in enumerate(self.basis)}
        self.src = np.array([b[0] for b in self.basis])
        self.tgt = np.array([path_target(quiver, b) for b in self.basis])
        self.idempotents = tuple(self._index[(v, ())] for v in self.vertices)
        self.arrow_basis = tuple(self._index[(a.source, (i,))] for i, a in enumerate(quiver.arrows))

    def __repr__(self):
        return f"Algebra({self.name or '?'}, n={self.n}, dim={self.dim}, p={self.p})"

    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, path: Path) -> int:
        return self._index[path]

    def basis_from_to(self, i: int, j: int) -> list[int]:
        return [k for k in range(self.dim) if self.src[k] == i and self.tgt[k] == j]

    def basis_from(self, i: int) -> list[int]:
        return [k for k in range(self.dim) if self.src[k] == i]

    def basis_to(self, j: int) -> list[int]:
        return [k for k in range(self.dim) if self.tgt[k] == j]

    def label(self, k: int) -> str:
        return path_label(self.quiver, self.basis[k])

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of two coordinate vectors."""
        xy = np.einsum("i,j,ijk->k", x % self.p, y % self.p, self.mult) if self.dim else x
        return xy % self.p

    @property
    def op(self) -> Algebra:
        if self._op is None:
            q = self.quiver.reversed()
            basis = [(path_target(self.quiver, b), tuple(reversed(b[1]))) for b in self.basis]
            mult = np.ascontiguousarray(np.transpose(self.mult, (1, 0, 2)))
            rels = [[(c, (path_target(self.quiver, path), tuple(reversed(path[1])))) for c, path in r]
                    for r in self.relations]
            name = self.name[:-3] if self.name.endswith("^op") else self.name + "^op"
            other = Algebra(q, self.p, basis, mult, self.loewy_bound, rels, name)
            other._op = self
            self._op = other
        return self._op

    def check_associativity(self, trials: int = 50, seed: int = 0) -> bool:
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            i, j, k = (int(t) for t in rng.integers(0, self.dim, size=3))
            ei, ej, ek = (np.eye(self.dim, dtype=np.int64)[t] for t in (i, j, k))
            left = self.multiply(self.multiply(ei, ej), ek)
            right = self.multiply(ei, self.multiply(ej, ek))
            if not np.array_equal(left, right):
                return False
        return True


def _paths_up_to(q: Quiver, max_len: int) -> list[list[Path]]:
    layers = [[(v, ()) for v in range(1, q.vertex_count + 1)]]
    for _ in range(max_len):
        nxt = []
        for path in layers[-1]:
            t = path_target(q, path)
            for ai, a in enumerate(q.arrows):
                if a.source == t:
                    nxt.append((path[0], path[1] + (ai,)))
        layers.append(nxt)
    return layers


def _ideal_rows(q: Quiver, relations: list[PathExpr], layers, max_len: int, col_of: dict, p: int):
    """Span of u*r*v for all paths u, v, truncated to paths of length <= max_len."""
    rows = []
    for rel in relations:
        m = min(len(path[1]) for _, path in rel)
        s, t = rel[0][1][0], path_target(q, rel[0][1])
        budget = max_len - m
        if budget < 0:
            continue
        lefts = [u for layer in layers[: budget + 1] for u in layer if path_target(q, u) == s]
        rights = [v for layer in layers[: budget + 1] for v in layer if v[0] == t]
        for u, v in product(lefts, rights):
            if len(u[1]) + len(v[1]) > budget:
                continue
            row = np.zeros(len(col_of), dtype=np.int64)
            for c, path in rel:
                full = (u[0], u[1] + path[1] + v[1])
                if len(full[1]) <= max_len:
                    row[col_of[full]] = (row[col_of[full]] + c) % p
            if row.any():
                rows.append(row)
    if not rows:
        return la.zeros(0, len(col_of))
    return np.array(rows, dtype=np.int64)


def build_algebra(quiver: Quiver, relations=(), p: int = DEFAULT_PRIME,
                  max_len: int = DEFAULT_MAX_LEN, name: str = "") -> Algebra:
    """Quotient of the path algebra by the ideal generated by ``relations``.

    The Loewy bound is the first length ``l <= max_len`` at which every path
    lies in the ideal; the algebra is then computed inside ``kQ / R^l``.
    """
    PrimeField(p)
    rels = [_check_relation(quiver, [(int(c) % p, path) for c, path in r]) for r in relations]
    layers = _paths_up_to(quiver, 1)
    bound = None
    for length in range(1, max_len + 1):
        while len(layers) <= length:
            layers = _paths_up_to(quiver, len(layers))
        top = layers[length]
        if not top:
            bound = length
            break
        flat = [path for layer in layers[: length + 1] for path in layer]
        col_of = {path: k for k, path in enumerate(flat)}
        rows = _ideal_rows(quiver, rels, layers, length, col_of, p)
        r0 = la.rank(rows, p)
        units = la.zeros(len(top), len(flat))
        for k, path in enumerate(top):
            units[k, col_of[path]] = 1
        if la.rank(np.concatenate([rows, units]), p) == r0:
            bound = length
            break
    if bound is None:
        raise NotAdmissibleWithinBound(f"no path length <= {max_len} is annihilated by the relations")

    # normal form inside kQ / R^bound: longest paths lead, so they are eliminated first
    flat = [path for layer in layers[:bound] for path in layer]
    cols = sorted(range(len(flat)), key=lambda k: -len(flat[k][1]) * 10**9 - k)
    ordered = [flat[k] for k in cols]
    col_of = {path: k for k, path in enumerate(ordered)}
    rows = _ideal_rows(quiver, rels, layers, bound - 1, col_of, p)
    red, pivots = la.rref(rows, p) if rows.shape[0] else (rows, [])
    pivset = set(pivots)
    basis = [path for k, path in enumerate(ordered) if k not in pivset]
    basis.sort(key=lambda b: (len(b[1]), flat.index(b)))
    bidx = {b: i for i, b in enumerate(basis)}
    pivot_row = {c: i for i, c in enumerate(pivots)}

    def reduce(path: Path) -> np.ndarray:
        v = np.zeros(len(basis), dtype=np.int64)
        if len(path[1]) >= bound:
            return v
        c = col_of[path]
        if c not in pivset:
            v[bidx[path]] = 1
            return v
        row = red[pivot_row[c]]
        for k in np.flatnonzero(row):
            if k != c:
                v[bidx[ordered[k]]] = (-row[k]) % p
        return v

    d = len(basis)
    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, bi in enumerate(basis):
        ti = path_target(quiver, bi)
        for j, bj in enumerate(basis):
            if bj[0] == ti:
                mult[i, j] = reduce((bi[0], bi[1] + bj[1]))
    alg = Algebra(quiver, p, basis, mult, bound, rels, name)
    return alg


def reduce_path_expr(alg: Algebra, expr: PathExpr) -> np.ndarray:
    """Coordinates over ``alg.basis`` of a linear combination of paths."""
    out = np.zeros(alg.dim, dtype=np.int64)
    for c, path in expr:
        if not is_composable(alg.quiver, path):
            raise RelationIllFormed(f"path {path_label(alg.quiver, path)} is not composable")
        v = np.zeros(alg.dim, dtype=np.int64)
        v[alg.idempotents[path[0] - 1]] = 1
        for a in path[1]:
            v = (v @ alg.mult[:, alg.arrow_basis[a], :]) % alg.p
        out = (out + c * v) % alg.p
    return out


def opposite_algebra(alg: Algebra) -> Algebra:
    return alg.op


def blocks(alg: Algebra) -> list[Block]:
    parent = list(range(alg.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in alg.quiver.arrows:
        parent[find(a.source)] = find(a.target)
    groups: dict[int, list[int]] = {}
    for v in alg.vertices:
        groups.setdefault(find(v), []).append(v)
    out = []
    for vs in sorted(groups.values()):
        has_arrow = any(a.source in vs for a in alg.quiver.arrows)
        out.append(Block(tuple(vs), not has_arrow))
    return out


def parse_path_expr(quiver: Quiver, text: str, p: int) -> PathExpr:
    """Parse ``"a*b - 2*c*d"``-style text into a path expression."""
    expr: PathExpr = []
    s = text.replace(" ", "").replace("-", "+-")
    for raw in s.split("+"):
        if not raw:
            continue
        sign = 1
        while raw.startswith("-"):
            sign, raw = -sign, raw[1:]
        factors = [f for f in raw.split("*") if f]
        coef = 1
        if factors and factors[0].lstrip("-").isdigit():
            coef = int(factors.pop(0))
        if not factors:
            raise RelationIllFormed(f"term {raw!r} has no arrows")
        try:
            path = path_from_names(quiver, factors)
        except KeyError as exc:
            raise RelationIllFormed(f"unknown arrow {exc.args[0]!r}") from None
        expr.append(((sign * coef) % p, path))
    if not expr:
        raise RelationIllFormed("empty relation")
    return expr
