"""Text formats for algebras and modules.

Algebra files are line oriented; ``#`` starts a comment::

    field 32003
    vertices 3
    arrow a 1 2
    arrow b 2 3
    relation 1*a*b          # terms are coeff*arrow*arrow..., joined by + or -

Paths compose left to right: ``a*b`` traverses ``a`` first.

Module files list per-vertex dimensions and one matrix per arrow; the matrix
of ``a: i -> j`` has ``dims[j]`` rows and ``dims[i]`` columns and acts on
column vectors; a matrix with no columns has no row lines.  Arrows left
out act by zero::

    module
    dims 1 1 0
    map a 1 x 1
    1
    map b 0 x 1
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .algebra import (Algebra, NotAdmissibleWithinBound, Quiver, RelationIllFormed, build_algebra,
                      parse_path_expr)
from .exactla import DEFAULT_PRIME, PrimeField
from .repmod import Representation, validate_module


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(no, f"{what} must be an integer, got {tok!r}") from None


def parse_algebra(text: str, name: str = "") -> Algebra:
    p = DEFAULT_PRIME
    n = None
    arrows: list[tuple[str, int, int]] = []
    rel_lines: list[tuple[int, str]] = []
    for no, line in _lines(text):
        head, _, rest = line.partition(" ")
        toks = rest.split()
        if head == "field":
            if len(toks) != 1:
                raise ParseError(no, "expected 'field <prime>'")
            p = _int(toks[0], no, "field")
            try:
                PrimeField(p)
            except ValueError as exc:
                raise ParseError(no, str(exc)) from None
        elif head == "vertices":
            if len(toks) != 1:
                raise ParseError(no, "expected 'vertices <count>'")
            n = _int(toks[0], no, "vertex count")
            if n < 1:
                raise ParseError(no, "need at least one vertex")
        elif head == "arrow":
            if len(toks) != 3:
                raise ParseError(no, "expected 'arrow <name> <source> <target>'")
            if n is None:
                raise ParseError(no, "'vertices' must come before arrows")
            s, t = _int(toks[1], no, "source"), _int(toks[2], no, "target")
            if not (1 <= s <= n and 1 <= t <= n):
                raise ParseError(no, f"arrow endpoints must lie in 1..{n}")
            if any(a[0] == toks[0] for a in arrows):
                raise ParseError(no, f"duplicate arrow {toks[0]!r}")
            arrows.append((toks[0], s, t))
        elif head == "relation":
            if not rest.strip():
                raise ParseError(no, "empty relation")
            rel_lines.append((no, rest.strip()))
        else:
            raise ParseError(no, f"unknown directive {head!r}")
    if n is None:
        raise ParseError(0, "missing 'vertices' line")
    try:
        quiver = Quiver.from_list(n, arrows)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None
    rels = []
    for no, text_ in rel_lines:
        try:
            rels.append(parse_path_expr(quiver, text_, p))
        except RelationIllFormed as exc:
            raise ParseError(no, str(exc)) from None
    try:
        return build_algebra(quiver, rels, p=p, name=name)
    except (RelationIllFormed, NotAdmissibleWithinBound) as exc:
        raise ParseError(0, str(exc)) from None


def load_algebra(path) -> Algebra:
    path = Path(path)
    return parse_algebra(path.read_text(encoding="utf-8"), name=path.stem)


def format_module(m: Representation) -> str:
    lines = ["module", "dims " + " ".join(str(d) for d in m.dims)]
    for a, mat in zip(m.algebra.quiver.arrows, m.maps):
        r, c = mat.shape
        lines.append(f"map {a.name} {r} x {c}")
        for row in mat if c else ():
            lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_module(text: str, alg: Algebra, name: str = "") -> Representation:
    lines = list(_lines(text))
    if not lines or lines[0][1] != "module":
        raise ParseError(lines[0][0] if lines else 1, "file must start with 'module'")
    if len(lines) < 2 or not lines[1][1].startswith("dims"):
        raise ParseError(lines[1][0] if len(lines) > 1 else 1, "expected 'dims d1 d2 ...'")
    no, dline = lines[1]
    dims = [_int(t, no, "dimension") for t in dline.split()[1:]]
    if len(dims) != alg.n or min(dims) < 0:
        raise ParseError(no, f"need {alg.n} nonnegative dimensions")
    arrows = alg.quiver.arrows
    mats: dict[int, np.ndarray] = {}
    k = 2
    while k < len(lines):
        no, line = lines[k]
        toks = line.split()
        if len(toks) != 5 or toks[0] != "map" or toks[3] != "x":
            raise ParseError(no, "expected 'map <arrow> <rows> x <cols>'")
        try:
            idx = alg.quiver.arrow_index(toks[1])
        except KeyError:
            raise ParseError(no, f"unknown arrow {toks[1]!r}") from None
        if idx in mats:
            raise ParseError(no, f"arrow {toks[1]!r} given twice")
        r, c = _int(toks[2], no, "rows"), _int(toks[4], no, "cols")
        a = arrows[idx]
        want = (dims[a.target - 1], dims[a.source - 1])
        if (r, c) != want:
            raise ParseError(no, f"map {a.name} must be {want[0]} x {want[1]}")
        rows = []
        for _ in range(r if c else 0):  # zero-width rows are not written
            k += 1
            if k >= len(lines):
                raise ParseError(no, f"map {a.name} is missing rows")
            rno, rline = lines[k]
            vals = [_int(t, rno, "entry") for t in rline.split()]
            if len(vals) != c:
                raise ParseError(rno, f"expected {c} entries")
            rows.append(vals)
        mats[idx] = np.array(rows, dtype=np.int64).reshape(r, c) % alg.p
        k += 1
    maps = []
    for idx, a in enumerate(arrows):
        shape = (dims[a.target - 1], dims[a.source - 1])
        maps.append(mats.get(idx, np.zeros(shape, dtype=np.int64)))
    m = Representation(alg, dims, maps, name=name)
    bad = validate_module(m)
    if bad:
        raise ParseError(0, f"module violates relation {bad[0][0] + 1}")
    return m


def load_module(path, alg: Algebra) -> Representation:
    path = Path(path)
    return parse_module(path.read_text(encoding="utf-8"), alg, name=path.stem)


def save_module(m: Representation, path) -> None:
    Path(path).write_text(format_module(m), encoding="utf-8")
