"""Built-in algebras, so every check runs from a clean checkout."""

from __future__ import annotations

from functools import lru_cache

from .algebra import Algebra, Quiver, build_algebra, parse_path_expr
from .exactla import DEFAULT_PRIME

# name -> (vertex count, arrows, relations, description)
_SOURCES = {
    "a3": (3, [("a", 1, 2), ("b", 2, 3)], [],
           "linear A3: 1 -a-> 2 -b-> 3"),
    "nak33": (3, [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1)],
              ["a1*a2*a3", "a2*a3*a1", "a3*a1*a2"],
              "self-injective Nakayama N(3,3): 3-cycle modulo paths of length 3"),
    "nak32": (3, [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1)],
              ["a1*a2", "a2*a3", "a3*a1"],
              "self-injective Nakayama N(3,2): 3-cycle modulo paths of length 2"),
    "kx2": (1, [("x", 1, 1)], ["x*x"], "k[x]/(x^2)"),
    "kx3": (1, [("x", 1, 1)], ["x*x*x"], "k[x]/(x^3)"),
    "square": (4, [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)], ["a*b - c*d"],
               "commutative square 1 -> 2,3 -> 4"),
}


def algebra_names() -> list[str]:
    return list(_SOURCES)


def describe(name: str) -> str:
    return _SOURCES[name][3]


@lru_cache(maxsize=None)
def _load(name: str, p: int) -> Algebra:
    n, arrows, rels, _ = _SOURCES[name]
    q = Quiver.from_list(n, arrows)
    return build_algebra(q, [parse_path_expr(q, r, p) for r in rels], p=p, name=name)


def corpus_algebra(name: str, p: int = DEFAULT_PRIME) -> Algebra:
    if name not in _SOURCES:
        raise KeyError(f"unknown corpus algebra {name!r}; known: {', '.join(_SOURCES)}")
    return _load(name, p)


def source_text(name: str, p: int = DEFAULT_PRIME) -> str:
    """The corpus entry in the algebra file format."""
    n, arrows, rels, desc = _SOURCES[name]
    lines = [f"# {desc}", f"field {p}", f"vertices {n}"]
    lines += [f"arrow {a} {s} {t}" for a, s, t in arrows]
    lines += [f"relation {r}" for r in rels]
    return "\n".join(lines) + "\n"
