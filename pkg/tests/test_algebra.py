import itertools

import numpy as np
import pytest

from approxdim.algebra import (NotAdmissibleWithinBound, Quiver, RelationIllFormed, blocks,
                               build_algebra, opposite_algebra, parse_path_expr)
from approxdim.corpus import algebra_names, corpus_algebra


def count_monomial_paths(n, arrows, zero_paths):
    """Brute force: composable arrow words containing no forbidden subword."""
    total = n
    forbidden = {tuple(z) for z in zero_paths}
    frontier = [(a,) for a in range(len(arrows))]
    while frontier:
        total += len(frontier)
        nxt = []
        for w in frontier:
            for b in range(len(arrows)):
                if arrows[w[-1]][2] != arrows[b][1]:
                    continue
                ext = w + (b,)
                if any(ext[i:i + len(f)] == f for f in forbidden for i in range(len(ext) - len(f) + 1)):
                    continue
                nxt.append(ext)
        frontier = nxt
    return total


@pytest.mark.parametrize("name,expected", [("a3", 6), ("nak33", 9), ("nak32", 6), ("kx2", 2),
                                           ("kx3", 3), ("square", 9)])
def test_corpus_dimensions(name, expected):
    assert corpus_algebra(name).dim == expected


def test_nakayama_dimension_by_path_count():
    arrows = [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1)]
    for m in (2, 3, 4):
        zero = [[(s + k) % 3 for k in range(m)] for s in range(3)]
        q = Quiver.from_list(3, arrows)
        rels = [[(1, (s + 1, tuple((s + k) % 3 for k in range(m))))] for s in range(3)]
        alg = build_algebra(q, rels)
        assert alg.dim == count_monomial_paths(3, arrows, zero)


def test_a3_basis_labels(a3):
    assert [a3.label(k) for k in range(a3.dim)] == ["e1", "e2", "e3", "a", "b", "a*b"]


@pytest.mark.parametrize("name", algebra_names())
def test_associativity_and_units(name):
    alg = corpus_algebra(name)
    assert alg.check_associativity(trials=30, seed=1)
    one = np.zeros(alg.dim, dtype=np.int64)
    for i in alg.idempotents:
        one[i] = 1
    rng = np.random.default_rng(2)
    for _ in range(5):
        x = rng.integers(0, alg.p, size=alg.dim)
        assert np.array_equal(alg.multiply(one, x), x % alg.p)
        assert np.array_equal(alg.multiply(x, one), x % alg.p)


@pytest.mark.parametrize("name", algebra_names())
def test_opposite_is_involutive(name):
    alg = corpus_algebra(name)
    assert alg.op.op is alg
    assert alg.op.dim == alg.dim
    assert opposite_algebra(alg) is alg.op


def test_commutativity_relation_identifies_paths():
    sq = corpus_algebra("square")
    ab = sq.index_of((1, (sq.quiver.arrow_index("a"), sq.quiver.arrow_index("b"))))
    x = np.zeros(sq.dim, dtype=np.int64)
    y = np.zeros(sq.dim, dtype=np.int64)
    x[sq.arrow_basis[sq.quiver.arrow_index("c")]] = 1
    y[sq.arrow_basis[sq.quiver.arrow_index("d")]] = 1
    prod = sq.multiply(x, y)
    assert prod[ab] == 1 and prod.sum() == 1


def test_blocks():
    assert len(blocks(corpus_algebra("a3"))) == 1
    q = Quiver.from_list(2, [])
    bl = blocks(build_algebra(q, []))
    assert len(bl) == 2 and all(b.semisimple for b in bl)


def test_relation_errors():
    q = Quiver.from_list(3, [("a", 1, 2), ("b", 2, 3)])
    with pytest.raises(RelationIllFormed):
        parse_path_expr(q, "a*z", 7)
    with pytest.raises(RelationIllFormed):
        build_algebra(q, [parse_path_expr(q, "a", 7)], p=7)  # length one
    with pytest.raises(RelationIllFormed):
        build_algebra(q, [parse_path_expr(q, "b*a", 7)], p=7)  # not composable


def test_not_admissible_without_relations_on_a_loop():
    q = Quiver.from_list(1, [("x", 1, 1)])
    with pytest.raises(NotAdmissibleWithinBound):
        build_algebra(q, [], max_len=6)


def test_parse_coefficients():
    q = Quiver.from_list(4, [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)])
    expr = parse_path_expr(q, "2*a*b - c*d", 11)
    assert sorted(c for c, _ in expr) == [2, 10]


def test_quiver_rejects_bad_endpoints():
    with pytest.raises(ValueError):
        Quiver.from_list(2, [("a", 1, 3)])


def test_concatenation_of_basis_paths():
    for name in algebra_names():
        alg = corpus_algebra(name)
        q = alg.quiver
        for i, j in itertools.product(range(alg.dim), repeat=2):
            (s1, w1), (s2, w2) = alg.basis[i], alg.basis[j]
            row = alg.mult[i, j]
            t1 = s1 if not w1 else q.arrows[w1[-1]].target
            if t1 != s2:
                assert not row.any()
            elif (s1, w1 + w2) in alg.basis:
                k = alg.index_of((s1, w1 + w2))
                assert row[k] == 1 and row.sum() == 1
