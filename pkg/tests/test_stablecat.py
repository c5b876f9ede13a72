import pytest

import oracles
from approxdim.corpus import algebra_names, corpus_algebra
from approxdim.families import indecomposables
from approxdim.repmod import dsum, injective, is_injective, is_isomorphic, projective, simple, tau_inverse
from approxdim.stablecat import (IsInjective, almost_split_starting_at, hypothesis_report, is_node,
                                 splits, stable_hom_dim, verify_almost_split)


@pytest.mark.parametrize("name", algebra_names())
def test_every_almost_split_sequence_verifies(name):
    alg = corpus_algebra(name)
    for x in indecomposables(alg):
        if is_injective(x):
            with pytest.raises(IsInjective):
                almost_split_starting_at(x)
            continue
        seq = almost_split_starting_at(x)
        assert verify_almost_split(seq)
        assert is_isomorphic(seq.right, tau_inverse(x))


def test_a3_sequence_at_s2(a3):
    seq = almost_split_starting_at(simple(a3, 2))
    assert seq.middle.dims == (1, 1, 0)
    assert is_isomorphic(seq.right, simple(a3, 1))


def test_kx3_middle_term_is_uniserial():
    kx3 = corpus_algebra("kx3")
    seq = almost_split_starting_at(simple(kx3, 1))
    parts = seq.middle_parts()
    assert [p.total_dim for p in parts] == [2]


@pytest.mark.parametrize("name,nodes", [("kx2", [1]), ("nak32", [1, 2, 3]), ("nak33", []),
                                        ("kx3", []), ("a3", []), ("square", [])])
def test_node_detection(name, nodes):
    alg = corpus_algebra(name)
    assert [i for i in alg.vertices if is_node(simple(alg, i))] == nodes
    assert list(hypothesis_report(alg).nodes) == nodes


def test_stable_hom_kx2_against_enumeration(kx2):
    assert stable_hom_dim(simple(kx2, 1), simple(kx2, 1)) == oracles.kx2_stable_end_simple() == 1


def test_stable_hom_kills_projectives(nak33):
    for i in nak33.vertices:
        p = projective(nak33, i)
        for x in indecomposables(nak33):
            assert stable_hom_dim(p, x) == 0
            assert stable_hom_dim(x, p) == 0


def test_split_detection(a3):
    from approxdim.repmod.module import direct_sum_full
    m, incls, _ = direct_sum_full([simple(a3, 1), simple(a3, 2)])
    assert splits(incls[0])
    seq = almost_split_starting_at(simple(a3, 3))
    assert not splits(seq.mono)


def test_hypothesis_reports():
    assert hypothesis_report(corpus_algebra("nak33")).self_injective
    assert not hypothesis_report(corpus_algebra("a3")).self_injective
    assert hypothesis_report(corpus_algebra("a3")).proj_inj == (1,)
    assert hypothesis_report(corpus_algebra("square")).proj_inj == (1,)
    assert hypothesis_report(corpus_algebra("a3")).ok
    assert not hypothesis_report(corpus_algebra("kx2")).ok


def test_node_requires_simple(a3):
    with pytest.raises(ValueError):
        is_node(dsum(a3, [simple(a3, 1), simple(a3, 2)]))
    assert not is_node(injective(a3, 1))
