import itertools
import random

import pytest

from bklgarside import ncp
from bklgarside.bkl import canonical_word
from bklgarside.errors import ResourceLimitError
from bklgarside.ncp import NcPartition
from bklgarside.oracle import (RelationSet, enumerate_simples_bf, equivalence_class, equivalent_words,
                               product_mismatches, word_mismatches)
from bklgarside.perm import Permutation, compose

from helpers import atoms_of


def test_equivalent_words_examples():
    w = [(0, 1), (1, 2), (0, 2)]
    assert equivalent_words(w, w, 3)
    assert equivalent_words([(0, 1), (1, 2)], [(1, 2), (0, 2)], 3)
    assert equivalent_words([(0, 1), (1, 2)], [(0, 2), (0, 1)], 3)
    assert not equivalent_words([(0, 1)], [(1, 2)], 4)
    assert not equivalent_words([(0, 1)], [(0, 1), (1, 2)], 4)


def test_relation_counts():
    rels = RelationSet.bkl(4)
    commuting = [r for r in rels.rules if set(r[0][0]).isdisjoint(r[0][1])]
    # disjoint pairs on 4 points: {01,23}, {03,12} commute, {02,13} crosses
    assert len(commuting) == 2
    assert len(rels.rules) - len(commuting) == 3 * 4
    for n in range(2, 7):
        cyc = 3 * len(list(itertools.combinations(range(n), 3)))
        assert len(RelationSet.bkl(n).rules) >= cyc


def test_rules_are_true_in_engine():
    from helpers import bkl
    for n in range(3, 6):
        inst = bkl(n)
        for a, b in RelationSet.bkl(n).rules:
            assert inst.normal_form(inst.atom(*x) for x in a) == inst.normal_form(inst.atom(*x) for x in b)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 14)])
def test_enumerate_simples(n, count):
    assert len(enumerate_simples_bf(n)) == count


def test_enumerate_simples_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_simples_bf(6)


def test_limit_is_not_false():
    w1 = [(0, 1), (1, 2), (2, 3), (0, 1)]
    w2 = [(1, 2), (2, 3), (0, 3), (0, 1)]
    with pytest.raises(ResourceLimitError):
        equivalent_words(w1, [(0, 3)] * 4, 4, limit=2)
    assert equivalent_words(w1, w2, 4)
    with pytest.raises(ResourceLimitError):
        equivalence_class(w1, RelationSet.bkl(4), limit=3)


def _perm_of(n, word):
    p = Permutation.identity(n)
    for i, j in word:
        p = compose(p, Permutation.transposition(n, i, j))
    return p


@pytest.mark.parametrize("n", [3, 4])
def test_classes_respect_phi(n):
    rels = RelationSet.bkl(n)
    rng = random.Random(n)
    for _ in range(30):
        w = [rng.choice(atoms_of(n)) for _ in range(rng.randint(0, 4))]
        images = {_perm_of(n, v) for v in equivalence_class(w, rels)}
        assert len(images) == 1


def test_canonical_word_maps_to_phi():
    for n in range(1, 6):
        for lam in ncp.enumerate_nc(n):
            assert _perm_of(n, canonical_word(lam)) == ncp.phi(lam)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_product_agreement(n):
    assert product_mismatches(n) == []


def test_word_agreement_small():
    count, bad = word_mismatches(3, 4)
    assert count == sum(3 ** k for k in range(5)) and bad == []
