"""Corpus generation: counts, canonicity, and determinism."""

import pytest

from lattik.corpus import (
    LATTICE_COUNTS,
    all_lattices,
    all_posets,
    all_topologies,
    lattice_corpus,
    space_corpus,
    standard_lattices,
)
from lattik.errors import BoundExceeded
from lattik.order import canonical_key, is_isomorphic


class TestLatticeCounts:
    def test_counts_up_to_six(self):
        levels = all_lattices(6)
        assert [len(level) for level in levels] == [
            LATTICE_COUNTS[n] for n in range(1, 7)
        ]

    def test_counts_up_to_seven(self):
        assert len(all_lattices(7)[-1]) == LATTICE_COUNTS[7]

    def test_no_two_isomorphic(self, corpus5):
        for i, a in enumerate(corpus5):
            for b in corpus5[i + 1 :]:
                if a.n == b.n:
                    assert not is_isomorphic(a, b)

    def test_standard_lattices_are_in_the_corpus(self, corpus5):
        keys = {canonical_key(l) for l in corpus5}
        for name, l in standard_lattices().items():
            if l.n <= 5:
                assert canonical_key(l) in keys, name

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            all_lattices(9)


class TestPosetCounts:
    def test_counts_up_to_five(self):
        # number of posets up to isomorphism: 1, 2, 5, 16, 63
        levels = all_posets(5)
        assert [len(level) for level in levels] == [1, 2, 5, 16, 63]


class TestTopologies:
    def test_labeled_counts(self):
        # labeled topologies on 0..3 points
        assert [len(all_topologies(n)) for n in range(4)] == [1, 1, 4, 29]

    def test_space_corpus_size(self, spaces3):
        assert len(spaces3) == 35

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            all_topologies(5)


class TestDeterminism:
    def test_lattice_corpus_is_stable(self):
        a = [(l.elements, l.up) for l in lattice_corpus(5)]
        b = [(l.elements, l.up) for l in lattice_corpus(5)]
        assert a == b

    def test_space_corpus_is_stable(self):
        a = [(s.points, s.opens) for s in space_corpus(3)]
        b = [(s.points, s.opens) for s in space_corpus(3)]
        assert a == b
