"""Tensor structures on semilattices, radical tensor ideals, and the classification."""

import pytest

from lattik.corpus import b2, chain, lattice_corpus, m3, n5
from lattik.errors import (
    NotDistributiveOverJoin,
    SizeGuardExceeded,
    UnitLawFails,
    ZeroLawFails,
)
from lattik.order import is_distributive, is_isomorphic, two
from lattik.tensor import (
    all_radical_tensor_ideals,
    build_tensor_lattice,
    check_classification,
    check_tensor_lemma,
    fuzz_tensor_lattices,
    generated_ideal,
    is_associative,
    is_radical_tensor_ideal,
    quotient_lattice,
    radical_closure,
)


def meet_tensor(l):
    """The canonical example: ⊗ = ∧ with unit the top."""
    return build_tensor_lattice(l, l.meet, l.top)


def nilpotent_c3():
    """0 < m1 < 1 with m1 ⊗ m1 = 0 and unit 1."""
    l = chain(3)
    z, m, u = l.index("0"), l.index("m1"), l.index("1")
    product = [[z] * 3 for _ in range(3)]
    for a in range(3):
        product[u][a] = a
        product[a][u] = a
    product[m][m] = z
    product[z][z] = z
    return build_tensor_lattice(l, product, u)


class TestConstruction:
    def test_meet_tensor_on_b2(self):
        t = meet_tensor(b2())
        assert t.unit == t.base.top
        assert is_associative(t)

    def test_meet_tensor_on_nondistributive(self):
        # the tensor axioms need join-distributivity of ⊗, not of the lattice;
        # ∧ on M3 fails it, which is exactly the M3 distributivity defect
        with pytest.raises(NotDistributiveOverJoin):
            meet_tensor(m3())

    def test_nilpotent_c3(self):
        t = nilpotent_c3()
        m = t.base.index("m1")
        assert t.tensor(m, m) == t.base.index("0")
        assert is_associative(t)

    def test_join_with_bottom_unit_fails_zero_law(self):
        l = b2()
        with pytest.raises(ZeroLawFails):
            build_tensor_lattice(l, l.join, l.bottom)

    def test_broken_unit(self):
        l = chain(3)
        product = [[l.meet[a][b] for b in range(3)] for a in range(3)]
        with pytest.raises(UnitLawFails):
            build_tensor_lattice(l, product, l.index("m1"))

    def test_ragged_table_rejected(self):
        with pytest.raises(ValueError):
            build_tensor_lattice(two(), [[0], [0, 1]], 1)


class TestRadicalClosure:
    def test_nilpotent_bottom_sweeps_up(self):
        t = nilpotent_c3()
        l = t.base
        # radical rule: m1 ⊗ m1 = 0 forces m1 into every radical ideal
        assert radical_closure(t, []) == (1 << l.index("0")) | (1 << l.index("m1"))

    def test_meet_tensor_closure_is_principal_downset(self):
        l = b2()
        t = meet_tensor(l)
        for a in range(l.n):
            assert generated_ideal(t, a) == l.down[a]

    def test_accepts_names(self):
        t = meet_tensor(b2())
        assert radical_closure(t, ["a"]) == t.base.down[t.base.index("a")]

    def closure_examples(self):
        out = []
        for l in lattice_corpus(4):
            out.append(meet_tensor(l))
        out.append(nilpotent_c3())
        return out

    def test_is_a_closure_operator(self):
        for t in self.closure_examples():
            n = t.n
            for s1 in range(n):
                c1 = radical_closure(t, [s1])
                assert c1 >> s1 & 1  # extensive
                assert radical_closure(t, list(range(n))) & c1 == c1
                # idempotent: closing the closure adds nothing
                assert radical_closure(t, [a for a in range(n) if c1 >> a & 1]) == c1
                for s2 in range(n):
                    c2 = radical_closure(t, [s1, s2])
                    assert c2 & c1 == c1  # monotone

    def test_closure_is_radical_ideal(self):
        for t in self.closure_examples():
            for a in range(t.n):
                assert is_radical_tensor_ideal(t, generated_ideal(t, a))


class TestRadicalIdeals:
    def test_meet_tensor_b2_gives_four(self):
        t = meet_tensor(b2())
        masks, lattice = all_radical_tensor_ideals(t)
        assert len(masks) == 4
        assert is_isomorphic(lattice, b2())

    def test_nilpotent_c3_gives_two(self):
        t = nilpotent_c3()
        masks, lattice = all_radical_tensor_ideals(t)
        assert len(masks) == 2
        assert is_isomorphic(lattice, two())

    def test_trivial_lattice(self):
        t = meet_tensor(two())
        masks, lattice = all_radical_tensor_ideals(t)
        assert len(masks) == 2

    def test_join_is_radical_closure_of_union(self):
        for l in lattice_corpus(5):
            if not is_distributive(l):
                continue
            t = meet_tensor(l)
            masks, lattice = all_radical_tensor_ideals(t)
            for i, a in enumerate(masks):
                for j, b in enumerate(masks):
                    joined = masks[lattice.join[i][j]]
                    seeds = [x for x in range(t.n) if (a | b) >> x & 1]
                    assert joined == radical_closure(t, seeds)
                    assert masks[lattice.meet[i][j]] == a & b


class TestQuotient:
    def test_meet_tensor_quotient_is_base(self):
        l = b2()
        lattice, projection, _ = quotient_lattice(meet_tensor(l))
        assert lattice.n == l.n
        assert sorted(projection) == list(range(l.n))
        assert is_isomorphic(lattice, l)

    def test_nilpotent_collapses_to_two(self):
        t = nilpotent_c3()
        lattice, projection, _ = quotient_lattice(t)
        assert lattice.n == 2
        assert projection[t.base.index("0")] == projection[t.base.index("m1")]

    def test_labels_show_merged_classes(self):
        lattice, _, _ = quotient_lattice(nilpotent_c3())
        assert "[0=m1]" in lattice.elements


class TestTensorLemma:
    def test_meet_tensor_examples(self):
        for l in lattice_corpus(5):
            if not is_distributive(l):
                continue
            cert = check_tensor_lemma(meet_tensor(l))
            assert cert.ok and cert.detail["pairs"] == l.n * l.n

    def test_nilpotent(self):
        assert check_tensor_lemma(nilpotent_c3()).ok

    def test_unit_pairs(self):
        # ⟨1⟩ ∩ ⟨b⟩ = ⟨b⟩ is the unit instance of the lemma
        t = meet_tensor(b2())
        whole = generated_ideal(t, t.unit)
        for b in range(t.n):
            assert whole & generated_ideal(t, b) == generated_ideal(t, b)


class TestClassification:
    def test_meet_tensor_b2(self):
        cert = check_classification(meet_tensor(b2()))
        assert cert.ok
        assert cert.detail["quotient_size"] == 4
        assert cert.detail["radical_ideal_count"] == 4

    def test_nilpotent_c3(self):
        cert = check_classification(nilpotent_c3())
        assert cert.ok and cert.detail["quotient_size"] == 2

    def test_meet_tensor_on_n5_variant(self):
        # ∧ on N5 is not join-distributive either; construction refuses it
        with pytest.raises(NotDistributiveOverJoin):
            meet_tensor(n5())


class TestFuzz:
    def test_deterministic(self):
        bases = lattice_corpus(4)
        a = [t.product for t in fuzz_tensor_lattices(bases, seed=7, count=30)]
        b = [t.product for t in fuzz_tensor_lattices(bases, seed=7, count=30)]
        assert a == b

    def test_different_seeds_differ(self):
        bases = lattice_corpus(4)
        a = [t.product for t in fuzz_tensor_lattices(bases, seed=1, count=30)]
        b = [t.product for t in fuzz_tensor_lattices(bases, seed=2, count=30)]
        assert a != b

    def test_all_fuzzed_satisfy_lemma_and_classification(self):
        bases = lattice_corpus(5)
        for t in fuzz_tensor_lattices(bases, seed=11, count=120):
            lemma = check_tensor_lemma(t)
            assert lemma.ok, lemma.to_json()
            cls = check_classification(t)
            assert cls.ok, cls.to_json()

    def test_budget_exhaustion(self):
        with pytest.raises(SizeGuardExceeded):
            list(fuzz_tensor_lattices(lattice_corpus(4), seed=3, count=10, max_draws=1))
