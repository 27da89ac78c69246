"""Join-semilattices with a join-distributive tensor product and their radical ideals."""

from __future__ import annotations

import random

from .errors import (
    NotDistributiveOverJoin,
    SizeGuardExceeded,
    UnitLawFails,
    ZeroLawFails,
)
from .ideals import all_ideals, ideal_masks, is_ideal
from .order import Poset, as_bounded_lattice, bits, is_distributive, size_guard


class TensorLattice:
    """A finite join-semilattice with a validated multiplication and unit.

    The product need not be commutative or associative; it must distribute
    over binary joins on both sides, absorb the bottom, and have the unit.
    """

    def __init__(self, base, product, unit):
        validate_tensor_axioms(base, product, unit)
        self.base = base
        self.product = tuple(tuple(row) for row in product)
        self.unit = unit

    @property
    def n(self):
        return self.base.n

    def tensor(self, a, b):
        return self.product[a][b]


def validate_tensor_axioms(base, product, unit):
    """Raise the first violated tensor axiom with a witness pair/triple."""
    n = base.n
    names = base.elements
    if len(product) != n or any(len(row) != n for row in product):
        raise ValueError("product table must be total over the carrier")
    z = base.bottom
    for a in range(n):
        if product[a][z] != z or product[z][a] != z:
            raise ZeroLawFails(
                f"{names[a]!r} does not absorb the bottom", witness=names[a]
            )
        if product[unit][a] != a or product[a][unit] != a:
            raise UnitLawFails(
                f"unit law fails at {names[a]!r}", witness=names[a]
            )
    for a in range(n):
        for b in range(n):
            for c in range(n):
                j = base.join[b][c]
                if product[a][j] != base.join[product[a][b]][product[a][c]]:
                    raise NotDistributiveOverJoin(
                        f"{names[a]!r} ⊗ ({names[b]!r} ∨ {names[c]!r}) fails",
                        witness=(names[a], names[b], names[c]),
                    )
                if product[j][a] != base.join[product[b][a]][product[c][a]]:
                    raise NotDistributiveOverJoin(
                        f"({names[b]!r} ∨ {names[c]!r}) ⊗ {names[a]!r} fails",
                        witness=(names[b], names[c], names[a]),
                    )
    # monotonicity follows from distributivity; checked anyway
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if base.leq(b, c):
                    if not base.leq(product[a][b], product[a][c]) or not base.leq(
                        product[b][a], product[c][a]
                    ):
                        raise NotDistributiveOverJoin(
                            "product is not monotone",
                            witness=(names[a], names[b], names[c]),
                        )


def build_tensor_lattice(base, product, unit):
    return TensorLattice(base, product, unit)


def is_radical_tensor_ideal(t, mask):
    """Ideal of the base, two-sided tensor-absorbing, and closed under square roots."""
    if not is_ideal(t.base, mask):
        return False
    for a in bits(mask):
        for b in range(t.n):
            if not mask >> t.product[a][b] & 1 or not mask >> t.product[b][a] & 1:
                return False
    for a in range(t.n):
        if mask >> t.product[a][a] & 1 and not mask >> a & 1:
            return False
    return True


def radical_closure(t, seeds):
    """Least radical tensor ideal containing the seeds, by fixpoint iteration.

    The four closure rules (downward, joins, two-sided absorption, radical)
    are applied until the member mask stabilizes; finiteness terminates it.
    """
    base = t.base
    mask = 1 << base.bottom
    for s in seeds:
        mask |= 1 << (base.index(s) if isinstance(s, str) else s)
    while True:
        new = mask
        for a in bits(mask):
            new |= base.down[a]
            for b in bits(mask):
                new |= 1 << base.join[a][b]
            for b in range(t.n):
                new |= 1 << t.product[a][b]
                new |= 1 << t.product[b][a]
        for a in range(t.n):
            if new >> t.product[a][a] & 1:
                new |= 1 << a
        if new == mask:
            return mask
        mask = new


def generated_ideal(t, a):
    """The radical tensor ideal generated by a single element."""
    return radical_closure(t, [a])


def all_radical_tensor_ideals(t, guard=None):
    """All radical tensor ideals, as a bounded lattice ordered by inclusion.

    Meet is intersection; join is the radical closure of the union (certified
    to be the least radical tensor ideal above both).
    """
    masks = [m for m in ideal_masks(t.base, guard) if is_radical_tensor_ideal(t, m)]
    labels = ["{" + ",".join(t.base.subset_names(m)) + "}" for m in masks]
    up = []
    for a in masks:
        bm = 0
        for j, b in enumerate(masks):
            if not a & ~b:
                bm |= 1 << j
        up.append(bm)
    lattice = as_bounded_lattice(Poset(labels, up))
    return masks, lattice


def quotient_lattice(t, guard=None):
    """L(⊗): the distinct generated ideals ⟨a⟩ ordered by inclusion.

    Returns (lattice, projection, class_masks) where projection[a] is the
    quotient index of ⟨a⟩.  Certifies [a]∨[b] = [a∨b] and [a]∧[b] = [a⊗b].
    """
    gen = [generated_ideal(t, a) for a in range(t.n)]
    class_masks = sorted(set(gen), key=lambda m: (bin(m).count("1"), m))
    projection = [class_masks.index(g) for g in gen]
    labels = []
    for m in class_masks:
        reps = [t.base.elements[a] for a in range(t.n) if gen[a] == m]
        labels.append("[" + "=".join(reps) + "]")
    up = []
    for a in class_masks:
        bm = 0
        for j, b in enumerate(class_masks):
            if not a & ~b:
                bm |= 1 << j
        up.append(bm)
    lattice = as_bounded_lattice(Poset(labels, up))
    # join and meet of classes are realized by ∨ and ⊗ on representatives
    for a in range(t.n):
        for b in range(t.n):
            ja = projection[a]
            jb = projection[b]
            if lattice.join[ja][jb] != projection[t.base.join[a][b]]:
                raise ValueError("quotient join formula fails")
            if lattice.meet[ja][jb] != projection[t.product[a][b]]:
                raise ValueError("quotient meet formula fails")
    return lattice, tuple(projection), tuple(class_masks)


class TensorCertificate:
    def __init__(self, ok, detail=None):
        self.ok = ok
        self.detail = detail or {}

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, **self.detail}


def check_tensor_lemma(t):
    """Verify ⟨a⟩ ∩ ⟨b⟩ = ⟨a ⊗ b⟩ for every pair; emit the witness on failure."""
    gen = [generated_ideal(t, a) for a in range(t.n)]
    for a in range(t.n):
        for b in range(t.n):
            lhs = gen[a] & gen[b]
            rhs = gen[t.product[a][b]]
            if lhs != rhs:
                return TensorCertificate(
                    False,
                    {
                        "witness": (t.base.elements[a], t.base.elements[b]),
                        "intersection": t.base.subset_names(lhs),
                        "generated": t.base.subset_names(rhs),
                    },
                )
    return TensorCertificate(True, {"pairs": t.n * t.n})


def check_classification(t, guard=None):
    """Certify the classification chain for one tensor lattice.

    (i) L(⊗) is distributive; (ii) Id(L(⊗)) is isomorphic to the lattice of
    radical tensor ideals via I ↦ {a : [a] in I}; (iii) composing with the
    open-set description, radical tensor ideals ≅ Ω(Spc(L(⊗))^v).
    """
    from .frames import id_vs_omega_dual

    lattice, projection, class_masks = quotient_lattice(t, guard)
    if not is_distributive(lattice):
        return TensorCertificate(False, {"reason": "quotient is not distributive"})
    radical_masks, radical_lattice = all_radical_tensor_ideals(t, guard)
    idl = all_ideals(lattice, guard)
    if len(idl) != len(radical_masks):
        return TensorCertificate(
            False,
            {
                "reason": "ideal/radical counts differ",
                "ideals": len(idl),
                "radicals": len(radical_masks),
            },
        )
    images = []
    for ideal in idl.ideals:
        members = 0
        for a in range(t.n):
            if ideal.members >> projection[a] & 1:
                members |= 1 << a
        images.append(members)
    if sorted(images) != sorted(radical_masks):
        return TensorCertificate(False, {"reason": "union-of-classes map not onto"})
    # inverse: S ↦ the ideal of classes with a representative in S
    for s in radical_masks:
        ideal_mask = 0
        for a in bits(s):
            ideal_mask |= 1 << projection[a]
        k = idl.index_of_mask(ideal_mask)
        if images[k] != s:
            return TensorCertificate(False, {"reason": "inverse roundtrip fails"})
    # order preservation both ways
    for i in range(len(images)):
        for j in range(len(images)):
            if (not idl.ideals[i].members & ~idl.ideals[j].members) != (
                not images[i] & ~images[j]
            ):
                return TensorCertificate(False, {"reason": "order not preserved"})
    omega_cert = id_vs_omega_dual(lattice, guard)
    if not omega_cert.ok:
        return TensorCertificate(
            False, {"reason": "open-set description fails", **omega_cert.detail}
        )
    return TensorCertificate(
        True,
        {
            "quotient_size": lattice.n,
            "radical_ideal_count": len(radical_masks),
        },
    )


def is_associative(t):
    """Optional check; none of the verified statements relies on it."""
    for a in range(t.n):
        for b in range(t.n):
            for c in range(t.n):
                if t.product[t.product[a][b]][c] != t.product[a][t.product[b][c]]:
                    return False
    return True


def _join_irreducible_indices(base):
    out = []
    for a in range(base.n):
        strict = base.down[a] & ~(1 << a)
        if base.join_of_mask(strict) != a:
            out.append(a)
    return out


def random_tensor_lattice(base, rng):
    """Draw a candidate tensor structure on the given semilattice, or None.

    Values are drawn on pairs of join-irreducibles and extended by the join
    decomposition; the full axiom set is then validated, rejecting the draw
    on any failure.  The bias keeps the acceptance rate workable.
    """
    n = base.n
    ji = _join_irreducible_indices(base)
    unit = rng.randrange(n)
    t = {}
    for i in ji:
        for j in ji:
            t[i, j] = rng.randrange(n)
    product = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a == unit:
                product[a][b] = b
                continue
            if b == unit:
                product[a][b] = a
                continue
            img = 0
            for i in ji:
                if not base.leq(i, a):
                    continue
                for j in ji:
                    if base.leq(j, b):
                        img |= 1 << t[i, j]
            product[a][b] = base.join_of_mask(img)
    try:
        return TensorLattice(base, product, unit)
    except (NotDistributiveOverJoin, UnitLawFails, ZeroLawFails):
        return None


def fuzz_tensor_lattices(bases, seed, count, max_draws=None):
    """Yield `count` valid tensor lattices fuzzed over the given semilattices.

    Deterministic for a fixed seed and base order.  Raises SizeGuardExceeded
    if the draw budget runs out before enough valid structures appear.
    """
    rng = random.Random(seed)
    bases = list(bases)
    budget = max_draws if max_draws is not None else count * 10_000
    produced = 0
    draws = 0
    while produced < count:
        if draws >= budget:
            raise SizeGuardExceeded(
                f"fuzzing produced only {produced} valid structures in {draws} draws"
            )
        base = bases[rng.randrange(len(bases))]
        draws += 1
        t = random_tensor_lattice(base, rng)
        if t is not None:
            produced += 1
            yield t
