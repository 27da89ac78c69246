"""Ideals and prime ideals of finite (semi)lattices, and the ideal lattice Id(L)."""

from __future__ import annotations

from .errors import KindMismatch, SizeGuardExceeded
from .order import (
    BoundedLattice,
    LatticeMorphism,
    Poset,
    as_bounded_lattice,
    bits,
    size_guard,
    two,
)


class Ideal:
    """A downward-closed, join-closed subset of a (semi)lattice, as a bitmask."""

    def __init__(self, lattice, members):
        if not is_ideal(lattice, members):
            raise ValueError(f"{lattice.subset_names(members)} is not an ideal")
        self.lattice = lattice
        self.members = members

    def names(self):
        return self.lattice.subset_names(self.members)

    def label(self):
        return ideal_label(self.lattice, self.members)

    def __contains__(self, i):
        return bool(self.members >> i & 1)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Ideal({self.label()})"


def ideal_label(lattice, members):
    return "{" + ",".join(lattice.subset_names(members)) + "}"


def is_ideal(l, mask):
    """Contains bottom, downward closed, closed under binary joins."""
    if not mask >> l.bottom & 1:
        return False
    for i in bits(mask):
        if l.down[i] & ~mask:
            return False
        for j in bits(mask):
            if not mask >> l.join[i][j] & 1:
                return False
    return True


def _downset_masks(p):
    """All down-sets, one per antichain of maximal elements (DFS, no dedup needed)."""
    out = []

    def extend(start, chosen_mask, downset):
        out.append(downset)
        for i in range(start, p.n):
            if chosen_mask & (p.up[i] | p.down[i]):
                continue  # comparable to an already chosen element
            extend(i + 1, chosen_mask | 1 << i, downset | p.down[i])

    extend(0, 0, 0)
    return out


def ideal_masks(l, guard=None):
    """Masks of all ideals of l, sorted by (cardinality, bit pattern).

    Small carriers are filtered subset-by-subset; larger ones enumerate
    down-sets via DFS over antichains first.
    """
    bound = size_guard(guard)
    if l.n <= 12:
        candidates = range(1 << l.n)
        if (1 << l.n) > bound:
            raise SizeGuardExceeded("ideal enumeration exceeds the size guard")
    else:
        candidates = _downset_masks(l)
        if len(candidates) > bound:
            raise SizeGuardExceeded("ideal enumeration exceeds the size guard")
    masks = [m for m in candidates if is_ideal(l, m)]
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    return masks


class IdealLattice:
    """All ideals of a (semi)lattice, assembled into a bounded lattice by inclusion."""

    def __init__(self, base, ideals, lattice):
        self.base = base
        self.ideals = ideals  # canonical list of Ideal
        self.lattice = lattice  # BoundedLattice over ideal labels

    def index_of_mask(self, members):
        for k, ideal in enumerate(self.ideals):
            if ideal.members == members:
                return k
        raise ValueError(f"no ideal with members {members:b}")

    def __len__(self):
        return len(self.ideals)


def all_ideals(l, guard=None):
    """The ideal lattice Id(l): meet is intersection, join is the least ideal above."""
    masks = ideal_masks(l, guard)
    ideals = [Ideal(l, m) for m in masks]
    labels = [i.label() for i in ideals]
    n = len(masks)
    up = []
    for i in range(n):
        m = 0
        for j in range(n):
            if masks[i] & ~masks[j] == 0:
                m |= 1 << j
        up.append(m)
    lattice = as_bounded_lattice(Poset(labels, up))
    return IdealLattice(l, ideals, lattice)


def principal_ideal(l, a):
    """The down-set of a; a may be an element name or index."""
    i = l.index(a) if isinstance(a, str) else a
    return Ideal(l, l.down[i])


def is_prime(l, mask):
    """Proper, and a ∧ b in I implies a in I or b in I."""
    if mask == l.full:
        return False
    for a in range(l.n):
        if mask >> a & 1:
            continue
        for b in range(a, l.n):
            if mask >> b & 1:
                continue
            if mask >> l.meet[a][b] & 1:
                return False
    return True


def prime_ideals(l, guard=None):
    """All prime ideals of a bounded lattice, canonically sorted."""
    return [Ideal(l, m) for m in ideal_masks(l, guard) if is_prime(l, m)]


def ideal_of_morphism(phi):
    """The (prime) ideal phi^{-1}(0) of a morphism into the two-element lattice."""
    tgt = phi.target
    if tgt.n != 2 or tgt.bottom != 0 or phi.kind not in ("jsl", "blat"):
        raise KindMismatch("expected a jsl or blat morphism into the 2-chain")
    mask = 0
    for i, v in enumerate(phi.mapping):
        if v == tgt.bottom:
            mask |= 1 << i
    ideal = Ideal(phi.source, mask)
    if phi.kind == "blat" and not is_prime(phi.source, mask):
        raise KindMismatch("blat morphism kernel is not prime")  # cannot happen
    return ideal


def morphism_of_ideal(ideal, kind="jsl"):
    """The characteristic morphism into the 2-chain with kernel the given ideal."""
    l = ideal.lattice
    tgt = two()
    if kind == "blat" and not is_prime(l, ideal.members):
        raise KindMismatch("ideal is not prime, no blat morphism exists")
    mapping = tuple(0 if ideal.members >> i & 1 else 1 for i in range(l.n))
    return LatticeMorphism(l, tgt, mapping, kind)


def join_irreducibles(l):
    """Indices of elements that are not the join of their strict down-set.

    This is the Birkhoff-side oracle: it reads only the order, never the
    prime-ideal machinery.
    """
    out = []
    for a in range(l.n):
        strict = l.down[a] & ~(1 << a)
        if l.join_of_mask(strict) != a:
            out.append(a)
    return out


def _compact_in(idl, k):
    """Literal compactness of ideal #k in Id(L), quantified over all families.

    On a finite carrier every family is itself a finite subfamily, so the
    check is always satisfied; it is still evaluated as stated.
    """
    lat = idl.lattice
    for family in range(1 << lat.n):
        if not lat.leq(k, lat.join_of_mask(family)):
            continue
        found = False
        for sub in range(1 << lat.n):
            if sub & ~family:
                continue
            if lat.leq(k, lat.join_of_mask(sub)):
                found = True
                break
        if not found:
            return False
    return True


def compact_elements(idl, guard=None):
    """The sub-poset of compact elements of Id(L), with an isomorphism to L.

    Returns (lattice, witness) where witness[a] is the index in the compact
    sub-lattice of the principal ideal of base element a.
    """
    bound = size_guard(guard)
    if (1 << idl.lattice.n) ** 2 > bound:
        raise SizeGuardExceeded("compactness check exceeds the size guard")
    compact = [k for k in range(len(idl)) if _compact_in(idl, k)]
    labels = [idl.ideals[k].label() for k in compact]
    up = []
    for a in compact:
        m = 0
        for bpos, b in enumerate(compact):
            if idl.lattice.leq(a, b):
                m |= 1 << bpos
        up.append(m)
    sub = as_bounded_lattice(Poset(labels, up))
    base = idl.base
    witness = []
    for a in range(base.n):
        members = base.down[a]
        k = idl.index_of_mask(members)
        witness.append(compact.index(k))
    # The witness must be an order isomorphism base -> compact sub-lattice.
    if sorted(witness) != list(range(sub.n)):
        raise ValueError("principal ideals do not exhaust the compact elements")
    for a in range(base.n):
        for b in range(base.n):
            if base.leq(a, b) != sub.leq(witness[a], witness[b]):
                raise ValueError("principal-ideal map is not an order isomorphism")
    return sub, tuple(witness)
