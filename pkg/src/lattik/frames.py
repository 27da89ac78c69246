"""Finite frames, their point spaces, spatiality, and the coherent-frame isomorphisms."""

from __future__ import annotations

from .errors import NotAFrame, NotDistributive, SizeGuardExceeded
from .ideals import all_ideals, compact_elements, principal_ideal
from .order import (
    LatticeMorphism,
    bits,
    enumerate_morphisms,
    find_isomorphism,
    is_distributive,
    size_guard,
    two,
)
from .topology import (
    FiniteSpace,
    SetLattice,
    find_homeomorphism,
    hochster_dual,
    is_continuous,
    omega_lattice,
)


class Frame:
    """A bounded lattice certified to satisfy the frame distributivity law."""

    def __init__(self, lattice):
        self.lattice = lattice

    @property
    def n(self):
        return self.lattice.n


def frame_law_witness(l, guard=None):
    """A pair (a, subset-mask) violating a ∧ ⋁S = ⋁(a ∧ s), or None.

    The law is checked literally over all subsets up to the size guard; for a
    finite lattice it is equivalent to binary distributivity, which is used as
    the fallback beyond the guard.
    """
    bound = size_guard(guard)
    if l.n * (1 << l.n) <= bound:
        for a in range(l.n):
            for mask in range(1 << l.n):
                joined = l.join_of_mask(mask)
                rhs_mask = 0
                for b in bits(mask):
                    rhs_mask |= 1 << l.meet[a][b]
                if l.meet[a][joined] != l.join_of_mask(rhs_mask):
                    return (a, mask)
        return None
    # beyond the guard: the binary law, provably equivalent on finite carriers
    for a in range(l.n):
        for b in range(l.n):
            for c in range(l.n):
                if l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]:
                    return (a, (1 << b) | (1 << c))
    return None


def as_frame(l, guard=None):
    """Certify the frame law or raise NotAFrame with a violating (a, subset) witness."""
    witness = frame_law_witness(l, guard)
    if witness is not None:
        a, mask = witness
        raise NotAFrame(
            f"{l.elements[a]!r} fails to distribute over the join of "
            f"{l.subset_names(mask)}",
            witness=(l.elements[a], l.subset_names(mask)),
        )
    return Frame(l)


class PointSpace:
    """The space Pt(F): frame morphisms F -> 2 with opens U(a) = {φ : φ(a)=1}."""

    def __init__(self, frame, morphisms, space, u_sets):
        self.frame = frame
        self.morphisms = morphisms
        self.space = space
        self.u_sets = tuple(u_sets)  # point mask per frame element

    def __len__(self):
        return len(self.morphisms)


def _kernel_label(f, phi):
    members = [f.lattice.elements[a] for a in range(f.n) if phi(a) == 0]
    return "{" + ",".join(members) + "}"


def points(f, guard=None):
    """All points of the frame and the topology generated by the sets U(a)."""
    morphisms = enumerate_morphisms(f.lattice, two(), "frame", guard)
    labels = [_kernel_label(f, phi) for phi in morphisms]
    u_sets = []
    for a in range(f.n):
        m = 0
        for p, phi in enumerate(morphisms):
            if phi(a) == 1:
                m |= 1 << p
        u_sets.append(m)
    # The U(a) are already closed under union and intersection.
    space = FiniteSpace(labels, set(u_sets) | {0, (1 << len(morphisms)) - 1})
    return PointSpace(f, morphisms, space, u_sets)


class SpatialityCertificate:
    def __init__(self, frame, injective, surjective, witness=None):
        self.frame = frame
        self.injective = injective
        self.surjective = surjective
        self.spatial = injective and surjective
        self.witness = witness

    def __bool__(self):
        return self.spatial

    def to_json(self):
        return {
            "lattice": list(self.frame.lattice.elements),
            "injective": self.injective,
            "surjective": self.surjective,
            "spatial": self.spatial,
            "witness": self.witness,
        }


def is_spatial(f, guard=None):
    """Evaluate the unit a ↦ U(a) and certify it is an isomorphism onto Ω(Pt(F))."""
    pt = points(f, guard)
    seen = {}
    injective = True
    witness = None
    for a in range(f.n):
        u = pt.u_sets[a]
        if u in seen:
            injective = False
            witness = (f.lattice.elements[seen[u]], f.lattice.elements[a])
            break
        seen[u] = a
    surjective = set(pt.space.opens) <= set(pt.u_sets)
    return SpatialityCertificate(f, injective, surjective, witness)


def restrict_along_principal(idl, psi):
    """Restrict a morphism on Id(L) along a ↦ principal ideal of a."""
    base = idl.base
    mapping = []
    for a in range(base.n):
        k = idl.index_of_mask(base.down[a])
        mapping.append(psi(k))
    return tuple(mapping)


def extend_morphism(l, f, phi, guard=None):
    """Extend a bounded-lattice morphism L -> F to the frame morphism Id(L) -> F.

    The extension sends an ideal I to the join of φ over its members;
    restricting back along the principal-ideal embedding returns φ.
    Requires l distributive.
    """
    if not is_distributive(l):
        raise NotDistributive("the base lattice must be distributive")
    idl = all_ideals(l, guard)
    mapping = []
    for ideal in idl.ideals:
        img_mask = 0
        for a in bits(ideal.members):
            img_mask |= 1 << phi(a)
        mapping.append(f.lattice.join_of_mask(img_mask))
    psi = LatticeMorphism(idl.lattice, f.lattice, mapping, "frame")
    if restrict_along_principal(idl, psi) != phi.mapping:
        raise ValueError("extension does not restrict back to the given morphism")
    return psi


class HomeoCertificate:
    def __init__(self, ok, point_map=None, detail=None):
        self.ok = ok
        self.point_map = point_map
        self.detail = detail or {}

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "point_map": self.point_map, **self.detail}


def pt_ideal_vs_hochster(l, guard=None):
    """Certify Pt(Id(L)) ≅ Spc(L)^v via φ ↦ φ^{-1}(0) ∩ L, for distributive L.

    The map identifies each point of Id(L) with a prime ideal of L and must
    carry U(principal(a)) to supp(a); both transport directions are checked.
    """
    if not is_distributive(l):
        raise NotDistributive("the base lattice must be distributive")
    idl = all_ideals(l, guard)
    frame = as_frame(idl.lattice, guard)
    pt = points(frame, guard)
    dualspec = hochster_dual(l, guard)
    if len(pt.morphisms) != dualspec.space.n:
        return HomeoCertificate(False, detail={"reason": "point counts differ"})
    mapping = []
    for phi in pt.morphisms:
        # φ^{-1}(0) ∩ L: base elements whose principal ideal is killed by φ
        members = 0
        for a in range(l.n):
            k = idl.index_of_mask(l.down[a])
            if phi(k) == 0:
                members |= 1 << a
        try:
            mapping.append(dualspec.point_of_ideal(members))
        except ValueError:
            return HomeoCertificate(
                False, detail={"reason": "image is not a prime ideal point"}
            )
    if sorted(mapping) != list(range(dualspec.space.n)):
        return HomeoCertificate(False, detail={"reason": "map is not a bijection"})
    inv = [0] * len(mapping)
    for i, v in enumerate(mapping):
        inv[v] = i
    if not (
        is_continuous(tuple(mapping), pt.space, dualspec.space)
        and is_continuous(tuple(inv), dualspec.space, pt.space)
    ):
        return HomeoCertificate(False, detail={"reason": "not a homeomorphism"})
    # U(principal(a)) must transport to supp(a)
    for a in range(l.n):
        k = idl.index_of_mask(l.down[a])
        transported = 0
        for p in bits(pt.u_sets[k]):
            transported |= 1 << mapping[p]
        if transported != dualspec.supp.assignment[a]:
            return HomeoCertificate(
                False, detail={"reason": f"U(principal({l.elements[a]})) != supp"}
            )
    return HomeoCertificate(True, point_map=mapping)


def support_union_map(l, guard=None):
    """The assignment I ↦ ⋃_{a in I} supp(a) into subsets of Spc(L)^v, any lattice."""
    idl = all_ideals(l, guard)
    dualspec = hochster_dual(l, guard)
    images = []
    for ideal in idl.ideals:
        m = 0
        for a in bits(ideal.members):
            m |= dualspec.supp.assignment[a]
        images.append(m)
    return idl, dualspec, images


class IsoCertificate:
    def __init__(self, ok, detail=None):
        self.ok = ok
        self.detail = detail or {}

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, **self.detail}


def id_vs_omega_dual(l, guard=None):
    """Certify I ↦ ⋃ supp(a) is a lattice isomorphism Id(L) ≅ Ω(Spc(L)^v).

    The stated inverse U ↦ {a : supp(a) ⊆ U} is applied and both composites
    are checked to be identities.  Requires l distributive.
    """
    if not is_distributive(l):
        raise NotDistributive("the base lattice must be distributive")
    idl, dualspec, images = support_union_map(l, guard)
    omega = omega_lattice(dualspec.space)
    opens = set(omega.masks)
    if any(m not in opens for m in images):
        return IsoCertificate(False, {"reason": "image is not open"})
    if len(set(images)) != len(images) or set(images) != opens:
        return IsoCertificate(False, {"reason": "map is not a bijection onto opens"})
    # inverse: U ↦ {a : supp(a) ⊆ U}
    for u in omega.masks:
        back = 0
        for a in range(l.n):
            if not dualspec.supp.assignment[a] & ~u:
                back |= 1 << a
        k = idl.index_of_mask(back)
        if images[k] != u:
            return IsoCertificate(False, {"reason": "inverse roundtrip fails"})
    for k, ideal in enumerate(idl.ideals):
        back = 0
        for a in range(l.n):
            if not dualspec.supp.assignment[a] & ~images[k]:
                back |= 1 << a
        if back != ideal.members:
            return IsoCertificate(False, {"reason": "forward roundtrip fails"})
    # order preservation both ways makes it a lattice isomorphism
    for i in range(len(idl)):
        for j in range(len(idl)):
            incl_ideals = not idl.ideals[i].members & ~idl.ideals[j].members
            incl_opens = not images[i] & ~images[j]
            if incl_ideals != incl_opens:
                return IsoCertificate(False, {"reason": "order is not preserved"})
    return IsoCertificate(
        True,
        {
            "ideal_count": len(idl),
            "open_count": len(omega.masks),
        },
    )


def coherence_check(f, guard=None):
    """Check the frame is isomorphic to Id of its own compact-element sublattice."""
    idl = all_ideals(f.lattice, guard)
    compact, _ = compact_elements(idl, guard)
    return find_isomorphism(all_ideals(compact, guard).lattice, f.lattice) is not None
