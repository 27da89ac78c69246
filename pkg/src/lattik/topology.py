"""Finite topological spaces, the spectra Sp(L), Spc(L), Spc(L)^v, and continuity."""

from __future__ import annotations

from itertools import product

from .errors import NotT0, SizeGuardExceeded
from .order import Poset, as_bounded_lattice, bits, size_guard
from .ideals import all_ideals, ideal_label, prime_ideals


class FiniteSpace:
    """A finite point set with an explicit open-set family (bitmasks).

    The family must contain the empty and full sets and be closed under
    pairwise union and intersection.  The empty space has one open set,
    the mask 0, which is both empty and full.
    """

    def __init__(self, points, opens):
        points = tuple(points)
        n = len(points)
        if len(set(points)) != n:
            raise ValueError("point labels must be distinct")
        full = (1 << n) - 1
        family = sorted(set(opens), key=lambda m: (bin(m).count("1"), m))
        if 0 not in family or full not in family:
            raise ValueError("opens must contain the empty and full sets")
        fam = set(family)
        for a in family:
            if a & ~full:
                raise ValueError("open set references unknown point")
            for b in family:
                if a | b not in fam or a & b not in fam:
                    raise ValueError("opens are not closed under union/intersection")
        self.points = points
        self.n = n
        self.full = full
        self.opens = tuple(family)

    def is_open(self, mask):
        return mask in set(self.opens)

    def closed_sets(self):
        return tuple(
            sorted((self.full & ~u for u in self.opens), key=lambda m: (bin(m).count("1"), m))
        )

    def closure(self, mask):
        """Smallest closed superset of mask."""
        acc = self.full
        for c in self.closed_sets():
            if not mask & ~c:
                acc &= c
        return acc

    def point_index(self, label):
        return self.points.index(label)

    def subset_names(self, mask):
        return [self.points[i] for i in bits(mask)]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSpace)
            and self.points == other.points
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.points, self.opens))

    def __repr__(self):
        return f"FiniteSpace({len(self.points)} points, {len(self.opens)} opens)"


def _union_closure(masks):
    """All unions of subfamilies, including the empty union."""
    out = {0}
    frontier = list(masks)
    for m in frontier:
        out |= {m | x for x in out}
    # unions of unions add nothing new beyond pairwise closure iterated
    changed = True
    while changed:
        changed = False
        cur = list(out)
        for a in cur:
            for b in cur:
                if a | b not in out:
                    out.add(a | b)
                    changed = True
    return out


def _intersection_closure(masks, full):
    out = {full}
    for m in masks:
        out |= {m & x for x in out}
    changed = True
    while changed:
        changed = False
        cur = list(out)
        for a in cur:
            for b in cur:
                if a & b not in out:
                    out.add(a & b)
                    changed = True
    return out


def space_from_closed_basis(points, basis):
    """Topology whose closed sets are intersections of finite unions of basis sets."""
    points = tuple(points)
    full = (1 << len(points)) - 1
    unions = _union_closure(basis)
    closed = _intersection_closure(unions, full)
    opens = {full & ~c for c in closed}
    return FiniteSpace(points, opens)


def space_from_open_basis(points, basis):
    """Topology whose open sets are unions of finite intersections of basis sets."""
    points = tuple(points)
    full = (1 << len(points)) - 1
    inters = _intersection_closure(basis, full)
    opens = _union_closure(inters)
    return FiniteSpace(points, opens)


def discrete_space(points):
    return FiniteSpace(points, range(1 << len(points)))


def set_label(points, mask):
    return "{" + ",".join(points[i] for i in bits(mask)) + "}"


class SetLattice:
    """A bounded lattice of subsets, keeping the mask of each element."""

    def __init__(self, points, masks):
        masks = sorted(masks, key=lambda m: (bin(m).count("1"), m))
        labels = [set_label(points, m) for m in masks]
        up = []
        for a in masks:
            bitsmask = 0
            for j, b in enumerate(masks):
                if not a & ~b:
                    bitsmask |= 1 << j
            up.append(bitsmask)
        self.masks = tuple(masks)
        self.lattice = as_bounded_lattice(Poset(labels, up))

    def index_of_mask(self, mask):
        return self.masks.index(mask)


def omega_lattice(x):
    """Ω(X): the open sets ordered by inclusion (join = union, meet = intersection)."""
    return SetLattice(x.points, x.opens)


def cl_lattice(x):
    """Cl(X): the closed sets ordered by inclusion."""
    return SetLattice(x.points, x.closed_sets())


class SupportBasis:
    """The map a ↦ supp(a) into subsets of a space; flavor 'closed' or 'open'."""

    def __init__(self, space, assignment, flavor):
        if flavor not in ("closed", "open"):
            raise ValueError("flavor must be 'closed' or 'open'")
        sets = space.closed_sets() if flavor == "closed" else space.opens
        for m in assignment:
            if m not in sets:
                raise ValueError(f"support set is not {flavor} in the space")
        self.space = space
        self.assignment = tuple(assignment)
        self.flavor = flavor


class Spectrum:
    """A spectral construction: the space, its supp basis, and the point ideals."""

    def __init__(self, lattice, space, supp, point_ideals, kind):
        self.lattice = lattice
        self.space = space
        self.supp = supp
        self.point_ideals = tuple(point_ideals)  # base-lattice mask per point
        self.kind = kind  # 'sp' | 'spc' | 'spc_dual'

    def point_of_ideal(self, members):
        return self.point_ideals.index(members)


def _supp_masks(l, ideal_masks_list):
    """supp(a) = mask of points (ideals) not containing a."""
    out = []
    for a in range(l.n):
        m = 0
        for p, ideal in enumerate(ideal_masks_list):
            if not ideal >> a & 1:
                m |= 1 << p
        out.append(m)
    return out


def sp_space(l, guard=None):
    """Sp(L): all ideals with closed basis supp(a) = {I : a not in I}."""
    idl = all_ideals(l, guard)
    masks = [i.members for i in idl.ideals]
    labels = [i.label() for i in idl.ideals]
    supp = _supp_masks(l, masks)
    _check_closed_supp_axioms(l, supp, join_only=True)
    space = space_from_closed_basis(labels, supp)
    basis = SupportBasis(space, supp, "closed")
    return Spectrum(l, space, basis, masks, "sp")


def spc_space(l, guard=None):
    """Spc(L): the prime ideals with closed basis supp(a)."""
    primes = prime_ideals(l, guard)
    masks = [p.members for p in primes]
    labels = [p.label() for p in primes]
    supp = _supp_masks(l, masks)
    _check_closed_supp_axioms(l, supp, join_only=False, npoints=len(masks))
    space = space_from_closed_basis(labels, supp)
    basis = SupportBasis(space, supp, "closed")
    return Spectrum(l, space, basis, masks, "spc")


def hochster_dual(l, guard=None):
    """Spc(L)^v: the prime ideals retopologized with the supp sets as open basis."""
    primes = prime_ideals(l, guard)
    masks = [p.members for p in primes]
    labels = [p.label() for p in primes]
    supp = _supp_masks(l, masks)
    full = (1 << len(masks)) - 1
    for a in range(l.n):
        for b in range(l.n):
            if supp[l.meet[a][b]] != supp[a] & supp[b]:
                raise ValueError("supp does not turn meets into intersections")
    if full and supp[l.top] != full:
        raise ValueError("supp sets do not cover the spectrum")
    space = space_from_open_basis(labels, supp)
    basis = SupportBasis(space, supp, "open")
    return Spectrum(l, space, basis, masks, "spc_dual")


def _check_closed_supp_axioms(l, supp, join_only, npoints=None):
    if supp[l.bottom] != 0:
        raise ValueError("supp(0) is not empty")
    for a in range(l.n):
        for b in range(l.n):
            if supp[l.join[a][b]] != supp[a] | supp[b]:
                raise ValueError("supp does not turn joins into unions")
    inter = None
    for a in range(l.n):
        inter = supp[a] if inter is None else inter & supp[a]
    if inter:
        raise ValueError("the supp sets have nonempty total intersection")
    if not join_only:
        full = (1 << npoints) - 1
        for a in range(l.n):
            for b in range(l.n):
                if supp[l.meet[a][b]] != supp[a] & supp[b]:
                    raise ValueError("supp does not turn meets into intersections")
        if supp[l.top] != full:
            raise ValueError("supp(1) is not the whole spectrum")


def specialization_order(x):
    """The poset x <= y iff x lies in the closure of {y}; raises NotT0 if not a poset."""
    closed = x.closed_sets()
    up = []
    for i in range(x.n):
        # cl{y} for y = j: smallest closed set containing j
        m = 0
        for j in range(x.n):
            clj = x.full
            for c in closed:
                if c >> j & 1:
                    clj &= c
            if clj >> i & 1:
                m |= 1 << j
        up.append(m)
    # up[i] currently holds {j : i in cl{j}} = {j : i <= j}; check axioms
    for i in range(x.n):
        for j in bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise NotT0(
                    f"points {x.points[i]!r} and {x.points[j]!r} are topologically equal"
                )
    return Poset(x.points, up)


def preimage(f, y_mask, x_n):
    """Preimage mask of y_mask under the point map f (tuple of target indices)."""
    m = 0
    for i in range(x_n):
        if y_mask >> f[i] & 1:
            m |= 1 << i
    return m


def is_continuous(f, x, y):
    """True iff the preimage of every open of y is open in x."""
    f = tuple(f)
    if len(f) != x.n:
        raise ValueError("map must be total on the points of the source")
    openset = set(x.opens)
    for u in y.opens:
        if preimage(f, u, x.n) not in openset:
            return False
    return True


def enumerate_continuous(x, y, guard=None):
    """All continuous maps x -> y as image tuples, in lexicographic order."""
    bound = size_guard(guard)
    if x.n == 0:
        return [()]
    if y.n == 0:
        return []  # no maps into the empty space from a nonempty one
    if y.n ** x.n > bound:
        raise SizeGuardExceeded("continuous-map enumeration exceeds the size guard")
    return [f for f in product(range(y.n), repeat=x.n) if is_continuous(f, x, y)]


def _point_invariant(x):
    inv = []
    for i in range(x.n):
        sizes = tuple(sorted(bin(u).count("1") for u in x.opens if u >> i & 1))
        inv.append(sizes)
    return inv


def find_homeomorphism(x, y):
    """A bijection on points transporting opens both ways, or None.

    Backtracking with a per-point invariant (sizes of the opens containing
    the point) as pruning.
    """
    if x.n != y.n or len(x.opens) != len(y.opens):
        return None
    xs = sorted(bin(u).count("1") for u in x.opens)
    ys = sorted(bin(u).count("1") for u in y.opens)
    if xs != ys:
        return None
    xi = _point_invariant(x)
    yi = _point_invariant(y)
    if sorted(xi) != sorted(yi):
        return None
    img = [None] * x.n
    used = [False] * y.n
    yopens = set(y.opens)

    def dfs(i):
        if i == x.n:
            for u in x.opens:
                if preimage_inverse(img, u) not in yopens:
                    return False
            return True
        for v in range(y.n):
            if used[v] or xi[i] != yi[v]:
                continue
            img[i] = v
            used[v] = True
            if dfs(i + 1):
                return True
            img[i] = None
            used[v] = False
        return False

    def preimage_inverse(mapping, mask):
        m = 0
        for i in bits(mask):
            m |= 1 << mapping[i]
        return m

    if x.n == 0:
        return ()
    if dfs(0):
        return tuple(img)
    return None


def is_homeomorphic(x, y):
    f = find_homeomorphism(x, y)
    if f is None:
        return False
    # certify both directions explicitly
    inv = [0] * len(f)
    for i, v in enumerate(f):
        inv[v] = i
    return is_continuous(f, x, y) and is_continuous(tuple(inv), y, x)
