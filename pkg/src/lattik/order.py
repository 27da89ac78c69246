"""Finite posets, join-semilattices, and bounded lattices over bitmask carriers.

Elements are indexed densely by their position in the declared name list.
Every subset of the carrier is an int bitmask: bit i set means element i is
in the subset.  The order relation is stored as a tuple of "up" masks,
``up[i]`` being the mask of all j with i <= j.
"""

from __future__ import annotations

import os

from .errors import (
    DuplicateName,
    NoBottom,
    NoJoin,
    NoMeet,
    NoTop,
    NotAntisymmetric,
    SizeGuardExceeded,
    UnknownName,
)

DEFAULT_SIZE_GUARD = 100_000_000


def size_guard(override=None):
    """Resolve the search bound: explicit argument, else env var, else default."""
    if override is not None:
        return int(override)
    return int(os.environ.get("LATTIK_SIZE_GUARD", DEFAULT_SIZE_GUARD))


def bits(mask):
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset; validates the order axioms on construction."""

    def __init__(self, elements, up):
        elements = tuple(elements)
        up = tuple(up)
        n = len(elements)
        if len(set(elements)) != n:
            raise DuplicateName("element names must be pairwise distinct")
        if any(not isinstance(e, str) or not e for e in elements):
            raise DuplicateName("element names must be nonempty strings")
        if len(up) != n:
            raise ValueError("up must have one mask per element")
        full = (1 << n) - 1
        for i in range(n):
            if up[i] & ~full:
                raise ValueError("up mask references unknown element index")
            if not up[i] >> i & 1:
                raise ValueError(f"order is not reflexive at {elements[i]!r}")
        for i in range(n):
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    raise ValueError(
                        f"order is not transitive at {elements[i]!r} <= {elements[j]!r}"
                    )
                if i != j and up[j] >> i & 1:
                    raise NotAntisymmetric(
                        f"{elements[i]!r} and {elements[j]!r} form a 2-cycle"
                    )
        self.elements = elements
        self.up = up
        self.n = n
        self.full = full
        self.down = tuple(
            sum(1 << i for i in range(n) if up[i] >> j & 1) for j in range(n)
        )

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise UnknownName(f"unknown element {name!r}") from None

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def covers(self, i):
        """Mask of upper covers of i (j > i with nothing strictly between)."""
        strict = self.up[i] & ~(1 << i)
        out = 0
        for j in bits(strict):
            if not strict & self.down[j] & ~(1 << j):
                out |= 1 << j
        return out

    def linear_extension(self):
        """Element indices sorted bottom-up, ties broken by declaration order."""
        return sorted(range(self.n), key=lambda i: (bin(self.down[i]).count("1"), i))

    def dual_poset(self):
        return Poset(self.elements, self.down)

    def subset_names(self, mask):
        return [self.elements[i] for i in bits(mask)]

    def __repr__(self):
        return f"{type(self).__name__}({list(self.elements)!r})"


def build_poset(names, leq_pairs):
    """Build a poset as the reflexive-transitive closure of the given pairs."""
    names = list(names)
    if not names:
        raise UnknownName("names must be nonempty")
    n = len(names)
    if len(set(names)) != n:
        raise DuplicateName("element names must be pairwise distinct")
    idx = {name: i for i, name in enumerate(names)}
    up = [1 << i for i in range(n)]
    for a, b in leq_pairs:
        if a not in idx:
            raise UnknownName(f"unknown element {a!r}")
        if b not in idx:
            raise UnknownName(f"unknown element {b!r}")
        up[idx[a]] |= 1 << idx[b]
    # Warshall-style transitive closure on the up masks.
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    for i in range(n):
        for j in bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise NotAntisymmetric(f"{names[i]!r} and {names[j]!r} form a 2-cycle")
    return Poset(names, up)


def _lub(p, i, j):
    """Least upper bound index of i,j in p, or None."""
    ub = p.up[i] & p.up[j]
    for k in bits(ub):
        if not ub & ~p.up[k]:
            return k
    return None


def _glb(p, i, j):
    lb = p.down[i] & p.down[j]
    best = None
    for k in bits(lb):
        if not lb & ~p.down[k]:
            return k
    return best


class JoinSemilattice(Poset):
    """Poset with all finite joins, including the empty join (bottom)."""

    def __init__(self, elements, up, bottom, join):
        super().__init__(elements, up)
        self.bottom = bottom
        self.join = tuple(tuple(row) for row in join)

    def join_of_mask(self, mask):
        """Join of a subset; the empty join is the bottom element."""
        acc = self.bottom
        for i in bits(mask):
            acc = self.join[acc][i]
        return acc


class BoundedLattice(JoinSemilattice):
    """Poset with all finite joins and meets; carries 0 and 1."""

    def __init__(self, elements, up, bottom, join, top, meet):
        super().__init__(elements, up, bottom, join)
        self.top = top
        self.meet = tuple(tuple(row) for row in meet)

    def meet_of_mask(self, mask):
        """Meet of a subset; the empty meet is the top element."""
        acc = self.top
        for i in bits(mask):
            acc = self.meet[acc][i]
        return acc


def as_join_semilattice(p):
    """Compute the join table and bottom of p, or raise NoJoin/NoBottom."""
    bottom = None
    for i in range(p.n):
        if p.up[i] == p.full:
            bottom = i
            break
    if bottom is None:
        raise NoBottom("poset has no minimum element")
    join = [[0] * p.n for _ in range(p.n)]
    for i in range(p.n):
        for j in range(i, p.n):
            k = _lub(p, i, j)
            if k is None:
                raise NoJoin(p.elements[i], p.elements[j])
            join[i][j] = join[j][i] = k
    return JoinSemilattice(p.elements, p.up, bottom, join)


def as_bounded_lattice(p):
    """Compute join and meet tables plus 0 and 1, or raise the missing-piece error."""
    jsl = as_join_semilattice(p)
    top = None
    for i in range(p.n):
        if p.down[i] == p.full:
            top = i
            break
    if top is None:
        raise NoTop("poset has no maximum element")
    meet = [[0] * p.n for _ in range(p.n)]
    for i in range(p.n):
        for j in range(i, p.n):
            k = _glb(p, i, j)
            if k is None:
                raise NoMeet(p.elements[i], p.elements[j])
            meet[i][j] = meet[j][i] = k
    return BoundedLattice(p.elements, p.up, jsl.bottom, jsl.join, top, meet)


def dual(l):
    """The dual lattice: same carrier, order reversed, join/meet swapped."""
    return BoundedLattice(l.elements, l.down, l.top, l.meet, l.bottom, l.join)


def is_distributive(l):
    """True iff a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for all triples."""
    for a in range(l.n):
        for b in range(l.n):
            for c in range(l.n):
                if l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]:
                    return False
    return True


def distributivity_witness(l):
    """A violating triple (a, b, c) of element names, or None."""
    for a in range(l.n):
        for b in range(l.n):
            for c in range(l.n):
                if l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]:
                    return (l.elements[a], l.elements[b], l.elements[c])
    return None


def two():
    """The two-element lattice with 0 < 1."""
    return as_bounded_lattice(build_poset(["0", "1"], [("0", "1")]))


MORPHISM_KINDS = ("jsl", "blat", "frame")


class LatticeMorphism:
    """A structure-preserving map, stored as an image tuple over source indices."""

    def __init__(self, source, target, mapping, kind):
        if kind not in MORPHISM_KINDS:
            raise ValueError(f"unknown morphism kind {kind!r}")
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)
        self.kind = kind

    def __call__(self, i):
        return self.mapping[i]

    def __eq__(self, other):
        return (
            isinstance(other, LatticeMorphism)
            and self.mapping == other.mapping
            and self.kind == other.kind
        )

    def __hash__(self):
        return hash((self.mapping, self.kind))

    def __repr__(self):
        pairs = ", ".join(
            f"{a}->{self.target.elements[m]}"
            for a, m in zip(self.source.elements, self.mapping)
        )
        return f"LatticeMorphism[{self.kind}]({pairs})"


def is_morphism(src, tgt, mapping, kind):
    """Check the preservation laws of the given kind for an image tuple."""
    f = mapping
    if f[src.bottom] != tgt.bottom:
        return False
    for a in range(src.n):
        for b in range(src.n):
            if f[src.join[a][b]] != tgt.join[f[a]][f[b]]:
                return False
    if kind in ("blat", "frame"):
        if f[src.top] != tgt.top:
            return False
        for a in range(src.n):
            for b in range(src.n):
                if f[src.meet[a][b]] != tgt.meet[f[a]][f[b]]:
                    return False
    if kind == "frame":
        # On a finite carrier arbitrary joins reduce to finite ones, but the
        # law is checked literally over all subsets.
        for mask in range(1 << src.n):
            img = 0
            for i in bits(mask):
                img |= 1 << f[i]
            if f[src.join_of_mask(mask)] != tgt.join_of_mask(img):
                return False
    return True


def enumerate_morphisms(src, tgt, kind, guard=None):
    """All morphisms src -> tgt of the given kind, sorted by image tuple.

    DFS assigns images in a linear extension of src, pruning as soon as an
    already-determined equation (bounds, binary joins/meets, monotonicity)
    is violated.  Raises SizeGuardExceeded when the number of attempted
    partial extensions passes the guard.
    """
    if kind not in MORPHISM_KINDS:
        raise ValueError(f"unknown morphism kind {kind!r}")
    bound = size_guard(guard)
    order = src.linear_extension()
    pos = [0] * src.n
    for s, e in enumerate(order):
        pos[e] = s
    need_meet = kind in ("blat", "frame")
    img = [0] * src.n
    assigned = [False] * src.n
    results = []
    attempts = 0

    def consistent(e):
        fe = img[e]
        if e == src.bottom and fe != tgt.bottom:
            return False
        if need_meet and e == src.top and fe != tgt.top:
            return False
        for k in range(src.n):
            if not assigned[k]:
                continue
            if src.leq(k, e) and not tgt.leq(img[k], fe):
                return False
            if src.leq(e, k) and not tgt.leq(fe, img[k]):
                return False
        # every join/meet equation whose three participants are now assigned
        # and that mentions e
        for a in range(src.n):
            if not assigned[a]:
                continue
            for b in range(a, src.n):
                if not assigned[b]:
                    continue
                j = src.join[a][b]
                if (e in (a, b, j)) and assigned[j] and img[j] != tgt.join[img[a]][img[b]]:
                    return False
                if need_meet:
                    m = src.meet[a][b]
                    if (e in (a, b, m)) and assigned[m] and img[m] != tgt.meet[img[a]][img[b]]:
                        return False
        return True

    def dfs(s):
        nonlocal attempts
        if s == src.n:
            results.append(tuple(img))
            return
        e = order[s]
        for v in range(tgt.n):
            attempts += 1
            if attempts > bound:
                raise SizeGuardExceeded(
                    f"morphism search exceeded {bound} candidate extensions"
                )
            img[e] = v
            assigned[e] = True
            if consistent(e):
                dfs(s + 1)
            assigned[e] = False

    dfs(0)
    results.sort()
    morphisms = [LatticeMorphism(src, tgt, m, kind) for m in results]
    if kind == "frame":
        # Certify the literal arbitrary-join law; on finite carriers this
        # never removes anything found by the binary checks.
        morphisms = [m for m in morphisms if is_morphism(src, tgt, m.mapping, "frame")]
    return morphisms


def _refine_classes(p):
    """Iterated invariant refinement; returns a class id per element."""
    raw = [(bin(p.down[i]).count("1"), bin(p.up[i]).count("1")) for i in range(p.n)]
    ranks = {s: r for r, s in enumerate(sorted(set(raw)))}
    cls = [ranks[s] for s in raw]
    while True:
        sig = []
        for i in range(p.n):
            below = tuple(sorted(cls[j] for j in bits(p.down[i])))
            above = tuple(sorted(cls[j] for j in bits(p.up[i])))
            sig.append((cls[i], below, above))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if new == cls:
            return cls
        cls = new


def canonical_key(p):
    """A label-independent key: minimal relation encoding over admissible relabelings.

    Elements are first partitioned by an iterated order invariant; only
    permutations mapping each class onto itself (classes taken in rank order)
    are tried.
    """
    cls = _refine_classes(p)
    groups = {}
    for i, c in enumerate(cls):
        groups.setdefault(c, []).append(i)
    slots = []  # target positions grouped by class rank
    for c in sorted(groups):
        slots.append(groups[c])
    best = None
    perm = [0] * p.n  # perm[old] = new position

    def encode():
        code = 0
        for i in range(p.n):
            for j in bits(p.up[i]):
                code |= 1 << (perm[i] * p.n + perm[j])
        return code

    members = [g[:] for g in slots]
    positions = []
    base = 0
    for g in slots:
        positions.append(list(range(base, base + len(g))))
        base += len(g)

    def assign(gi):
        nonlocal best
        if gi == len(members):
            code = encode()
            if best is None or code < best:
                best = code
            return
        group = members[gi]
        targets = positions[gi]

        def place(k, used):
            if k == len(group):
                assign(gi + 1)
                return
            for t in targets:
                if t in used:
                    continue
                perm[group[k]] = t
                place(k + 1, used | {t})

        place(0, frozenset())

    assign(0)
    return (p.n, best)


def find_isomorphism(p, q):
    """An order isomorphism p -> q as an index tuple, or None."""
    if p.n != q.n:
        return None
    pc = _refine_classes(p)
    qc = _refine_classes(q)
    if sorted(pc) != sorted(qc):
        return None
    order = sorted(range(p.n), key=lambda i: (pc[i], i))
    img = [None] * p.n
    used = [False] * q.n

    def ok(i, v):
        if pc[i] != qc[v]:
            return False
        for k in range(p.n):
            if img[k] is None:
                continue
            if p.leq(k, i) != q.leq(img[k], v):
                return False
            if p.leq(i, k) != q.leq(v, img[k]):
                return False
        return True

    def dfs(s):
        if s == p.n:
            return True
        i = order[s]
        for v in range(q.n):
            if used[v] or not ok(i, v):
                continue
            img[i] = v
            used[v] = True
            if dfs(s + 1):
                return True
            img[i] = None
            used[v] = False
        return False

    if dfs(0):
        return tuple(img)
    return None


def is_isomorphic(p, q):
    return find_isomorphism(p, q) is not None
