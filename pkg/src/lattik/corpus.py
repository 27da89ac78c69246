"""Named standard lattices plus exhaustive corpora of lattices and topologies."""

from __future__ import annotations

from itertools import combinations

from .errors import BoundExceeded
from .order import (
    Poset,
    as_bounded_lattice,
    bits,
    build_poset,
    canonical_key,
    two,
)
from .topology import FiniteSpace

MAX_CORPUS_N = 8

# Number of bounded lattices on n elements up to isomorphism, n = 1..8.
# Re-derived by all_lattices() below; frozen here as the expectation table.
LATTICE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}


def chain(n):
    """The n-element chain c0 < c1 < ... (named 0, m1, ..., 1 for readability)."""
    if n == 1:
        return as_bounded_lattice(build_poset(["0"], []))
    names = ["0"] + [f"m{i}" for i in range(1, n - 1)] + ["1"]
    pairs = [(names[i], names[i + 1]) for i in range(n - 1)]
    return as_bounded_lattice(build_poset(names, pairs))


def b2():
    """The four-element Boolean lattice (diamond)."""
    return as_bounded_lattice(
        build_poset(
            ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
        )
    )


def m3():
    """The diamond with three incomparable atoms; modular, not distributive."""
    return as_bounded_lattice(
        build_poset(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
    )


def n5():
    """The pentagon 0 < a < 1, 0 < b < c < 1; not modular."""
    return as_bounded_lattice(
        build_poset(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
    )


def b3():
    """The eight-element Boolean lattice."""
    names = ["0", "x", "y", "z", "xy", "xz", "yz", "1"]
    pairs = [
        ("0", "x"), ("0", "y"), ("0", "z"),
        ("x", "xy"), ("x", "xz"), ("y", "xy"), ("y", "yz"),
        ("z", "xz"), ("z", "yz"),
        ("xy", "1"), ("xz", "1"), ("yz", "1"),
    ]
    return as_bounded_lattice(build_poset(names, pairs))


def standard_lattices():
    return {
        "two": two(),
        "C3": chain(3),
        "C4": chain(4),
        "B2": b2(),
        "M3": m3(),
        "N5": n5(),
        "B3": b3(),
    }


def _downsets(p):
    """All down-set masks of p (one per antichain)."""
    out = []

    def extend(start, chosen, downset):
        out.append(downset)
        for i in range(start, p.n):
            if chosen & (p.up[i] | p.down[i]):
                continue
            extend(i + 1, chosen | 1 << i, downset | p.down[i])

    extend(0, 0, 0)
    return out


def all_posets(max_n):
    """All posets up to isomorphism with 1..max_n elements, grouped by size.

    Built by extension: every poset arises from a smaller one by adding a new
    maximal element whose down-set is any down-set of the smaller poset.
    Canonical keys deduplicate at each level.
    """
    one = Poset(["e0"], [1])
    levels = [[one]]
    for n in range(2, max_n + 1):
        seen = {}
        names = [f"e{i}" for i in range(n)]
        for p in levels[-1]:
            for d in _downsets(p):
                up = [p.up[i] | ((1 << (n - 1)) if d >> i & 1 else 0) for i in range(p.n)]
                up.append(1 << (n - 1))
                q = Poset(names, up)
                key = canonical_key(q)
                if key not in seen:
                    seen[key] = q
        levels.append([seen[k] for k in sorted(seen)])
    return levels


def _is_lattice_poset(p):
    from .order import _glb, _lub

    if not any(p.up[i] == p.full for i in range(p.n)):
        return False
    if not any(p.down[i] == p.full for i in range(p.n)):
        return False
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if _lub(p, i, j) is None or _glb(p, i, j) is None:
                return False
    return True


def all_lattices(max_n):
    """All bounded lattices up to isomorphism with 1..max_n elements.

    Returns a list of lists, index n-1 holding the lattices of size n in a
    deterministic canonical order.
    """
    if max_n > MAX_CORPUS_N:
        raise BoundExceeded(f"corpus generation is bounded at n <= {MAX_CORPUS_N}")
    out = []
    for level in all_posets(max_n):
        out.append(
            [as_bounded_lattice(p) for p in level if _is_lattice_poset(p)]
        )
    return out


def lattice_corpus(max_n):
    """Flat deterministic list of all corpus lattices with at most max_n elements."""
    flat = []
    for level in all_lattices(max_n):
        flat.extend(level)
    return flat


def all_topologies(n_points):
    """All (labeled) topologies on n points, as FiniteSpaces.

    Enumerated by choosing which proper nonempty subsets are open and
    filtering for closure under union and intersection.  Bounded at 4 points.
    """
    if n_points > 4:
        raise BoundExceeded("topology enumeration is bounded at 4 points")
    points = [f"p{i}" for i in range(n_points)]
    if n_points == 0:
        return [FiniteSpace([], [0])]
    full = (1 << n_points) - 1
    proper = [m for m in range(1, full)]
    spaces = []
    for r in range(len(proper) + 1):
        for extra in combinations(proper, r):
            fam = set(extra) | {0, full}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                spaces.append(FiniteSpace(points, fam))
    spaces.sort(key=lambda s: (len(s.opens), s.opens))
    return spaces


def space_corpus(max_points):
    """All topologies on 0..max_points points, deterministically ordered."""
    out = []
    for n in range(max_points + 1):
        out.extend(all_topologies(n))
    return out
