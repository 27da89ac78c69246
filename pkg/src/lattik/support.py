"""Support data on (semi)lattices and the adjunction bijections into the spectra."""

from __future__ import annotations

from .errors import InvalidDatum, NotContinuous
from .order import dual, enumerate_morphisms
from .topology import (
    cl_lattice,
    enumerate_continuous,
    hochster_dual,
    is_continuous,
    omega_lattice,
    preimage,
    sp_space,
    spc_space,
)

FLAVORS = ("semilattice-closed", "lattice-closed", "lattice-open")

_SPECTRUM_OF_FLAVOR = {
    "semilattice-closed": sp_space,
    "lattice-closed": spc_space,
    "lattice-open": hochster_dual,
}


def spectrum_for(l, flavor, guard=None):
    """The spectral construction matching a support-datum flavor."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    return _SPECTRUM_OF_FLAVOR[flavor](l, guard)


class SupportDatum:
    """An assignment element ↦ point set (bitmask), of one of the three flavors."""

    def __init__(self, lattice, space, sigma, flavor):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.lattice = lattice
        self.space = space
        self.sigma = tuple(sigma)
        self.flavor = flavor

    def __eq__(self, other):
        return (
            isinstance(other, SupportDatum)
            and self.sigma == other.sigma
            and self.flavor == other.flavor
            and self.space == other.space
        )

    def __hash__(self):
        return hash((self.sigma, self.flavor))

    def __repr__(self):
        parts = ", ".join(
            f"{a}->{set(self.space.subset_names(s)) or '{}'}"
            for a, s in zip(self.lattice.elements, self.sigma)
        )
        return f"SupportDatum[{self.flavor}]({parts})"


class ValidationReport:
    def __init__(self, ok, axiom=None, witness=None):
        self.ok = ok
        self.axiom = axiom  # name of the first violated axiom
        self.witness = witness

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "axiom": self.axiom, "witness": self.witness}


def validate_support_datum(d):
    """Check the axioms of d's flavor; report the first violation with a witness."""
    l, x, sigma = d.lattice, d.space, d.sigma
    sets = x.closed_sets() if d.flavor != "lattice-open" else x.opens
    kindname = "open" if d.flavor == "lattice-open" else "closed"
    for a, s in enumerate(sigma):
        if s not in sets:
            return ValidationReport(False, kindname, l.elements[a])
    if sigma[l.bottom] != 0:
        return ValidationReport(False, "empty", l.elements[l.bottom])
    for a in range(l.n):
        for b in range(l.n):
            if sigma[l.join[a][b]] != sigma[a] | sigma[b]:
                return ValidationReport(
                    False, "join", (l.elements[a], l.elements[b])
                )
    if d.flavor in ("lattice-closed", "lattice-open"):
        if sigma[l.top] != x.full:
            return ValidationReport(False, "full", l.elements[l.top])
        for a in range(l.n):
            for b in range(l.n):
                if sigma[l.meet[a][b]] != sigma[a] & sigma[b]:
                    return ValidationReport(
                        False, "meet", (l.elements[a], l.elements[b])
                    )
    return ValidationReport(True)


def enumerate_support_data(l, x, flavor, guard=None):
    """All valid support data of the flavor on (l, x).

    Per definition a datum is a lattice morphism into Cl(X) (or Ω(X) for the
    open flavor), so the enumeration runs over those morphisms.
    """
    if flavor == "semilattice-closed":
        setlat, kind = cl_lattice(x), "jsl"
    elif flavor == "lattice-closed":
        setlat, kind = cl_lattice(x), "blat"
    else:
        setlat, kind = omega_lattice(x), "blat"
    data = []
    for phi in enumerate_morphisms(l, setlat.lattice, kind, guard):
        sigma = tuple(setlat.masks[phi(a)] for a in range(l.n))
        data.append(SupportDatum(l, x, sigma, flavor))
    data.sort(key=lambda d: d.sigma)
    return data


def sigma_of_map(f, x, spectrum):
    """Σ(f): the support datum a ↦ f^{-1}(supp(a)) of a continuous map into the spectrum."""
    f = tuple(f)
    if not is_continuous(f, x, spectrum.space):
        raise NotContinuous("map into the spectrum is not continuous")
    l = spectrum.lattice
    sigma = tuple(preimage(f, spectrum.supp.assignment[a], x.n) for a in range(l.n))
    flavor = {
        "sp": "semilattice-closed",
        "spc": "lattice-closed",
        "spc_dual": "lattice-open",
    }[spectrum.kind]
    return SupportDatum(l, x, sigma, flavor)


def map_of_sigma(d, spectrum):
    """The inverse of Σ: x ↦ {a : x not in σ(a)}, as a point map into the spectrum.

    For the closed lattice flavor the value set is a prime ideal; for the open
    flavor it is likewise prime, which is how the datum lands in Spc(L)^v.
    """
    report = validate_support_datum(d)
    if not report.ok:
        raise InvalidDatum(f"axiom {report.axiom} fails at {report.witness}")
    l = d.lattice
    f = []
    for p in range(d.space.n):
        members = 0
        for a in range(l.n):
            if not d.sigma[a] >> p & 1:
                members |= 1 << a
        try:
            f.append(spectrum.point_of_ideal(members))
        except ValueError:
            raise InvalidDatum(
                f"value {l.subset_names(members)} is not a point of the spectrum"
            ) from None
    return tuple(f)


def open_closed_translate(d):
    """Complement each σ(a); swaps open data on L with closed data on L^op."""
    if d.flavor == "lattice-open":
        new_flavor = "lattice-closed"
    elif d.flavor == "lattice-closed":
        new_flavor = "lattice-open"
    else:
        raise InvalidDatum("translation applies to the bounded-lattice flavors only")
    tau = tuple(d.space.full & ~s for s in d.sigma)
    return SupportDatum(dual(d.lattice), d.space, tau, new_flavor)


class AdjunctionCertificate:
    """Counts plus the explicit matching of the Σ bijection on one (L, X, flavor)."""

    def __init__(self, lattice, space, flavor, maps, data, matching, bijection):
        self.lattice = lattice
        self.space = space
        self.flavor = flavor
        self.map_count = len(maps)
        self.datum_count = len(data)
        self.matching = matching  # list of (map tuple, sigma tuple)
        self.bijection = bijection

    def to_json(self):
        return {
            "lattice": list(self.lattice.elements),
            "space": {
                "points": list(self.space.points),
                "opens": [self.space.subset_names(u) for u in self.space.opens],
            },
            "flavor": self.flavor,
            "map_count": self.map_count,
            "datum_count": self.datum_count,
            "bijection": self.bijection,
            "witness_pairs": [
                {
                    "map": list(f),
                    "sigma": [self.space.subset_names(s) for s in sigma],
                }
                for f, sigma in self.matching
            ],
        }


def check_adjunction(l, x, flavor, guard=None):
    """Certify that Σ is a bijection between continuous maps and support data.

    Both sides are enumerated independently; the roundtrips
    map_of_sigma(sigma_of_map(f)) = f and sigma_of_map(map_of_sigma(d)) = d
    are checked pointwise.
    """
    spectrum = spectrum_for(l, flavor, guard)
    maps = enumerate_continuous(x, spectrum.space, guard)
    data = enumerate_support_data(l, x, flavor, guard)
    matching = []
    seen = set()
    ok = len(maps) == len(data)
    for f in maps:
        d = sigma_of_map(f, x, spectrum)
        if validate_support_datum(d).ok and d in data and d.sigma not in seen:
            seen.add(d.sigma)
        else:
            ok = False
        if map_of_sigma(d, spectrum) != f:
            ok = False
        matching.append((f, d.sigma))
    for d in data:
        f = map_of_sigma(d, spectrum)
        if sigma_of_map(f, x, spectrum) != d:
            ok = False
    if len(seen) != len(data):
        ok = False
    return AdjunctionCertificate(l, x, flavor, maps, data, matching, ok)


def datum_morphisms_to_final(d, spectrum):
    """All morphisms of support data (X,σ) -> (spectrum, supp).

    A morphism of support data is a continuous map f with σ(a) = f^{-1}(supp(a))
    for every a; finality of the spectrum means there is exactly one.
    """
    out = []
    for f in enumerate_continuous(d.space, spectrum.space):
        if all(
            preimage(f, spectrum.supp.assignment[a], d.space.n) == d.sigma[a]
            for a in range(d.lattice.n)
        ):
            out.append(f)
    return out


class NaturalityCertificate:
    def __init__(self, flavor, checked, ok, witness=None):
        self.flavor = flavor
        self.checked = checked
        self.ok = ok
        self.witness = witness

    def to_json(self):
        return {
            "flavor": self.flavor,
            "checked": self.checked,
            "ok": self.ok,
            "witness": self.witness,
        }


def check_naturality(l, g, x, y, flavor, guard=None):
    """Verify Σ(f ∘ g) = preimage-along-g ∘ Σ(f) for every continuous f: y -> spectrum."""
    g = tuple(g)
    if not is_continuous(g, x, y):
        raise NotContinuous("g is not continuous")
    spectrum = spectrum_for(l, flavor, guard)
    checked = 0
    for f in enumerate_continuous(y, spectrum.space, guard):
        fg = tuple(f[g[i]] for i in range(x.n))
        left = sigma_of_map(fg, x, spectrum)
        sig_f = sigma_of_map(f, y, spectrum)
        right = tuple(preimage(g, sig_f.sigma[a], x.n) for a in range(l.n))
        if left.sigma != right:
            return NaturalityCertificate(flavor, checked, False, {"f": list(f)})
        checked += 1
    return NaturalityCertificate(flavor, checked, True)
