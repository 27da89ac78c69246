"""Walkthrough: support data and the Sigma adjunction.

A support datum assigns a closed set to each lattice element so that joins
become unions (and meets become intersections in the bounded flavors).  The
spectrum is the final such datum: continuous maps X -> Sp(L) correspond
bijectively to support data on X, by pulling supp back along the map.
"""

from lattik.corpus import chain
from lattik.order import two
from lattik.support import (
    check_adjunction,
    datum_morphisms_to_final,
    enumerate_support_data,
    map_of_sigma,
    sigma_of_map,
    spectrum_for,
)
from lattik.topology import enumerate_continuous, space_from_closed_basis


def main():
    l = two()
    x = space_from_closed_basis(["p", "q"], [0b01])  # Sierpinski: {p} closed
    print("lattice:", list(l.elements), " space points:", list(x.points))

    flavor = "semilattice-closed"
    spec = spectrum_for(l, flavor)
    print("\nspectrum points:", list(spec.space.points))

    data = enumerate_support_data(l, x, flavor)
    maps = enumerate_continuous(x, spec.space)
    print(f"\n{len(data)} support data and {len(maps)} continuous maps:")
    for f in maps:
        d = sigma_of_map(f, x, spec)
        back = map_of_sigma(d, spec)
        print(f"  map {f} -> sigma {d!r} -> map {back}  (roundtrip ok: {back == f})")

    cert = check_adjunction(l, x, flavor)
    print("\nfull certificate: bijection =", cert.bijection)

    # finality: each datum admits exactly one structure map into the spectrum
    for d in data:
        arrows = datum_morphisms_to_final(d, spec)
        print(f"  datum {d.sigma} has {len(arrows)} morphism(s) to the spectrum")

    # the same story for the bounded flavors on a 3-chain
    l3 = chain(3)
    for fl in ("lattice-closed", "lattice-open"):
        cert = check_adjunction(l3, x, fl)
        print(f"\nC3, {fl}: {cert.datum_count} data = {cert.map_count} maps,",
              "bijection =", cert.bijection)


if __name__ == "__main__":
    main()
