"""JSON and DOT serialization for lattices, spaces, and support data."""

from __future__ import annotations

from .errors import InputError, UnknownName
from .order import as_bounded_lattice, as_join_semilattice, bits, build_poset
from .support import FLAVORS, SupportDatum
from .tensor import TensorLattice
from .topology import FiniteSpace


def poset_from_json(obj):
    """Parse the lattice JSON carrier: name, elements, leq pairs."""
    if not isinstance(obj, dict):
        raise InputError("lattice JSON must be an object")
    try:
        elements = obj["elements"]
        leq = obj.get("leq", [])
    except (TypeError, KeyError) as exc:
        raise InputError(f"missing lattice field: {exc}") from exc
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputError("elements must be a list of strings")
    pairs = []
    for pair in leq:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise InputError("leq must be a list of [a, b] pairs")
        pairs.append((pair[0], pair[1]))
    return obj.get("name", ""), build_poset(elements, pairs)


def lattice_from_json(obj):
    name, poset = poset_from_json(obj)
    return name, as_bounded_lattice(poset)


def tensor_from_json(obj):
    """Parse a lattice JSON with its optional tensor section into a TensorLattice."""
    name, poset = poset_from_json(obj)
    jsl = as_join_semilattice(poset)
    section = obj.get("tensor")
    if section is None:
        raise InputError("lattice JSON has no tensor section")
    try:
        unit = jsl.index(section["unit"])
        table = section["table"]
    except KeyError as exc:
        raise InputError(f"missing tensor field: {exc}") from exc
    if len(table) != jsl.n or any(len(row) != jsl.n for row in table):
        raise InputError("tensor table must be square over the carrier")
    product = [[jsl.index(cell) for cell in row] for row in table]
    return name, TensorLattice(jsl, product, unit)


def lattice_to_json(lattice, name="", tensor=None):
    pairs = []
    for i in range(lattice.n):
        for j in bits(lattice.covers(i)):
            pairs.append([lattice.elements[i], lattice.elements[j]])
    obj = {
        "name": name,
        "elements": list(lattice.elements),
        "leq": pairs,
    }
    if tensor is not None:
        obj["tensor"] = {
            "unit": lattice.elements[tensor.unit],
            "table": [
                [lattice.elements[tensor.product[i][j]] for j in range(lattice.n)]
                for i in range(lattice.n)
            ],
        }
    return obj


def space_from_json(obj):
    if not isinstance(obj, dict):
        raise InputError("space JSON must be an object")
    try:
        points = obj["points"]
        opens = obj["opens"]
    except (TypeError, KeyError) as exc:
        raise InputError(f"missing space field: {exc}") from exc
    idx = {p: i for i, p in enumerate(points)}
    masks = []
    for u in opens:
        m = 0
        for p in u:
            if p not in idx:
                raise UnknownName(f"unknown point {p!r}")
            m |= 1 << idx[p]
        masks.append(m)
    try:
        return FiniteSpace(points, masks)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def space_to_json(space):
    return {
        "points": list(space.points),
        "opens": [space.subset_names(u) for u in space.opens],
    }


def datum_from_json(obj):
    """Parse {"lattice":..., "space":..., "flavor":..., "sigma": {elem: [points]}}."""
    if not isinstance(obj, dict):
        raise InputError("datum JSON must be an object")
    for field in ("lattice", "space", "flavor", "sigma"):
        if field not in obj:
            raise InputError(f"missing datum field: {field!r}")
    _, lattice = lattice_from_json(obj["lattice"])
    space = space_from_json(obj["space"])
    flavor = obj["flavor"]
    if flavor not in FLAVORS:
        raise InputError(f"unknown flavor {flavor!r}")
    sigma = []
    idx = {p: i for i, p in enumerate(space.points)}
    for e in lattice.elements:
        if e not in obj["sigma"]:
            raise InputError(f"sigma missing element {e!r}")
        m = 0
        for p in obj["sigma"][e]:
            if p not in idx:
                raise UnknownName(f"unknown point {p!r}")
            m |= 1 << idx[p]
        sigma.append(m)
    return SupportDatum(lattice, space, sigma, flavor)


def datum_to_json(d):
    return {
        "lattice": lattice_to_json(d.lattice),
        "space": space_to_json(d.space),
        "flavor": d.flavor,
        "sigma": {
            e: d.space.subset_names(s)
            for e, s in zip(d.lattice.elements, d.sigma)
        },
    }


def _dot_quote(s):
    return '"' + s.replace('"', '\\"') + '"'


def poset_to_dot(p, name="poset"):
    """Hasse diagram (cover edges only) in deterministic node order."""
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=BT;"]
    for e in p.elements:
        lines.append(f"  {_dot_quote(e)};")
    for i in range(p.n):
        for j in bits(p.covers(i)):
            lines.append(f"  {_dot_quote(p.elements[i])} -> {_dot_quote(p.elements[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
