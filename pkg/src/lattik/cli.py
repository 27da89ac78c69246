"""Command-line front end: JSON in, JSON/DOT out, deterministic output.

Exit codes: 0 success, 1 mathematical-check failure (with witness), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import corpus as corpusmod
from . import frames as framesmod
from . import support as supportmod
from . import tensor as tensormod
from . import topology as topomod
from .errors import InputError, LattikError, NotAFrame, TensorAxiomError
from .ideals import all_ideals, prime_ideals
from .jsonio import (
    datum_from_json,
    lattice_from_json,
    lattice_to_json,
    poset_from_json,
    poset_to_dot,
    space_from_json,
    space_to_json,
    tensor_from_json,
)
from .order import as_bounded_lattice, is_distributive


class CheckFailure(LattikError):
    """A mathematical check failed; payload carries the witness."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _load_lattice(path):
    return lattice_from_json(_load_json(path))


def _spectrum_json(spec):
    return {
        "space": space_to_json(spec.space),
        "points": list(spec.space.points),
        "supp": {
            e: spec.space.subset_names(m)
            for e, m in zip(spec.lattice.elements, spec.supp.assignment)
        },
    }


def cmd_validate(args):
    name, lattice = _load_lattice(args.file)
    return {
        "name": name,
        "size": lattice.n,
        "elements": list(lattice.elements),
        "bottom": lattice.elements[lattice.bottom],
        "top": lattice.elements[lattice.top],
        "distributive": is_distributive(lattice),
    }


def cmd_ideals(args):
    name, lattice = _load_lattice(args.file)
    idl = all_ideals(lattice, args.size_guard)
    return {
        "name": name,
        "count": len(idl),
        "ideals": [i.names() for i in idl.ideals],
    }


def cmd_primes(args):
    name, lattice = _load_lattice(args.file)
    return {
        "name": name,
        "primes": [p.names() for p in prime_ideals(lattice, args.size_guard)],
    }


def cmd_sp(args):
    name, lattice = _load_lattice(args.file)
    out = _spectrum_json(topomod.sp_space(lattice, args.size_guard))
    out["name"] = name
    return out


def cmd_spectrum(args):
    name, lattice = _load_lattice(args.file)
    out = _spectrum_json(topomod.spc_space(lattice, args.size_guard))
    out["name"] = name
    return out


def cmd_hochster(args):
    name, lattice = _load_lattice(args.file)
    out = _spectrum_json(topomod.hochster_dual(lattice, args.size_guard))
    out["name"] = name
    return out


def cmd_support_check(args):
    d = datum_from_json(_load_json(args.file))
    report = supportmod.validate_support_datum(d)
    if not report.ok:
        raise CheckFailure(report.to_json())
    return report.to_json()


def _adjunction_pair(task):
    lattice, space, flavor, guard = task
    return supportmod.check_adjunction(lattice, space, flavor, guard)


def cmd_adjunction(args):
    flavors = [args.flavor] if args.flavor else list(supportmod.FLAVORS)
    if args.corpus_max_n:
        lattices = corpusmod.lattice_corpus(args.corpus_max_n)
        spaces = corpusmod.space_corpus(args.space_points)
    else:
        if not (args.lattice and args.space):
            raise InputError("need LATTICE and SPACE files, or --corpus-max-n")
        lattices = [_load_lattice(args.lattice)[1]]
        spaces = [space_from_json(_load_json(args.space))]
    tasks = [
        (l, x, flavor, args.size_guard)
        for flavor in flavors
        for l in lattices
        for x in spaces
    ]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            certs = list(pool.map(_adjunction_pair, tasks, chunksize=8))
    else:
        certs = [_adjunction_pair(t) for t in tasks]
    out = {
        "pairs": len(certs),
        "all_bijective": all(c.bijection for c in certs),
        "certificates": [c.to_json() for c in certs],
    }
    if not out["all_bijective"]:
        raise CheckFailure(out)
    return out


def cmd_naturality(args):
    obj = _load_json(args.file)
    for field in ("lattice", "space_x", "space_y", "map", "flavor"):
        if field not in obj:
            raise InputError(f"missing field {field!r}")
    _, lattice = lattice_from_json(obj["lattice"])
    x = space_from_json(obj["space_x"])
    y = space_from_json(obj["space_y"])
    g = tuple(y.point_index(obj["map"][p]) for p in x.points)
    cert = supportmod.check_naturality(
        lattice, g, x, y, obj["flavor"], args.size_guard
    )
    if not cert.ok:
        raise CheckFailure(cert.to_json())
    return cert.to_json()


def _frame_of(args):
    name, lattice = _load_lattice(args.file)
    try:
        return name, framesmod.as_frame(lattice, args.size_guard)
    except NotAFrame as exc:
        raise CheckFailure({"not_a_frame": True, "witness": exc.witness}) from exc


def cmd_frame_points(args):
    name, frame = _frame_of(args)
    pt = framesmod.points(frame, args.size_guard)
    return {
        "name": name,
        "point_count": len(pt),
        "space": space_to_json(pt.space),
    }


def cmd_spatial(args):
    name, frame = _frame_of(args)
    cert = framesmod.is_spatial(frame, args.size_guard)
    if not cert.spatial:
        raise CheckFailure(cert.to_json())
    out = cert.to_json()
    out["name"] = name
    return out


def cmd_extend(args):
    obj = _load_json(args.file)
    for field in ("lattice", "frame", "map"):
        if field not in obj:
            raise InputError(f"missing field {field!r}")
    _, lattice = lattice_from_json(obj["lattice"])
    _, frame_lattice = lattice_from_json(obj["frame"])
    frame = framesmod.as_frame(frame_lattice, args.size_guard)
    from .order import LatticeMorphism

    mapping = tuple(
        frame_lattice.index(obj["map"][e]) for e in lattice.elements
    )
    phi = LatticeMorphism(lattice, frame_lattice, mapping, "blat")
    psi = framesmod.extend_morphism(lattice, frame, phi, args.size_guard)
    return {
        "extension": {
            src: frame_lattice.elements[psi(k)]
            for k, src in enumerate(psi.source.elements)
        }
    }


def cmd_pt_vs_hochster(args):
    name, lattice = _load_lattice(args.file)
    cert = framesmod.pt_ideal_vs_hochster(lattice, args.size_guard)
    if not cert.ok:
        raise CheckFailure(cert.to_json())
    out = cert.to_json()
    out["name"] = name
    return out


def cmd_id_vs_omega(args):
    name, lattice = _load_lattice(args.file)
    cert = framesmod.id_vs_omega_dual(lattice, args.size_guard)
    if not cert.ok:
        raise CheckFailure(cert.to_json())
    out = cert.to_json()
    out["name"] = name
    return out


def _load_tensor(args):
    try:
        return tensor_from_json(_load_json(args.file))
    except TensorAxiomError as exc:
        raise CheckFailure(
            {"axiom": type(exc).__name__, "witness": exc.witness}
        ) from exc


def cmd_tensor_validate(args):
    name, t = _load_tensor(args)
    return {
        "name": name,
        "size": t.n,
        "unit": t.base.elements[t.unit],
        "associative": tensormod.is_associative(t),
    }


def cmd_radicals(args):
    name, t = _load_tensor(args)
    masks, lattice = tensormod.all_radical_tensor_ideals(t, args.size_guard)
    return {
        "name": name,
        "count": len(masks),
        "radical_tensor_ideals": [t.base.subset_names(m) for m in masks],
    }


def cmd_quotient(args):
    name, t = _load_tensor(args)
    lattice, projection, class_masks = tensormod.quotient_lattice(t, args.size_guard)
    return {
        "name": name,
        "quotient": lattice_to_json(lattice),
        "projection": {
            e: lattice.elements[projection[a]]
            for a, e in enumerate(t.base.elements)
        },
    }


def _fuzz_bases():
    return [
        lat
        for lat in corpusmod.lattice_corpus(5)
    ]


def cmd_tensor_lemma(args):
    if args.fuzz:
        certs = []
        for t in tensormod.fuzz_tensor_lattices(_fuzz_bases(), args.seed, args.fuzz):
            cert = tensormod.check_tensor_lemma(t)
            if not cert.ok:
                raise CheckFailure(cert.to_json())
            certs.append(cert)
        return {"fuzzed": len(certs), "all_ok": True}
    name, t = _load_tensor(args)
    cert = tensormod.check_tensor_lemma(t)
    if not cert.ok:
        raise CheckFailure(cert.to_json())
    out = cert.to_json()
    out["name"] = name
    return out


def cmd_classify(args):
    if args.fuzz:
        count = 0
        for t in tensormod.fuzz_tensor_lattices(_fuzz_bases(), args.seed, args.fuzz):
            cert = tensormod.check_classification(t, args.size_guard)
            if not cert.ok:
                raise CheckFailure(cert.to_json())
            count += 1
        return {"fuzzed": count, "all_ok": True}
    name, t = _load_tensor(args)
    cert = tensormod.check_classification(t, args.size_guard)
    if not cert.ok:
        raise CheckFailure(cert.to_json())
    out = cert.to_json()
    out["name"] = name
    return out


def cmd_corpus(args):
    levels = corpusmod.all_lattices(args.max_n)
    counts = {n + 1: len(level) for n, level in enumerate(levels)}
    expected = {
        n: corpusmod.LATTICE_COUNTS[n] for n in counts
    }
    out = {
        "max_n": args.max_n,
        "counts": counts,
        "expected": expected,
        "ok": counts == expected,
    }
    if args.dump:
        out["lattices"] = [
            lattice_to_json(lat, name=f"L{n+1}_{i}")
            for n, level in enumerate(levels)
            for i, lat in enumerate(level)
        ]
    if not out["ok"]:
        raise CheckFailure(out)
    return out


def cmd_dot(args):
    obj = _load_json(args.file)
    if "points" in obj:
        space = space_from_json(obj)
        poset = topomod.specialization_order(space)
        return poset_to_dot(poset, name="specialization")
    name, poset = poset_from_json(obj)
    return poset_to_dot(poset, name=name or "poset")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lattik",
        description="Finite lattice spectra, support data, frames, and tensor ideals",
    )
    parser.add_argument("--format", choices=["json", "dot"], default=None)
    parser.add_argument("--jobs", type=int, default=1, metavar="N")
    parser.add_argument("--size-guard", type=int, default=None, metavar="N")
    parser.add_argument("--seed", type=int, default=0, metavar="N")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, fn, **kwargs):
        p = sub.add_parser(verb, **kwargs)
        p.set_defaults(fn=fn)
        return p

    for verb, fn in [
        ("validate", cmd_validate),
        ("ideals", cmd_ideals),
        ("primes", cmd_primes),
        ("sp", cmd_sp),
        ("spectrum", cmd_spectrum),
        ("hochster", cmd_hochster),
        ("support-check", cmd_support_check),
        ("naturality", cmd_naturality),
        ("frame-points", cmd_frame_points),
        ("spatial", cmd_spatial),
        ("extend", cmd_extend),
        ("pt-vs-hochster", cmd_pt_vs_hochster),
        ("id-vs-omega", cmd_id_vs_omega),
        ("tensor-validate", cmd_tensor_validate),
        ("radicals", cmd_radicals),
        ("quotient", cmd_quotient),
        ("dot", cmd_dot),
    ]:
        p = add(verb, fn)
        p.add_argument("file")

    p = add("adjunction", cmd_adjunction)
    p.add_argument("lattice", nargs="?")
    p.add_argument("space", nargs="?")
    p.add_argument("--flavor", choices=list(supportmod.FLAVORS), default=None)
    p.add_argument("--corpus-max-n", type=int, default=0, metavar="N")
    p.add_argument("--space-points", type=int, default=3, metavar="K")

    for verb, fn in [("tensor-lemma", cmd_tensor_lemma), ("classify", cmd_classify)]:
        p = add(verb, fn)
        p.add_argument("file", nargs="?")
        p.add_argument("--fuzz", type=int, default=0, metavar="COUNT")

    p = add("corpus", cmd_corpus)
    p.add_argument("--max-n", type=int, default=6, metavar="N")
    p.add_argument("--dump", action="store_true")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except CheckFailure as exc:
        print(json.dumps({"ok": False, "witness": exc.payload}, indent=2))
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except LattikError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
