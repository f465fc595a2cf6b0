"""Command-line interface: deterministic reports over workspace files.

Exit codes: 0 success, 1 domain failure (validation, non-cocycle,
incoherent model, missing witness), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import io
from .catalog import catalog_pairs
from .catgroup import check_sym_coherence, deviation, induced_pi1_map
from .catring import (check_ring_coherence, check_2hom, induced_maps,
                      obstruction, pi0_ring, pi1_bimodule)
from .cochains import (coboundary, cochain2_from_vector, cocycle_defect,
                       cohomologous, compute_h3, gamma_positions,
                       random_cocycle)
from .correspondence import (canonical_choices, equiv_from_coboundary,
                             extract, random_choices, realize)


def _fail(msg, code):
    print(msg, file=sys.stderr)
    return code


def _load(path, kind=None):
    data = io.load_raw(path)
    if kind is not None and data.get("kind") != kind:
        raise io.FileFormatError(
            f"{path}: expected a {kind} file, found {data.get('kind')!r}")
    return data


def _load_pair(ring_path, bim_path):
    ring = io.ring_from_json(_load(ring_path, "ring"))
    bim = io.bimodule_from_json(_load(bim_path, "bimodule"), ring)
    return ring, bim


def _fmt_invariants(inv):
    return "trivial" if not inv else " x ".join(f"Z/{d}" for d in inv)


# ---------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------

def cmd_validate(args):
    data = _load(args.file)
    kind = data["kind"]
    if kind == "ring":
        io.ring_from_json(data)
    elif kind == "model":
        io.model_from_json(data)
    elif kind == "bimodule":
        _validate_bimodule_shape(data)
    elif kind in ("cochain3", "cochain2", "choices"):
        _validate_entries_shape(data, kind)
    print(f"valid {kind}")
    return 0


def _validate_bimodule_shape(data):
    orders = data.get("cyclic_orders")
    io._require(isinstance(orders, list)
                and all(isinstance(d, int) and d >= 1 for d in orders),
                "cyclic_orders must be a list of positive integers")
    k = len(orders)
    for side in ("left", "right"):
        maps = data.get(side)
        io._require(isinstance(maps, dict), f"{side} must be an object")
        for key, m in maps.items():
            io._require(isinstance(m, list) and len(m) == k
                        and all(isinstance(row, list) and len(row) == k
                                and all(isinstance(v, int) for v in row)
                                for row in m),
                        f"{side}[{key}] must be a {k}x{k} integer matrix")
    io._require(set(data.get("left", {})) == set(data.get("right", {})),
                "left and right must cover the same ring elements")


def _validate_entries_shape(data, kind):
    if kind == "choices":
        for name in ("sigma_dot", "sigma_plus"):
            for i, ent in enumerate(data.get(name, [])):
                io._require(isinstance(ent, dict)
                            and set(ent) == {"args", "value"}
                            and isinstance(ent["args"], list)
                            and len(ent["args"]) == 2,
                            f"{name} entry {i} malformed")
        return
    comps = {"cochain3": {"dot": 3, "dotplus": 3, "plusdot": 3, "plus": 4},
             "cochain2": {"gdot": 2, "gplus": 2}}[kind]
    entries = data.get("entries")
    io._require(isinstance(entries, list), "entries must be a list")
    for i, ent in enumerate(entries):
        io._require(isinstance(ent, dict)
                    and set(ent) == {"comp", "args", "value"},
                    f"entry {i} must have comp, args and value")
        io._require(ent["comp"] in comps,
                    f"entry {i}: unknown component {ent['comp']!r}")
        io._require(isinstance(ent["args"], list)
                    and len(ent["args"]) == comps[ent["comp"]]
                    and all(isinstance(s, str) for s in ent["args"]),
                    f"entry {i}: bad args")
        io._require(isinstance(ent["value"], list)
                    and all(isinstance(v, int) for v in ent["value"]),
                    f"entry {i}: bad value")


def cmd_h3(args):
    ring, bim = _load_pair(args.ring, args.bimodule)
    methods = (["snf", "enumeration"] if args.method == "both"
               else ["enumeration" if args.method == "enumerate"
                     else args.method])
    results = [compute_h3(ring, bim, method=m) for m in methods]
    res = results[0]
    print(f"Z3 invariant factors: {_fmt_invariants(res.z3_invariants)}")
    print(f"B3 invariant factors: {_fmt_invariants(res.b3_invariants)}")
    print(f"H3 invariant factors: {_fmt_invariants(res.h3_invariants)}")
    if len(results) == 2:
        other = results[1]
        same = (res.z3_invariants == other.z3_invariants
                and res.b3_invariants == other.b3_invariants
                and res.h3_invariants == other.h3_invariants)
        if not same:
            return _fail("methods disagree", 1)
        print("methods agree")
    return 0


def cmd_is_cocycle(args):
    ring, bim = _load_pair(args.ring, args.bimodule)
    c = io.cochain3_from_json(_load(args.cochain, "cochain3"),
                              ring, bim.group)
    defects = cocycle_defect(c, ring, bim)
    if not defects:
        print("cocycle: yes")
        return 0
    print("cocycle: no")
    lab = ring.labels
    for d in defects[:5]:
        args_s = ", ".join(lab[x] for x in d.args)
        print(f"  {d.equation} fails at ({args_s}): defect {d.value}")
    if len(defects) > 5:
        print(f"  ... and {len(defects) - 5} more")
    return 1


def cmd_cobound(args):
    ring, bim = _load_pair(args.ring, args.bimodule)
    g = io.cochain2_from_json(_load(args.cochain, "cochain2"),
                              ring, bim.group)
    img = coboundary(g, ring, bim)
    sys.stdout.write(io.dumps(io.cochain3_to_json(img, ring)))
    return 0


def cmd_cohomologous(args):
    ring, bim = _load_pair(args.ring, args.bimodule)
    c1 = io.cochain3_from_json(_load(args.cochain_a, "cochain3"),
                               ring, bim.group)
    c2 = io.cochain3_from_json(_load(args.cochain_b, "cochain3"),
                               ring, bim.group)
    g = cohomologous(c1, c2, ring, bim)
    if g is None:
        return _fail("not cohomologous", 1)
    print("cohomologous: yes")
    sys.stdout.write(io.dumps(io.cochain2_to_json(g, ring)))
    return 0


def cmd_realize(args):
    ring, bim = _load_pair(args.ring, args.bimodule)
    c = io.cochain3_from_json(_load(args.cochain, "cochain3"),
                              ring, bim.group)
    M = realize(c, ring, bim)
    io.save(args.output, io.model_to_json(M, ring))
    cocycle = not cocycle_defect(c, ring, bim)
    print(f"model written to {args.output}")
    print(f"input is a 3-cocycle: {'yes' if cocycle else 'no'}")
    return 0


def cmd_check_coherence(args):
    M, ring, bim = io.model_from_json(_load(args.model, "model"))
    lab = ring.labels
    bad = []
    for cid, where, defect in check_sym_coherence(M.additive,
                                                  structure=False):
        bad.append((cid, where, defect))
    for cid, where, defect in check_ring_coherence(M):
        bad.append((cid, where, defect))
    if not bad:
        print("all diagrams pass")
        return 0
    for cid, where, defect in bad:
        args_s = ", ".join(lab[x] for x in where)
        print(f"{cid} fails at ({args_s}): defect {defect}")
    return 1


def cmd_extract(args):
    M, ring, bim = io.model_from_json(_load(args.model, "model"))
    if args.choices:
        ch = io.choices_from_json(_load(args.choices, "choices"),
                                  ring, bim.group)
    else:
        ch = canonical_choices(M)
    c = extract(M, ch)
    io.save(args.output, io.cochain3_to_json(c, ring))
    print(f"cocycle written to {args.output}")
    return 0


def cmd_roundtrip(args):
    ring, bim = _load_pair(args.ring, args.bimodule)
    c = io.cochain3_from_json(_load(args.cochain, "cochain3"),
                              ring, bim.group)
    defects = cocycle_defect(c, ring, bim)
    if defects:
        return _fail("input is not a cocycle; roundtrip undefined", 1)
    M = realize(c, ring, bim)
    back = extract(M, canonical_choices(M))
    exact = back == c
    print(f"roundtrip exact: {'yes' if exact else 'no'}")
    return 0 if exact else 1


def cmd_obstruction(args):
    M, ring, bim = io.model_from_json(_load(args.model, "model"))
    val = obstruction(M)
    print(f"obstruction: {val}")
    two = M.pi1.scale(2, val) == M.pi1.zero()
    print(f"2-torsion: {'yes' if two else 'no'}")
    return 0


def cmd_pi(args):
    M, ring, bim = io.model_from_json(_load(args.model, "model"))
    p0 = pi0_ring(M, labels=ring.labels)
    p1 = pi1_bimodule(M, p0)
    print(f"pi0: ring with {p0.size} elements "
          f"({', '.join(p0.labels)})")
    print(f"pi1: {p1.group}")
    return 0


# ---------------------------------------------------------------------
# property suites
# ---------------------------------------------------------------------

def _random_gamma(ring, bim, rng):
    """A random normalized 2-cochain."""
    vec = []
    for comp, key in gamma_positions(ring):
        for j in range(bim.group.rank):
            vec.append(0 if 0 in key
                       else rng.randrange(bim.group.cyclic_orders[j]))
    return cochain2_from_vector(tuple(vec), ring, bim.group)


def _suite_square_zero(rng, cases):
    pairs = catalog_pairs()
    for i in range(cases):
        name, ring, bname, bim = pairs[i % len(pairs)]
        g = _random_gamma(ring, bim, rng)
        if cocycle_defect(coboundary(g, ring, bim), ring, bim):
            return f"d(d(gamma)) != 0 over {name}/{bname}"
    return None


def _suite_deviation(rng, cases):
    pairs = catalog_pairs()
    for i in range(cases):
        name, ring, bname, bim = pairs[i % len(pairs)]
        phi = random_cocycle(ring, bim, rng)
        M = realize(phi, ring, bim)
        G = M.additive
        P = G.pi1
        els = list(P.elements())
        pick = lambda: els[rng.randrange(len(els))]
        x, y = rng.randrange(ring.size), rng.randrange(ring.size)
        al, alp, be, bep = pick(), pick(), pick(), pick()
        s0 = G.madd((al, x), (be, y))
        s1 = G.madd((alp, x), (bep, y))
        if deviation(G, s0[1], s0[0], s1[0]) != P.add(
                deviation(G, x, al, alp), deviation(G, y, be, bep)):
            return f"deviations not additive over {name}/{bname}"
        r = rng.randrange(ring.size)
        lm0 = M.mmul(M.id_m(r), (al, x))
        lm1 = M.mmul(M.id_m(r), (alp, x))
        if deviation(G, lm0[1], lm0[0], lm1[0]) != bim.act_left(
                r, deviation(G, x, al, alp)):
            return f"deviations not left-linear over {name}/{bname}"
        rm0 = M.mmul((al, x), M.id_m(r))
        rm1 = M.mmul((alp, x), M.id_m(r))
        if deviation(G, rm0[1], rm0[0], rm1[0]) != bim.act_right(
                deviation(G, x, al, alp), r):
            return f"deviations not right-linear over {name}/{bname}"
    return None


def _suite_choices(rng, cases):
    pairs = catalog_pairs()
    for i in range(cases):
        name, ring, bname, bim = pairs[i % len(pairs)]
        phi = random_cocycle(ring, bim, rng)
        M = realize(phi, ring, bim)
        e1 = extract(M, random_choices(M, rng))
        e2 = extract(M, random_choices(M, rng))
        g = cohomologous(e1, e2, ring, bim)
        if g is None:
            return f"extractions not cohomologous over {name}/{bname}"
    return None


def _suite_two_hom(rng, cases):
    pairs = catalog_pairs()
    for i in range(cases):
        name, ring, bname, bim = pairs[i % len(pairs)]
        phi = random_cocycle(ring, bim, rng)
        g = _random_gamma(ring, bim, rng)
        phi2 = phi + coboundary(g, ring, bim)
        F = equiv_from_coboundary(phi, phi2, g, ring, bim)
        if check_2hom(F, symmetry=True):
            return f"2-homomorphism check fails over {name}/{bname}"
        obj_map, pi1_map = induced_maps(F)
        if tuple(obj_map) != tuple(range(ring.size)):
            return f"induced pi0 map not identity over {name}/{bname}"
        if any(pi1_map.apply(v) != v for v in bim.group.elements()):
            return f"induced pi1 map not identity over {name}/{bname}"
    return None


SUITES = {
    "square-zero": _suite_square_zero,
    "deviation": _suite_deviation,
    "choices": _suite_choices,
    "two-hom": _suite_two_hom,
}


def cmd_props(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        rng = random.Random(args.seed)
        witness = SUITES[name](rng, args.cases)
        if witness is not None:
            return _fail(f"suite {name}: FAIL ({witness})", 1)
        print(f"suite {name}: {args.cases} cases, all passed")
    return 0


# ---------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="crext",
        description="Exact workbench for third Mac Lane cohomology and "
                    "categorical ring extensions of finite rings")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="validate a workspace file")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("h3", help="compute Z3, B3 and H3")
    sp.add_argument("ring")
    sp.add_argument("bimodule")
    sp.add_argument("--method", choices=("snf", "enumerate", "both"),
                    default="snf")
    sp.set_defaults(fn=cmd_h3)

    sp = sub.add_parser("is-cocycle", help="test the eight equations")
    sp.add_argument("ring")
    sp.add_argument("bimodule")
    sp.add_argument("cochain")
    sp.set_defaults(fn=cmd_is_cocycle)

    sp = sub.add_parser("cobound", help="coboundary of a 2-cochain")
    sp.add_argument("ring")
    sp.add_argument("bimodule")
    sp.add_argument("cochain")
    sp.set_defaults(fn=cmd_cobound)

    sp = sub.add_parser("cohomologous",
                        help="find gamma with d(gamma) = b - a")
    sp.add_argument("ring")
    sp.add_argument("bimodule")
    sp.add_argument("cochain_a")
    sp.add_argument("cochain_b")
    sp.set_defaults(fn=cmd_cohomologous)

    sp = sub.add_parser("realize", help="build the skeletal model of a "
                                        "normalized 3-cochain")
    sp.add_argument("ring")
    sp.add_argument("bimodule")
    sp.add_argument("cochain")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(fn=cmd_realize)

    sp = sub.add_parser("check-coherence",
                        help="run all coherence diagrams of a model")
    sp.add_argument("model")
    sp.set_defaults(fn=cmd_check_coherence)

    sp = sub.add_parser("extract",
                        help="characteristic cocycle of a model")
    sp.add_argument("model")
    sp.add_argument("--choices")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(fn=cmd_extract)

    sp = sub.add_parser("roundtrip",
                        help="realize then extract and compare")
    sp.add_argument("ring")
    sp.add_argument("bimodule")
    sp.add_argument("cochain")
    sp.set_defaults(fn=cmd_roundtrip)

    sp = sub.add_parser("obstruction",
                        help="the obstruction automorphism of a model")
    sp.add_argument("model")
    sp.set_defaults(fn=cmd_obstruction)

    sp = sub.add_parser("pi", help="pi0 ring and pi1 bimodule of a model")
    sp.add_argument("model")
    sp.set_defaults(fn=cmd_pi)

    sp = sub.add_parser("props", help="randomized property suites")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=200)
    sp.set_defaults(fn=cmd_props)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except io.FileFormatError as exc:
        return _fail(str(exc), 2)
    except io.ValidationError as exc:
        return _fail(str(exc), 1)
    except ValueError as exc:
        return _fail(str(exc), 1)


if __name__ == "__main__":
    sys.exit(main())
