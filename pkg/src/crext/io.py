"""UTF-8 JSON workspace files: rings, bimodules, cochains, models, choices.

Every serializer emits a canonical form (fixed key order, two-space
indent, sorted table entries, trailing newline) so that save(load(f))
is byte-identical for canonical files.  Shape problems raise
:class:`FileFormatError` (CLI exit 2); semantic problems raise
:class:`ValidationError` with the validator's witness (CLI exit 1).
"""

from __future__ import annotations

import json

from .groups import FiniteAbelianGroup, GroupHomomorphism
from .rings import FiniteRing, Bimodule, validate_ring, validate_bimodule
from .cochains import Cochain3, Cochain2, check_normalized
from .catgroup import SkeletalSymCatGroup, _structure_witnesses
from .catring import SkeletalCatRing, _mul_structure_witnesses
from .correspondence import RepresentativeChoices


class FileFormatError(Exception):
    """The file does not parse or does not match its schema."""


class ValidationError(Exception):
    """The file parses but fails its semantic validator."""


KINDS = ("ring", "bimodule", "cochain3", "cochain2", "model", "choices")


def _require(cond, msg):
    if not cond:
        raise FileFormatError(msg)


def _check_header(data, kind):
    _require(isinstance(data, dict), "top level must be a JSON object")
    _require(data.get("kind") == kind,
             f"expected kind {kind!r}, found {data.get('kind')!r}")
    _require(data.get("version") == 1,
             f"unsupported version {data.get('version')!r}")


# ---------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------

def ring_to_json(ring: FiniteRing) -> dict:
    lab = ring.labels
    return {
        "kind": "ring",
        "version": 1,
        "elements": list(lab),
        "zero": lab[ring.zero],
        "one": lab[ring.one],
        "add": [[lab[v] for v in row] for row in ring.add_table],
        "mul": [[lab[v] for v in row] for row in ring.mul_table],
        "neg": [lab[v] for v in ring.neg_table],
    }


def ring_from_json(data: dict) -> FiniteRing:
    _check_header(data, "ring")
    for key in ("elements", "zero", "one", "add", "mul", "neg"):
        _require(key in data, f"ring file is missing {key!r}")
    labels = data["elements"]
    _require(isinstance(labels, list) and labels
             and all(isinstance(s, str) for s in labels),
             "elements must be a non-empty list of strings")
    _require(len(set(labels)) == len(labels), "element labels must be unique")
    n = len(labels)
    idx = {s: i for i, s in enumerate(labels)}

    def look(s, where):
        _require(isinstance(s, str) and s in idx,
                 f"unknown element {s!r} in {where}")
        return idx[s]

    def table(name):
        rows = data[name]
        _require(isinstance(rows, list) and len(rows) == n,
                 f"{name} table must have {n} rows")
        out = []
        for i, row in enumerate(rows):
            _require(isinstance(row, list) and len(row) == n,
                     f"{name} table row {i} must have {n} entries")
            out.append(tuple(look(v, f"{name}[{i}]") for v in row))
        return tuple(out)

    neg = data["neg"]
    _require(isinstance(neg, list) and len(neg) == n,
             f"neg table must have {n} entries")
    ring = FiniteRing(
        labels=tuple(labels),
        add_table=table("add"),
        mul_table=table("mul"),
        neg_table=tuple(look(v, "neg") for v in neg),
        zero=look(data["zero"], "zero"),
        one=look(data["one"], "one"),
    )
    report = validate_ring(ring)
    if report:
        raise ValidationError(report[0])
    return ring


# ---------------------------------------------------------------------
# bimodules
# ---------------------------------------------------------------------

def bimodule_to_json(bim: Bimodule) -> dict:
    lab = bim.ring.labels
    return {
        "kind": "bimodule",
        "version": 1,
        "cyclic_orders": list(bim.group.cyclic_orders),
        "left": {lab[r]: [list(row) for row in bim.left_action[r].matrix]
                 for r in bim.ring.elements()},
        "right": {lab[r]: [list(row) for row in bim.right_action[r].matrix]
                  for r in bim.ring.elements()},
    }


def _action_matrices(data, name, ring, k):
    maps = data[name]
    _require(isinstance(maps, dict), f"{name} must be an object")
    _require(set(maps) == set(ring.labels),
             f"{name} must have exactly one matrix per ring element")
    out = []
    for r in ring.elements():
        m = maps[ring.labels[r]]
        _require(isinstance(m, list) and len(m) == k
                 and all(isinstance(row, list) and len(row) == k
                         and all(isinstance(v, int) for v in row)
                         for row in m),
                 f"{name}[{ring.labels[r]}] must be a {k}x{k} integer matrix")
        out.append(m)
    return out


def bimodule_from_json(data: dict, ring: FiniteRing) -> Bimodule:
    _check_header(data, "bimodule")
    for key in ("cyclic_orders", "left", "right"):
        _require(key in data, f"bimodule file is missing {key!r}")
    orders = data["cyclic_orders"]
    _require(isinstance(orders, list)
             and all(isinstance(d, int) and d >= 1 for d in orders),
             "cyclic_orders must be a list of positive integers")
    group = FiniteAbelianGroup(tuple(orders))
    k = group.rank
    left = _action_matrices(data, "left", ring, k)
    right = _action_matrices(data, "right", ring, k)
    bim = Bimodule.from_matrices(ring, group, left, right)
    report = validate_bimodule(bim)
    if report:
        raise ValidationError(report[0])
    return bim


# ---------------------------------------------------------------------
# cochains
# ---------------------------------------------------------------------

_C3_COMPS = ("dot", "dotplus", "plusdot", "plus")
_C2_COMPS = ("gdot", "gplus")
_C3_ARITY = {"dot": 3, "dotplus": 3, "plusdot": 3, "plus": 4}


def _entry(comp, args, value, lab):
    return {"comp": comp, "args": [lab[x] for x in args], "value": list(value)}


def _sorted_entries(table, comp, lab):
    return [_entry(comp, key, v, lab) for key, v in sorted(table.items())]


def cochain3_to_json(c: Cochain3, ring: FiniteRing) -> dict:
    lab = ring.labels
    entries = []
    for comp, table in (("dot", c.dot), ("dotplus", c.dotplus),
                        ("plusdot", c.plusdot), ("plus", c.plus)):
        entries.extend(_sorted_entries(
            {k: v for k, v in table.items() if any(v)}, comp, lab))
    return {"kind": "cochain3", "version": 1, "entries": entries}


def cochain2_to_json(g: Cochain2, ring: FiniteRing) -> dict:
    lab = ring.labels
    entries = []
    for comp, table in (("gdot", g.gdot), ("gplus", g.gplus)):
        entries.extend(_sorted_entries(
            {k: v for k, v in table.items() if any(v)}, comp, lab))
    return {"kind": "cochain2", "version": 1, "entries": entries}


def _read_entries(data, comps, arities, ring, group):
    idx = {s: i for i, s in enumerate(ring.labels)}
    entries = data.get("entries")
    _require(isinstance(entries, list), "entries must be a list")
    tables = {comp: {} for comp in comps}
    for i, ent in enumerate(entries):
        _require(isinstance(ent, dict)
                 and set(ent) == {"comp", "args", "value"},
                 f"entry {i} must have comp, args and value")
        comp = ent["comp"]
        _require(comp in comps, f"entry {i}: unknown component {comp!r}")
        args = ent["args"]
        _require(isinstance(args, list) and len(args) == arities[comp]
                 and all(isinstance(s, str) and s in idx for s in args),
                 f"entry {i}: args must be {arities[comp]} element labels")
        value = ent["value"]
        _require(isinstance(value, list) and len(value) == group.rank
                 and all(isinstance(v, int) for v in value),
                 f"entry {i}: value must be {group.rank} integers")
        key = tuple(idx[s] for s in args)
        _require(key not in tables[comp], f"entry {i}: duplicate position")
        tables[comp][key] = group.reduce(tuple(value))
    return tables


def cochain3_from_json(data: dict, ring: FiniteRing,
                       group: FiniteAbelianGroup) -> Cochain3:
    _check_header(data, "cochain3")
    t = _read_entries(data, _C3_COMPS, _C3_ARITY, ring, group)
    c = Cochain3(group=group, dot=t["dot"], dotplus=t["dotplus"],
                 plusdot=t["plusdot"], plus=t["plus"])
    report = check_normalized(c, ring)
    if report:
        raise ValidationError("cochain is not normalized: " + report[0])
    return c


def cochain2_from_json(data: dict, ring: FiniteRing,
                       group: FiniteAbelianGroup) -> Cochain2:
    _check_header(data, "cochain2")
    t = _read_entries(data, _C2_COMPS, {"gdot": 2, "gplus": 2}, ring, group)
    return Cochain2(group=group, gdot=t["gdot"], gplus=t["gplus"])


# ---------------------------------------------------------------------
# models
# ---------------------------------------------------------------------

_MODEL_TABLES = ("a", "c", "lambda", "rho", "iota", "m", "lunit", "runit",
                 "l", "r", "mor_add", "mor_mul")
_OBJ_ARITY = {"a": 3, "c": 2, "lambda": 1, "rho": 1, "iota": 1,
              "m": 3, "lunit": 1, "runit": 1, "l": 3, "r": 3,
              "mor_add": 2, "mor_mul": 2}
_MOR_TABLES = ("mor_add", "mor_mul")


def _table_entries(table, lab, morphic):
    out = []
    for key, v in sorted(table.items()):
        if not any(v):
            continue
        if morphic:
            x, y, al, be = key
            args = [lab[x], lab[y], list(al), list(be)]
        else:
            args = [lab[x] for x in key]
        out.append({"args": args, "value": list(v)})
    return out


def model_to_json(M: SkeletalCatRing, ring: FiniteRing) -> dict:
    """Serialize a skeletal model whose objects are the ring elements."""
    G = M.additive
    lab = ring.labels
    bim = _model_bim(M, ring)
    tables = {
        "a": _table_entries(G.a_table, lab, False),
        "c": _table_entries(G.c_table, lab, False),
        "lambda": _table_entries({(x,): v for x, v in G.lambda_table.items()},
                                 lab, False),
        "rho": _table_entries({(x,): v for x, v in G.rho_table.items()},
                              lab, False),
        "iota": _table_entries({(x,): v for x, v in G.iota_table.items()},
                               lab, False),
        "m": _table_entries(M.m_table, lab, False),
        "lunit": _table_entries({(x,): v for x, v in M.lunit_table.items()},
                                lab, False),
        "runit": _table_entries({(x,): v for x, v in M.runit_table.items()},
                                lab, False),
        "l": _table_entries(M.l_table, lab, False),
        "r": _table_entries(M.r_table, lab, False),
        # mor_add is stored as the deviation from the strict rule
        # alpha + beta, so strict models serialize with no entries
        "mor_add": _table_entries(
            {k: G.pi1.sub(v, G.pi1.add(k[2], k[3]))
             for k, v in G.mor_add.items()}, lab, True),
        # mor_mul is stored as the deviation from the bilinear rule
        # alpha . y + x . beta, which realized models use
        "mor_mul": _table_entries(
            {k: G.pi1.sub(v, _bilinear(M, ring, bim, *k))
             for k, v in M.mor_mul.items()}, lab, True),
    }
    return {
        "kind": "model",
        "version": 1,
        "ring": ring_to_json(ring),
        "pi1": {"cyclic_orders": list(G.pi1.cyclic_orders),
                "left": {lab[r]: [list(row)
                                  for row in _pi1_action(M, ring, r, "left")]
                         for r in ring.elements()},
                "right": {lab[r]: [list(row)
                                   for row in _pi1_action(M, ring, r, "right")]
                          for r in ring.elements()}},
        "tables": tables,
    }


def _pi1_action(M, ring, r, side):
    """Matrix of the pi1 action of a ring element, from mor_mul."""
    P = M.pi1
    cols = []
    for g in _pi1_generators(P):
        if side == "left":
            v = M.mmul(M.id_m(r), (g, ring.one))[0]
        else:
            v = M.mmul((g, ring.one), M.id_m(r))[0]
        cols.append(v)
    return [tuple(col[i] for col in cols) for i in range(P.rank)]


def _pi1_generators(P):
    for i in range(P.rank):
        e = [0] * P.rank
        e[i] = 1
        yield P.reduce(tuple(e))


def _bilinear(M, ring, bim, x, y, al, be):
    """alpha . y + x . beta computed through the stored pi1 actions."""
    return M.pi1.add(bim.act_right(al, y), bim.act_left(x, be))


def _model_bim(M, ring):
    left = [_pi1_action(M, ring, r, "left") for r in ring.elements()]
    right = [_pi1_action(M, ring, r, "right") for r in ring.elements()]
    return Bimodule.from_matrices(ring, M.pi1, left, right)


def model_from_json(data: dict) -> tuple[SkeletalCatRing, FiniteRing, Bimodule]:
    _check_header(data, "model")
    for key in ("ring", "pi1", "tables"):
        _require(key in data, f"model file is missing {key!r}")
    ring = ring_from_json(data["ring"])
    pi1_data = data["pi1"]
    _require(isinstance(pi1_data, dict) and "cyclic_orders" in pi1_data,
             "pi1 must give cyclic_orders")
    orders = pi1_data["cyclic_orders"]
    _require(isinstance(orders, list)
             and all(isinstance(d, int) and d >= 1 for d in orders),
             "pi1 cyclic_orders must be positive integers")
    group = FiniteAbelianGroup(tuple(orders))
    k = group.rank
    left = _action_matrices(pi1_data, "left", ring, k)
    right = _action_matrices(pi1_data, "right", ring, k)
    bim = Bimodule.from_matrices(ring, group, left, right)
    report = validate_bimodule(bim)
    if report:
        raise ValidationError("pi1 actions: " + report[0])

    tables = data["tables"]
    _require(isinstance(tables, dict) and set(tables) <= set(_MODEL_TABLES),
             "tables must be an object with the model table names")
    idx = {s: i for i, s in enumerate(ring.labels)}
    n = ring.size
    zero = group.zero()

    def read(name):
        out = {}
        for i, ent in enumerate(tables.get(name, [])):
            _require(isinstance(ent, dict) and set(ent) == {"args", "value"},
                     f"{name} entry {i} must have args and value")
            args = ent["args"]
            morphic = name in _MOR_TABLES
            want = _OBJ_ARITY[name] + (2 if morphic else 0)
            _require(isinstance(args, list) and len(args) == want,
                     f"{name} entry {i}: expected {want} args")
            key = []
            for j, av in enumerate(args):
                if morphic and j >= 2:
                    _require(isinstance(av, list) and len(av) == k
                             and all(isinstance(v, int) for v in av),
                             f"{name} entry {i}: morphism args must be "
                             f"{k} integers")
                    key.append(group.reduce(tuple(av)))
                else:
                    _require(isinstance(av, str) and av in idx,
                             f"{name} entry {i}: unknown element {av!r}")
                    key.append(idx[av])
            value = ent["value"]
            _require(isinstance(value, list) and len(value) == k
                     and all(isinstance(v, int) for v in value),
                     f"{name} entry {i}: value must be {k} integers")
            key = tuple(key) if len(key) > 1 else key[0]
            _require(key not in out, f"{name} entry {i}: duplicate position")
            out[key] = group.reduce(tuple(value))
        return out

    def full(name, arity, default=None):
        sparse = read(name)
        out = {}
        from itertools import product as iproduct
        for key in iproduct(range(n), repeat=arity):
            k2 = key if arity > 1 else key[0]
            out[k2] = sparse.pop(k2, default(k2) if default else zero)
        return out

    a_t = full("a", 3)
    c_t = full("c", 2)
    lam_t = full("lambda", 1)
    rho_t = full("rho", 1)
    iota_t = full("iota", 1)
    m_t = full("m", 3)
    lunit_t = full("lunit", 1)
    runit_t = full("runit", 1)
    l_t = full("l", 3)
    r_t = full("r", 3)

    mor_sparse = {"mor_add": read("mor_add"), "mor_mul": read("mor_mul")}
    mor_add = {}
    mor_mul = {}
    from itertools import product as iproduct
    els = list(group.elements())
    for x, y in iproduct(range(n), repeat=2):
        for al in els:
            for be in els:
                key = (x, y, al, be)
                strict = group.add(al, be)
                dev = mor_sparse["mor_add"].pop(key, zero)
                mor_add[key] = group.add(strict, dev)
                bil = group.add(bim.act_right(al, y), bim.act_left(x, be))
                dev = mor_sparse["mor_mul"].pop(key, zero)
                mor_mul[key] = group.add(bil, dev)

    G = SkeletalSymCatGroup(
        obj_add=ring.add_table, obj_neg=ring.neg_table, obj_zero=ring.zero,
        pi1=group, mor_add=mor_add, a_table=a_t, c_table=c_t,
        lambda_table=lam_t, rho_table=rho_t, iota_table=iota_t)
    M = SkeletalCatRing(
        additive=G, obj_mul=ring.mul_table, obj_one=ring.one,
        mor_mul=mor_mul, m_table=m_t, lunit_table=lunit_t,
        runit_table=runit_t, l_table=l_t, r_table=r_t)

    structural = list(_structure_witnesses(G))
    structural += list(_mul_structure_witnesses(M))
    if structural:
        raise ValidationError("model structure: " + structural[0])
    return M, ring, bim


# ---------------------------------------------------------------------
# choices
# ---------------------------------------------------------------------

def choices_to_json(ch: RepresentativeChoices, ring: FiniteRing,
                    group: FiniteAbelianGroup) -> dict:
    lab = ring.labels
    def dump(table):
        return [{"args": [lab[a], lab[b]], "value": list(v)}
                for (a, b), v in sorted(table.items()) if any(v)]
    return {
        "kind": "choices",
        "version": 1,
        "sigma_dot": dump(ch.sigma_dot),
        "sigma_plus": dump(ch.sigma_plus),
    }


def choices_from_json(data: dict, ring: FiniteRing,
                      group: FiniteAbelianGroup) -> RepresentativeChoices:
    _check_header(data, "choices")
    idx = {s: i for i, s in enumerate(ring.labels)}
    n = ring.size
    zero = group.zero()

    def read(name):
        out = {(a, b): zero for a in range(n) for b in range(n)}
        for i, ent in enumerate(data.get(name, [])):
            _require(isinstance(ent, dict) and set(ent) == {"args", "value"},
                     f"{name} entry {i} must have args and value")
            args = ent["args"]
            _require(isinstance(args, list) and len(args) == 2
                     and all(isinstance(s, str) and s in idx for s in args),
                     f"{name} entry {i}: args must be two element labels")
            v = ent["value"]
            _require(isinstance(v, list) and len(v) == group.rank
                     and all(isinstance(x, int) for x in v),
                     f"{name} entry {i}: value must be "
                     f"{group.rank} integers")
            out[(idx[args[0]], idx[args[1]])] = group.reduce(tuple(v))
        return out

    return RepresentativeChoices(sigma_dot=read("sigma_dot"),
                                 sigma_plus=read("sigma_plus"))


# ---------------------------------------------------------------------
# file plumbing
# ---------------------------------------------------------------------

def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def save(path, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data))


def load_raw(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: not valid JSON ({exc})") from exc
    _require(isinstance(data, dict), f"{path}: top level must be an object")
    kind = data.get("kind")
    _require(kind in KINDS, f"{path}: unknown kind {kind!r}")
    return data
