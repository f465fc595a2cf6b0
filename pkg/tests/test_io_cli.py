"""Workspace file round-trips and command-line behavior."""

import json
from importlib import resources

import pytest

from crext import io
from crext.cli import main
from crext.cochains import Cochain2, Cochain3, random_cocycle
from crext.correspondence import canonical_choices, random_choices, realize

DATA = resources.files("crext") / "data"


def _data(rel):
    return str(DATA / rel)


def _bundled(rel):
    return (DATA / rel).read_text()


# ---------------------------------------------------------------------
# io round-trips
# ---------------------------------------------------------------------

def test_bundled_files_roundtrip_byte_identical():
    for rel in ("rings/z4.json", "rings/z2z2.json", "bimodules/z4-mod2.json",
                "bimodules/f2x-self.json", "cochains/z4-self-rep1.json",
                "cochains/z2-self-zero.json"):
        raw = _bundled(rel)
        data = json.loads(raw)
        assert io.dumps(data) == raw


def test_ring_json_roundtrip(pairs):
    for name, ring, bname, bim in pairs:
        data = io.ring_to_json(ring)
        ring2 = io.ring_from_json(json.loads(io.dumps(data)))
        assert ring2 == ring
        bdata = io.bimodule_to_json(bim)
        bim2 = io.bimodule_from_json(json.loads(io.dumps(bdata)), ring2)
        assert bim2.group.cyclic_orders == bim.group.cyclic_orders
        for r in range(ring.size):
            for v in bim.group.elements():
                assert bim2.act_left(r, v) == bim.act_left(r, v)
                assert bim2.act_right(v, r) == bim.act_right(v, r)


def test_cochain_json_roundtrips(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    phi = random_cocycle(ring, bim, rng)
    data = json.loads(io.dumps(io.cochain3_to_json(phi, ring)))
    assert io.cochain3_from_json(data, ring, bim.group) == phi
    gamma = Cochain2(group=bim.group, gdot={(1, 2): (3,)},
                     gplus={(2, 3): (1,)})
    gdata = json.loads(io.dumps(io.cochain2_to_json(gamma, ring)))
    g2 = io.cochain2_from_json(gdata, ring, bim.group)
    assert g2.gdot == gamma.gdot and g2.gplus == gamma.gplus


def test_model_json_roundtrip(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    phi = random_cocycle(ring, bim, rng)
    M = realize(phi, ring, bim)
    data = json.loads(io.dumps(io.model_to_json(M, ring)))
    M2, ring2, bim2 = io.model_from_json(data)
    assert ring2.mul_table == ring.mul_table
    assert M2.m_table == M.m_table
    assert M2.l_table == M.l_table
    assert M2.r_table == M.r_table
    assert M2.mor_mul == M.mor_mul
    assert M2.additive.a_table == M.additive.a_table
    assert M2.additive.mor_add == M.additive.mor_add


def test_choices_json_roundtrip(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    M = realize(random_cocycle(ring, bim, rng), ring, bim)
    ch = random_choices(M, rng)
    data = json.loads(io.dumps(io.choices_to_json(ch, ring, bim.group)))
    ch2 = io.choices_from_json(data, ring, bim.group)
    assert ch2.sigma_dot == ch.sigma_dot
    assert ch2.sigma_plus == ch.sigma_plus


def test_load_rejects_malformed(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(io.FileFormatError):
        io.load_raw(str(p))
    p.write_text(json.dumps({"kind": "ring"}))
    with pytest.raises(io.FileFormatError):
        io.ring_from_json(io.load_raw(str(p)))


def test_json_rejects_invalid_ring():
    data = json.loads(_bundled("rings/z4.json"))
    data["one"] = data["zero"]
    with pytest.raises(io.ValidationError):
        io.ring_from_json(data)


# ---------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------

def test_cli_validate_ok(capsys):
    assert main(["validate", _data("rings/z4.json")]) == 0
    assert "valid ring" in capsys.readouterr().out


def test_cli_validate_exit_codes(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text(json.dumps({"kind": "ring", "labels": ["0"]}))
    assert main(["validate", str(p)]) == 2
    data = json.loads(_bundled("rings/z2.json"))
    data["one"] = data["zero"]
    p.write_text(io.dumps(data))
    assert main(["validate", str(p)]) == 1
    capsys.readouterr()


def test_cli_h3_both_methods_agree(capsys):
    rc = main(["h3", _data("rings/z2.json"), _data("bimodules/z2-self.json"),
               "--method", "both"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "H3 invariant factors: trivial" in out
    assert "methods agree" in out


def test_cli_h3_z4(capsys):
    rc = main(["h3", _data("rings/z4.json"), _data("bimodules/z4-self.json")])
    out = capsys.readouterr().out
    assert rc == 0
    assert "H3 invariant factors: Z/2" in out


def test_cli_is_cocycle(capsys):
    rc = main(["is-cocycle", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"),
               _data("cochains/z4-self-rep1.json")])
    assert rc == 0
    assert "cocycle: yes" in capsys.readouterr().out


def test_cli_is_cocycle_rejects(tmp_path, capsys):
    data = json.loads(_bundled("cochains/z4-self-rep1.json"))
    data["entries"] = [{"comp": "dot", "args": ["1", "1", "1"],
                        "value": [1]}]
    p = tmp_path / "c.json"
    p.write_text(io.dumps(data))
    rc = main(["is-cocycle", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"), str(p)])
    out = capsys.readouterr().out
    assert rc == 1
    assert "cocycle: no" in out


def test_cli_roundtrip_bundled_rep(capsys):
    rc = main(["roundtrip", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"),
               _data("cochains/z4-self-rep1.json")])
    assert rc == 0
    assert "roundtrip exact: yes" in capsys.readouterr().out


def test_cli_realize_check_extract_pi(tmp_path, capsys):
    model = tmp_path / "model.json"
    rc = main(["realize", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"),
               _data("cochains/z4-self-rep1.json"), "-o", str(model)])
    assert rc == 0
    assert "input is a 3-cocycle: yes" in capsys.readouterr().out

    assert main(["validate", str(model)]) == 0
    capsys.readouterr()

    assert main(["check-coherence", str(model)]) == 0
    assert "all diagrams pass" in capsys.readouterr().out

    out_c = tmp_path / "back.json"
    assert main(["extract", str(model), "-o", str(out_c)]) == 0
    capsys.readouterr()
    assert json.loads(out_c.read_text())["entries"] == \
        json.loads(_bundled("cochains/z4-self-rep1.json"))["entries"]

    assert main(["obstruction", str(model)]) == 0
    out = capsys.readouterr().out
    assert "obstruction: (0,)" in out and "2-torsion: yes" in out

    assert main(["pi", str(model)]) == 0
    out = capsys.readouterr().out
    assert "pi0: ring with 4 elements" in out and "pi1:" in out


def test_cli_cobound_and_cohomologous(tmp_path, capsys):
    zero = tmp_path / "zero.json"
    zero.write_text(_bundled("cochains/z2-self-zero.json"))
    rc = main(["cohomologous", _data("rings/z2.json"),
               _data("bimodules/z2-self.json"), str(zero), str(zero)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "cohomologous: yes" in out

    rc = main(["cohomologous", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"),
               _data("cochains/z4-self-rep1.json"),
               _data("cochains/z4-self-rep1.json")])
    capsys.readouterr()
    assert rc == 0

    gamma = tmp_path / "gamma.json"
    gamma.write_text(io.dumps({
        "kind": "cochain2", "version": 1,
        "entries": [{"comp": "gdot", "args": ["1", "1"], "value": [1]}]}))
    rc = main(["cobound", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"), str(gamma)])
    out = capsys.readouterr().out
    assert rc == 0
    assert json.loads(out)["kind"] == "cochain3"


def test_cli_not_cohomologous_exit_1(tmp_path, capsys):
    zero = tmp_path / "zero.json"
    data = json.loads(_bundled("cochains/z4-self-rep1.json"))
    data["entries"] = []
    zero.write_text(io.dumps(data))
    rc = main(["cohomologous", _data("rings/z4.json"),
               _data("bimodules/z4-self.json"), str(zero),
               _data("cochains/z4-self-rep1.json")])
    capsys.readouterr()
    assert rc == 1


def test_cli_props_smoke(capsys):
    rc = main(["props", "square-zero", "--seed", "1", "--cases", "5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "all passed" in out


def test_cli_unknown_key_is_format_error(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"kind": "cochain3", "version": 1,
                             "entries": [{"comp": "nope", "args": [],
                                          "value": []}]}))
    rc = main(["validate", str(p)])
    capsys.readouterr()
    assert rc == 2
