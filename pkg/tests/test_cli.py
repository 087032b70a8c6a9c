import json

import pytest

from epivar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_applicable(capsys):
    code, out = run(capsys, "applicable", "xx", "abab")
    assert code == 0 and out["substitution"] == {"x": "ab"} and out["factor"] == [0, 4]
    assert run(capsys, "applicable", "xx", "aba") == (1, {"applicable": False})
    assert run(capsys, "applicable", "xy", "a")[0] == 1
    assert run(capsys, "applicable", "x!", "a")[0] == 2


def test_applicable_budget(capsys):
    code, out = run(capsys, "--budget", "2", "applicable", "xyzxyzx", "abcbacbcabcbacbcab")
    assert code == 3 and out["error"] == "budget-exceeded"


def test_squarefree(capsys):
    code, out = run(capsys, "squarefree", "enum", "--alphabet", "2", "--max-len", "10")
    assert code == 0 and out["words"] == ["a", "b", "ab", "ba", "aba", "bab"]
    code, out = run(capsys, "squarefree", "check", "abcacb")
    assert code == 0
    code, out = run(capsys, "squarefree", "check", "abcbc")
    assert code == 1 and out["square"] == {"position": 1, "root": "bc"}


def test_family_generate_and_verify(capsys, tmp_path):
    fam_path = tmp_path / "fam.json"
    code, out = run(capsys, "family", "generate", "12", "--family-out", str(fam_path))
    assert code == 0 and out["certificate"]["checked_pairs"] == 132
    assert len(json.loads(fam_path.read_text())) == 12
    code, out = run(capsys, "family", "verify", str(fam_path))
    assert code == 0 and out["certificate"]["member_count"] == 12

    fam = json.loads(fam_path.read_text())
    dup = write(tmp_path, "dup.json", fam[:2] + [dict(fam[0], index="5/7")])
    code, out = run(capsys, "family", "verify", dup)
    assert code == 1 and out["counterexample"]["kind"] == "pair"
    assert out["counterexample"]["first"]["word"] == out["counterexample"]["second"]["word"]


def test_family_exhausted(capsys):
    code, out = run(capsys, "family", "generate", "8", "--min-length", "5", "--max-length", "8")
    assert code == 3 and out["error"] == "generation-exhausted"


def test_variety_compare(capsys, tmp_path):
    fam_path = tmp_path / "fam.json"
    run(capsys, "family", "generate", "59", "--family-out", str(fam_path))
    code, out = run(capsys, "variety", "compare", "C:1:0", "C:1:1", "--pool=-2..2/4",
                    "--family", str(fam_path))
    assert code == 0 and out["verdict"] == "a-strictly-below"
    assert "holds_in_a_not_b" in out["witnesses"]
    code, out = run(capsys, "variety", "compare", "A:1:0", "A:1:1", "--pool=-2..2/4",
                    "--family", str(fam_path))
    assert out["verdict"] == "incomparable" and len(out["witnesses"]) == 2


def test_variety_spec_file_and_missing_member(capsys, tmp_path):
    fam_path = tmp_path / "fam.json"
    run(capsys, "family", "generate", "3", "--family-out", str(fam_path))
    spec = write(tmp_path, "c.json", {"kind": "C", "n": 2, "xi": "0/1", "pool": ["0/1", "1/1"]})
    code, out = run(capsys, "variety", "build", spec, "--family", str(fam_path))
    assert code == 0 and out["systems"][0]["nil_exponent"] == 3
    code, out = run(capsys, "variety", "build", "C:1:0", "--pool=0..2", "--family", str(fam_path))
    assert code == 2 and out["error"] == "missing-family-member"


def test_free_object(capsys):
    code, out = run(capsys, "variety", "free-object", "--gens", "xx", "--alphabet", "2",
                    "--max-len", "3")
    assert code == 0 and out["count"] == 6


def test_lattice_commands(capsys, tmp_path):
    n5 = write(tmp_path, "n5.json", {"size": 5, "leq": [[0, 1], [1, 3], [3, 4], [0, 2], [2, 4]],
                                     "labels": ["0", "a", "b", "c", "1"]})
    code, out = run(capsys, "lattice", "analyze", n5)
    assert code == 0 and out["lower_modular"] == ["0", "b", "c", "1"]
    assert out["mutation_witness"] == {"c1": "a", "c2": "c", "e": "b"}
    code, out = run(capsys, "lattice", "check-lemmas", "--eq", "4")
    assert code == 0 and all(out["vv_proposition"].values())
    code, out = run(capsys, "lattice", "dot", n5)
    assert code == 0 and out.count("->") == 5
    code, out = run(capsys, "lattice", "eqlattice", "3")
    assert out["size"] == 5
    bad = write(tmp_path, "bad.json", {"size": 3, "leq": [[0, 1], [0, 2]]})
    assert run(capsys, "lattice", "analyze", bad)[0] == 2


def test_epigroup_commands(capsys, tmp_path):
    c3 = write(tmp_path, "c3.json", {"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
    code, out = run(capsys, "epigroup", "analyze", c3)
    assert code == 0 and out["index"] == 1 and out["E_n"]["member"]
    null2 = write(tmp_path, "null2.json", {"order": 2, "table": [[0, 0], [0, 0]]})
    code, out = run(capsys, "epigroup", "analyze", null2)
    assert out["index"] == 2
    below = out["E_index_minus_1"]["identities"][3]
    assert not below["holds"] and below["counterexample"] == {"x": 1}
    bad = write(tmp_path, "bad.json", {"order": 2, "table": [[1, 0], [0, 0]]})
    code, out = run(capsys, "epigroup", "analyze", bad)
    assert code == 2 and out["error"] == "non-associative"
    code, out = run(capsys, "epigroup", "scan")
    assert code == 0 and out["counts"] == {"1": 1, "2": 8, "3": 113}


def test_manifest_and_determinism(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    run(capsys, "--json-out", str(out1), "lattice", "analyze", "--named", "n5")
    run(capsys, "--json-out", str(out2), "lattice", "analyze", "--named", "n5")
    assert out1.read_bytes() == out2.read_bytes()
    manifest = json.loads((tmp_path / "a.json.manifest.json").read_text())
    assert manifest["subcommand"] == "lattice" and manifest["output_paths"] == [str(out1)]


def test_manifest_records_input_digest(capsys, tmp_path):
    c3 = write(tmp_path, "c3.json", {"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
    out = tmp_path / "r.json"
    run(capsys, "--json-out", str(out), "epigroup", "analyze", c3)
    manifest = json.loads((tmp_path / "r.json.manifest.json").read_text())
    assert list(manifest["input_digests"]) == [c3]


def test_bad_usage_exit_code(capsys):
    assert main(["nonsense"]) == 2
