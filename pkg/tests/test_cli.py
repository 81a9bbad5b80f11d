import json

from simhom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, (json.loads(out) if out.strip() else None), err


def test_homology_catalog_names(capsys):
    for name, betti in [("octahedron", [1, 0, 1]), ("torus", [1, 2, 1]), ("point", [1])]:
        code, data, _ = run_json(capsys, "homology", name)
        assert code == 0
        assert data["results"]["betti"] == betti
        assert data["timing"] is None


def test_cohomology_with_generators(capsys):
    code, data, _ = run_json(capsys, "cohomology", "torus", "--generators")
    assert code == 0
    assert data["results"]["betti"] == [1, 2, 1]
    assert len(data["results"]["generators"]["1"]) == 2


def test_duality_command(capsys):
    code, data, _ = run_json(capsys, "duality", "octahedron")
    assert code == 0
    assert data["results"]["betti_symmetric"] is True
    assert data["results"]["duality_invertible"] is True


def test_duality_rejects_rp2_with_exit_2(capsys):
    code, out, err = run(capsys, "duality", "rp2")
    assert code == 2
    assert "orientation" in err or "error" in err


def test_duality_rejects_interval(capsys):
    code, out, err = run(capsys, "duality", "interval")
    assert code == 2


def test_parse_error_exit_1(capsys):
    code, out, err = run(capsys, "homology", "no-such-complex")
    assert code == 1
    assert "error" in err


def test_degree_command(capsys):
    code, data, _ = run_json(capsys, "degree", "hex_wrap2")
    assert code == 0
    assert data["results"]["degree"] == "2"
    code, data, _ = run_json(capsys, "degree", "oct_antipodal")
    assert data["results"]["degree"] == "-1"


def test_lefschetz_command(capsys):
    code, data, _ = run_json(capsys, "lefschetz", "torus")
    assert code == 0
    assert data["results"]["euler_number"] == "0"
    assert data["results"]["combinatorial_euler_characteristic"] == 0
    signs = [s["sign"] for s in data["results"]["lefschetz_class_summands"]]
    assert signs == [1, -1, -1, 1]


def test_coincidence_command_with_witness(capsys):
    code, data, _ = run_json(
        capsys, "coincidence", "hex_wrap2", "hex_wrap1", "--witness"
    )
    assert code == 0
    res = data["results"]
    assert res["value"] == "-1"
    assert res["consistent"] is True
    assert res["witness_status"] == "found"
    assert sorted(res["lambda"].values()) == ["-1"] * 6


def test_coincidence_id_pair(capsys):
    code, data, _ = run_json(
        capsys, "coincidence", "id_octahedron", "id_octahedron", "--witness",
        "--max-subdiv", "3",
    )
    assert code == 0
    assert data["results"]["value"] == "2"
    assert data["results"]["witness_status"] == "found"


def test_coincidence_zero_no_witness_claim(capsys):
    code, data, _ = run_json(
        capsys, "coincidence", "hex_const_v0", "hex_const_v3", "--witness",
        "--max-subdiv", "1",
    )
    assert code == 0
    assert data["results"]["value"] == "0"
    assert data["results"]["witness"] is None
    assert data["results"]["witness_status"] == "no-claim-lambda-zero"


def test_verify_kunneth_suite(capsys):
    code, data, _ = run_json(capsys, "verify", "--suite", "kunneth")
    assert code == 0
    names = [r["name"] for r in data["results"]["suites"]["kunneth"]]
    assert any("(1,0,2,0,1)" in n or "S2 x S2" in n for n in names)
    assert all(r["passed"] for r in data["results"]["suites"]["kunneth"])


def test_verify_deterministic_output(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "euler", "--seed", "7", "--json")
    code2, out2, _ = run(capsys, "verify", "--suite", "euler", "--seed", "7", "--json")
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical for a pinned seed


def test_timing_flag_restores_elapsed(capsys):
    code, data, _ = run_json(capsys, "homology", "point", "--timing")
    assert code == 0
    assert isinstance(data["timing"], float)
    code, data, _ = run_json(capsys, "homology", "point")
    assert data["timing"] is None


def test_catalog_command(capsys):
    code, data, _ = run_json(capsys, "catalog")
    assert code == 0
    assert "octahedron" in data["results"]["complexes"]
    assert "hex_wrap2" in data["results"]["maps"]


def test_catalog_entries_all_validate():
    # constructing every entry passes validate/check_simplicial by design
    from simhom import catalog

    entries = catalog.entries()
    kinds = {e.kind for e in entries}
    assert kinds == {"complex", "map"}
    assert len(entries) >= 20


def test_file_inputs_roundtrip(tmp_path, capsys):
    # complex file + map file referring to it and to a catalog complex
    square = {
        "name": "square",
        "vertices": ["a", "b", "c", "d"],
        "maximal_simplices": [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]],
    }
    cpath = tmp_path / "square.json"
    cpath.write_text(json.dumps(square))
    code, data, _ = run_json(capsys, "homology", str(cpath))
    assert code == 0
    assert data["results"]["betti"] == [1, 1]

    fmap = {
        "name": "square_to_triangle",
        "domain": "square",
        "codomain": "triangle",
        "vertex_map": {"a": "w0", "b": "w1", "c": "w2", "d": "w2"},
    }
    mpath = tmp_path / "map.json"
    mpath.write_text(json.dumps(fmap))
    code, data, _ = run_json(capsys, "degree", str(mpath))
    assert code == 0
    assert data["results"]["degree"] in ("1", "-1")


def test_file_map_coincidence(tmp_path, capsys):
    # two maps on the same complex file share the loaded domain object
    hexa = {
        "name": "hex6",
        "vertices": [f"v{i}" for i in range(6)],
        "maximal_simplices": [[f"v{i}", f"v{(i + 1) % 6}"] for i in range(6)],
    }
    (tmp_path / "hex6.json").write_text(json.dumps(hexa))
    fmap = {
        "domain": "hex6",
        "codomain": "triangle",
        "vertex_map": {f"v{i}": f"w{i % 3}" for i in range(6)},
    }
    gmap = {
        "domain": "hex6",
        "codomain": "triangle",
        "vertex_map": {
            "v0": "w0", "v1": "w1", "v2": "w2", "v3": "w0", "v4": "w0", "v5": "w0"
        },
    }
    (tmp_path / "f.json").write_text(json.dumps(fmap))
    (tmp_path / "g.json").write_text(json.dumps(gmap))
    code, data, _ = run_json(
        capsys, "coincidence", str(tmp_path / "f.json"), str(tmp_path / "g.json")
    )
    assert code == 0
    assert data["results"]["consistent"] is True
    assert data["results"]["value"] in ("-1", "1")


def test_bad_map_file_exit_1(tmp_path, capsys):
    bad = {
        "domain": "hexagon",
        "codomain": "triangle",
        "vertex_map": {f"v{i}": "w0" if i % 2 else "nope" for i in range(6)},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, err = run(capsys, "degree", str(path))
    assert code == 1


def test_human_output_runs(capsys):
    code, out, err = run(capsys, "homology", "genus2")
    assert code == 0
    assert "genus2" in out
    assert "betti" in out
