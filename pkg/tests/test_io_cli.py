import json

import numpy as np
import pytest

from lrpkit import io
from lrpkit.algebra import elementary_abelian
from lrpkit.cli import main
from lrpkit.corpus import random_lrp_bimodule
from lrpkit.module import jordan_module
from lrpkit.varieties import RankVariety, rank_variety


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_save_load_round_trip_byte_identical(tmp_path):
    A = elementary_abelian(3, 1)
    B = random_lrp_bimodule(A, np.random.default_rng(0))
    f1, f2 = tmp_path / "b1.json", tmp_path / "b2.json"
    io.save(B, f1)
    io.save(io.load_bimodule(f1), f2)
    assert f1.read_bytes() == f2.read_bytes()
    M = jordan_module(A, 2)
    io.save(M, f1)
    io.save(io.load_any(f1), f2)
    assert f1.read_bytes() == f2.read_bytes()
    V = rank_variety(M)
    io.save(V, f1)
    assert io.variety_from_json(io.load_json(f1)) == V
    assert isinstance(V, RankVariety)


def test_to_json_rejects_unknown():
    with pytest.raises(TypeError):
        io.to_json(object())


def test_cli_twisted_workflow(tmp_path, capsys):
    t, r, tt = (str(tmp_path / n) for n in ("t.json", "r.json", "tt.json"))
    assert main(["new", "twisted", "-p", "3", "--alpha", "2", "-o", t]) == 0
    assert main(["new", "regular-bimodule", "-p", "3", "-o", r]) == 0
    rc, out = run(capsys, "bimod", "lrp", t)
    assert rc == 0 and json.loads(out) == {"lrp": True}
    assert main(["tensor", t, t, "-o", tt]) == 0
    rc, out = run(capsys, "iso", tt, r)
    assert json.loads(out)["isomorphic"] is True
    rc, out = run(capsys, "variety", "compute", t)
    assert json.loads(out)["points"] == [[1, 1]]
    rc, out = run(capsys, "bimod", "zigzag", t)
    assert rc == 0 and json.loads(out)["ok"] is True
    rc, out = run(capsys, "dual", "--side", "right", t)
    assert rc == 0 and json.loads(out)["dim"] == 3


def test_cli_module_workflow(tmp_path, capsys):
    k, j = str(tmp_path / "k.json"), str(tmp_path / "j.json")
    main(["new", "trivial", "-p", "2", "-n", "2", "-o", k])
    main(["new", "jordan", "-p", "2", "-n", "2", "--size", "2", "-o", j])
    rc, out = run(capsys, "ext", k, k, "-d", "4")
    assert json.loads(out)["dims"] == [1, 2, 3, 4, 5]
    rc, out = run(capsys, "variety", "tpp", j, k)
    assert rc == 0 and json.loads(out)["holds"] is True
    rc, out = run(capsys, "hopf", "verify-gf", j)
    assert rc == 0 and json.loads(out) == {"comparison_map_ok": True, "isomorphic": True}
    rc, out = run(capsys, "syzygy", j, "-k", "1")
    assert json.loads(out)["dim"] == 2
    rc, out = run(capsys, "check", j)
    assert rc == 0 and json.loads(out)["kind"] == "module"


def test_cli_hochschild(tmp_path, capsys):
    a = str(tmp_path / "a.json")
    main(["new", "algebra", "-p", "2", "-o", a])
    rc, out = run(capsys, "cohom", "hh", a, "-d", "6", "--holm")
    assert rc == 0 and json.loads(out) == {"dims": [2] * 7, "holm": True}


def test_cli_output_is_deterministic(tmp_path, capsys):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    for f in (a, b):
        main(["new", "twisted", "-p", "2", "-n", "2", "--alpha", "0,1;1,0", "-o", f])
    assert open(a, "rb").read() == open(b, "rb").read()
    rc1, o1 = run(capsys, "verify", "-p", "2", "-n", "1")
    rc2, o2 = run(capsys, "verify", "-p", "2", "-n", "1")
    assert rc1 == rc2 == 0 and o1 == o2
    rep = json.loads(o1)
    assert all(c["passed"] for c in rep["checks"])


def test_cli_errors(tmp_path, capsys):
    assert main(["verify", "-p", "7"]) == 2
    assert main(["check", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["check", str(bad)]) == 2
    assert main(["new", "twisted", "-p", "2", "--alpha", "0", "-o", str(tmp_path / "x.json")]) == 2
