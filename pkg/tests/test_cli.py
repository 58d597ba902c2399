import json
from pathlib import Path

import pytest

from hessencomb import make_hessenberg, run_suite
from hessencomb.cache import load_csf_m
from hessencomb.cli import main
from hessencomb.errors import BudgetExceeded, UnknownSuite
from hessencomb.gkm import position_class
from hessencomb.suites import enumerate_hessenberg

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HESSENCOMB_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


@pytest.mark.parametrize("h", ["2,4,4,4", "2,3,5,6,6,6", "2,3,6,6,6,7,8,8"])
def test_report_matches_golden_bytes(capsys, h):
    code, out, _ = run(capsys, "report", "--h", h, "--json")
    assert code == 0
    assert out == (GOLDEN / f"report-{h}.json").read_text()


def test_golden_n6_content():
    data = json.loads((GOLDEN / "report-2,3,5,6,6,6.json").read_text())
    assert data["format"] == 1 and data["T"] == [1, 4, 5]
    assert data["w_list"] == ["612345", "561234", "234156", "123546", "123465"]
    assert sorted(data["A"][2]) == sorted("412356 142356 241356 451236 461235".split())
    assert data["P"][3] == ["123546"]
    assert data["d"] == [1, 15, 6, 1, 1]
    assert data["alpha"] == [[6], [2, 4], [1, 5], [6], [6]]


def test_golden_n8_content():
    data = json.loads((GOLDEN / "report-2,3,6,6,6,7,8,8.json").read_text())
    assert data["w_list"] == ["81234567", "78123456", "23415678", "12354678",
                              "12348567", "34567812", "23456781"]
    assert data["alpha"] == [[8], [2, 6], [1, 7], [8], [8], [6, 2], [1, 7]]


def test_golden_n4_content():
    data = json.loads((GOLDEN / "report-2,4,4,4.json").read_text())
    assert [len(g) for g in data["G_by_k"]] == [1, 3, 4, 3, 1]


def test_report_text(capsys):
    code, out, _ = run(capsys, "report", "--h", "2,3,5,6,6,6")
    assert code == 0 and "dim H^2 = 24" in out


def test_reducible_exits_nonzero(capsys):
    code, _, err = run(capsys, "report", "--h", "2,2,3")
    assert code == 2 and "reducible" in err


def test_parse_error_position(capsys):
    code, _, err = run(capsys, "generators", "--h", "2,4,q,4")
    assert code == 2 and "position 3" in err


def test_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_generators_and_orientations(capsys):
    code, out, _ = run(capsys, "generators", "--h", "2,4,4,4", "--json")
    data = json.loads(out)
    assert code == 0 and [len(g["perms"]) for g in data["generators"]] == [1, 3, 4, 3, 1]
    code, out, _ = run(capsys, "orientations", "--h", "2,4,4,4", "--json")
    data = json.loads(out)
    assert data["format"] == 1 and data["count"] == 12


def test_ai_and_partition(capsys):
    code, out, _ = run(capsys, "ai", "--h", "2,3,5,6,6,6", "--i", "1", "--json")
    data = json.loads(out)
    assert data["A"][0]["perms"] == ["231456", "234156", "241356", "251346", "261345"]
    code, out, _ = run(capsys, "partition", "--h", "2,3,5,6,6,6", "--k", "1", "--json")
    data = json.loads(out)
    assert sorted(len(c) for c in data["classes"]) == [1, 1, 3, 5, 14]


def test_csf_cache_round_trip(capsys, isolated_cache):
    h = "2,3,5,6,6,6"
    code, cold, _ = run(capsys, "csf", "--h", h, "--basis", "e", "--json")
    assert code == 0 and (isolated_cache / f"csf-{h}.json").exists()
    stored = json.loads((isolated_cache / f"csf-{h}.json").read_text())
    assert stored["format"] == 1 and stored["basis"] == "m"
    assert load_csf_m(make_hessenberg((2, 3, 5, 6, 6, 6)), isolated_cache) is not None
    code, warm, _ = run(capsys, "csf", "--h", h, "--basis", "e", "--json")
    code, nocache, _ = run(capsys, "csf", "--h", h, "--basis", "e", "--json", "--no-cache")
    assert cold == warm == nocache
    data = json.loads(cold)
    assert data["format"] == 1 and data["basis"] == "e"


def test_csf_h_basis(capsys):
    code, out, _ = run(capsys, "csf", "--h", "3,3,3", "--basis", "h", "--json")
    data = json.loads(out)
    assert data["basis"] == "h" and data["terms"] == [{"partition": [3], "tpoly": [1, 2, 2, 1]}]


def test_stale_cache_is_ignored(capsys, isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "csf-2,2.json").write_text('{"format": 0}')
    code, out, _ = run(capsys, "csf", "--h", "2,2", "--json")
    assert code == 0 and json.loads(out)["terms"][0]["tpoly"] == [1, 1]


def test_gkm_check(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(position_class(1, 2).dumps())
    code, out, _ = run(capsys, "gkm-check", "--h", "2,2", "--classes", str(good))
    assert code == 0 and "equivariant" in out
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"format": 1, "n": 2, "values": [
        {"perm": "12", "poly": [{"exps": [1, 0], "coeff": 1}]},
        {"perm": "21", "poly": []}]}))
    code, out, _ = run(capsys, "gkm-check", "--h", "2,2", "--classes", str(bad))
    assert code == 1 and "NOT" in out


def test_universe(capsys):
    code, out, _ = run(capsys, "universe", "--n", "4", "--json")
    data = json.loads(out)
    assert data["h"] == [[2, 3, 4, 4], [2, 4, 4, 4], [3, 3, 4, 4], [3, 4, 4, 4], [4, 4, 4, 4]]
    assert [len(enumerate_hessenberg(n)) for n in range(2, 9)] == [1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(BudgetExceeded):
        enumerate_hessenberg(10)


def test_verify_exit_code_and_determinism(capsys):
    code, one, _ = run(capsys, "verify", "--suite", "all", "--n-max", "4", "--json")
    assert code == 0
    code, two, _ = run(capsys, "verify", "--suite", "all", "--n-max", "4", "--json",
                       "--jobs", "2")
    assert one == two
    data = json.loads(one)
    assert data["format"] == 1 and data["summary"]["failed"] == 0
    assert "wall_time" not in data


def test_verify_with_warm_cache(capsys):
    code, cold, _ = run(capsys, "verify", "--suite", "chow", "--n-max", "5", "--json")
    code, warm, _ = run(capsys, "verify", "--suite", "chow", "--n-max", "5", "--json")
    code, off, _ = run(capsys, "verify", "--suite", "chow", "--n-max", "5", "--json",
                       "--no-cache")
    assert cold == warm == off


def test_verify_reports_failures(monkeypatch, capsys):
    from hessencomb import suites
    from hessencomb.reporting import IdentityCheck

    monkeypatch.setitem(suites.SUITES, "counts",
                        lambda h, **_: [IdentityCheck("broken", str(h), {}, 1, 2)])
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--n-max", "3")
    assert code == 1 and "FAIL broken" in out
