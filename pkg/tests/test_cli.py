import csv
import io
import json

import pytest

from ffidtest.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def rows(text):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(body))


def header(text):
    return dict(line[2:].split("=", 1) for line in text.splitlines() if line.startswith("# "))


def test_field():
    code, out = run("field", "--q", "2", "--n", "4")
    assert code == 0
    (row,) = rows(out)
    assert row["psi"] == "19" and row["group_order"] == "15" and row["factorization"] == "3*5"
    h = header(out)
    assert h["q"] == "2" and h["n"] == "4" and h["psi"] == "19" and h["tool"].startswith("ffidtest")


def test_etest_equal():
    code, out = run("etest", "--q", "2", "--n", "8", "--e", "17", "--f", "3,1", "--g", "3,1")
    assert code == 0
    assert {r["verdict"] for r in rows(out)} == {"equal-or-indistinguishable"}


def test_etest_distinct_random():
    code, out = run("etest", "--q", "2", "--n", "12", "--e", "13", "--d", "2", "--seed", "4")
    assert code == 0
    tests = {r["test"]: r for r in rows(out)}
    assert set(tests) == {"naive", "subspace"}
    assert tests["naive"]["verdict"] == tests["subspace"]["verdict"] == "distinct"


def test_divlab_example():
    code, out = run("divlab", "--q", "2", "--r", "2")
    assert code == 0
    last = rows(out)[-1]
    assert (last["r"], last["count_cumulative"], last["bound_q2r"]) == ("2", "11", "16")


def test_json_mirrors_csv():
    argv = ["ers", "--q", "2", "--n", "8", "--m", "4", "--d", "1", "--seed", "3"]
    _, text_csv = run(*argv)
    _, text_json = run(*argv, "--format", "json")
    data = json.loads(text_json)
    assert [list(r) for r in data["rows"]] == [list(r) for r in rows(text_csv)]
    assert [{k: ("" if v is None else str(v)) for k, v in r.items()} for r in data["rows"]] == rows(text_csv)
    assert data["header"]["seed"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["pset", "--q", "2", "--n", "10", "--m", "3", "--nu", "2", "--d", "1", "--seed", "1"],
        ["witness", "--q", "2", "--n", "8", "--e", "51", "--d", "2", "--seed", "9"],
        ["etest", "--q", "3", "--n", "4", "--e", "5", "--d", "1", "--seed", "2"],
    ],
)
def test_byte_identical_reruns(argv, tmp_path):
    assert run(*argv) == run(*argv)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


@pytest.mark.parametrize(
    "argv, code",
    [
        (["field", "--q", "4", "--n", "2"], 2),
        (["field", "--q", "2"], 2),
        (["etest", "--q", "2", "--n", "4", "--e", "7", "--seed", "1"], 2),
        (["etest", "--q", "2", "--n", "4", "--e", "3", "--f", "1,2"], 2),
        (["etest", "--q", "2", "--n", "4", "--e", "3"], 2),
        (["ers", "--q", "2", "--n", "30", "--m", "30", "--d", "1", "--seed", "1", "--guard-bits", "10"], 3),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_ers_leaves_undefined_order_empty():
    code, out = run("ers", "--q", "2", "--n", "8", "--m", "3", "--f", "1,1", "--g", "0,1")
    assert code == 0
    table = rows(out)
    assert table[0]["E_order"] == "" and table[0]["sizeA"] == "0"
    assert all(255 % int(r["E_order"]) == 0 for r in table[1:])
    assert header(out)["coeffs"] == "F_q"
