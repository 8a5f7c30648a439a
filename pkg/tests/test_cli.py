import csv
import io
import json

import pytest

from dc2spectrum.asymptotic import corrected_cubic_autocorrelation
from dc2spectrum.cli import EXIT_DOMAIN, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, RunConfig, main, run
from dc2spectrum.clt_model import corrected_clt_autocorrelation
from dc2spectrum.exact_oracle import MEMORY_BUDGET_ENV


def invoke(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_autocorr_csv_shape(capsys):
    status, out, _ = invoke(capsys, "autocorr", "--n", "32", "--method", "clt-corrected", "--format", "csv")
    assert status == EXIT_OK
    table = rows(out)
    assert table[0] == ["i", "rho"]
    assert [int(r[0]) for r in table[1:]] == list(range(1, 32))
    # lossless round trip
    expected = corrected_clt_autocorrelation(32).values
    assert tuple(float(r[1]) for r in table[1:]) == expected


def test_autocorr_reference_diff(capsys):
    status, out, _ = invoke(capsys, "autocorr", "--n", "64", "--method", "cubic-corrected", "--reference", "exact")
    assert status == EXIT_OK
    table = rows(out)
    assert table[0] == ["i_over_n", "abs_diff"]
    assert len(table) == 64
    assert float(table[1][0]) == 1 / 64


def test_spectrum_and_db_ratio(capsys):
    status, out, _ = invoke(capsys, "spectrum", "--n", "32", "--method", "exact", "--grid-points", "64")
    assert status == EXIT_OK
    table = rows(out)
    assert table[0] == ["omega", "H", "negative"] and len(table) == 65
    status, out, _ = invoke(
        capsys, "spectrum", "--n", "32", "--method", "cubic-corrected", "--reference", "exact", "--format", "json"
    )
    doc = json.loads(out)
    assert set(doc) == {"meta", "data"}
    assert doc["meta"]["reference"] == "exact"
    assert len(doc["data"]["db"]) == 4096
    status, out, _ = invoke(capsys, "spectrum", "--n1", "2", "--method", "dc1", "--grid-points", "4")
    assert float(rows(out)[-1][1]) == 2.0


def test_match(capsys):
    status, out, _ = invoke(capsys, "match", "--rate", "0.94")
    assert status == EXIT_OK
    assert rows(out) == [["rate", "n1", "n"], ["0.94", "54", "248"]]


def test_table1(capsys):
    status, out, _ = invoke(capsys, "table1")
    table = rows(out)
    assert table[0] == ["n", "chi_prime", "chi_prime_asymptotic", "chi_hat"]
    chi = {int(r[0]): float(r[1]) for r in table[1:]}
    for n, v in {32: 1629.48, 64: 24723.13, 128: 384339.75}.items():
        assert abs(chi[n] - v) <= 0.01
    assert abs(chi[256] - 6057889.79) <= 0.5
    hat = {int(r[0]): r[3] for r in table[1:]}
    assert abs(float(hat[64]) - 24250.79) <= 0.01
    assert hat[256] == ""


def test_table2_and_intersect(capsys):
    status, out, _ = invoke(capsys, "table2", "--format", "json")
    data = json.loads(out)["data"]
    assert data["n1"] == [28, 38, 54, 90, 210]
    assert data["n"] == [132, 172, 248, 408, 932]
    assert all(-23 <= v <= -17 for v in data["level_db"])
    status, out, _ = invoke(capsys, "intersect", "--rate", "0.90")
    assert rows(out)[1][:2] == ["28", "132"]
    status, out, _ = invoke(capsys, "intersect", "--n1", "54", "--n", "248")
    assert float(rows(out)[1][3]) == pytest.approx(data["level_db"][2])


def test_other_commands(capsys):
    status, out, _ = invoke(capsys, "count", "--n", "32")
    assert rows(out)[1][:2] == ["32", "8908546"]
    status, out, _ = invoke(capsys, "count", "--order", "first", "--n1", "28")
    assert rows(out)[1][1] == "40116600"
    status, out, _ = invoke(capsys, "checks", "--n", "128", "--method", "clt")
    r = rows(out)[1]
    assert abs(float(r[2]) + 0.0156) <= 5e-5 and abs(float(r[3]) + 22.21) <= 5e-3
    status, out, _ = invoke(capsys, "rates", "--n", "132", "--n1", "28")
    assert [x[0] for x in rows(out)[1:]] == ["first", "second"]
    status, out, _ = invoke(capsys, "lfsw", "--n", "4", "--method", "exact")
    assert float(rows(out)[1][2]) == pytest.approx(1.0)
    status, out, _ = invoke(capsys, "lfsw", "--n1", "54", "--method", "dc1")
    assert float(rows(out)[1][2]) == 247.5


def test_exit_codes(capsys, monkeypatch):
    assert invoke(capsys, "autocorr", "--n", "30", "--method", "exact")[0] == EXIT_DOMAIN
    assert invoke(capsys, "autocorr", "--n", "256", "--method", "exact")[0] == EXIT_RESOURCE
    assert invoke(capsys, "nonsense")[0] == EXIT_USAGE
    assert invoke(capsys, "autocorr", "--n", "32", "--method", "bogus")[0] == EXIT_USAGE
    assert invoke(capsys, "autocorr", "--method", "clt")[0] == EXIT_USAGE
    assert invoke(capsys, "checks", "--n", "8", "--method", "dc1")[0] == EXIT_USAGE
    assert invoke(capsys, "match", "--rate", "1.2")[0] == EXIT_DOMAIN
    assert invoke(capsys, "rates")[0] == EXIT_USAGE
    monkeypatch.setenv(MEMORY_BUDGET_ENV, "100")
    status, _, err = invoke(capsys, "count", "--n", "64")
    assert status == EXIT_RESOURCE and "resource guard" in err


def test_run_config_direct():
    status, text = run(RunConfig(command="autocorr", n=16, method="cubic-corrected"))
    assert status == EXIT_OK
    assert tuple(float(r[1]) for r in rows(text)[1:]) == corrected_cubic_autocorrelation(16).values
    assert run(RunConfig(command="autocorr", n=16, format="xml"))[0] == EXIT_USAGE
    assert run(RunConfig(command="spectrum", n=16, grid_points=0))[0] == EXIT_USAGE


def test_deterministic_output_and_file(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert main(["spectrum", "--n", "64", "--method", "clt-corrected", "--out", str(path)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""
    table = rows(a.read_text())
    assert len(table) == 4097
