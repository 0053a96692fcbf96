import csv
import io
import json

import pytest

from tunnelkit.cli import main
from tunnelkit.dyck import enumerate_paths
from tunnelkit.stats import StatProfile


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "uudd")
    assert code == 0
    fields = dict(line.split("=") for line in out.split())
    assert (fields["ct"], fields["cmt"], fields["hills"], fields["even_rises"]) == ("2", "2", "0", "1")


def test_stats_json_and_csv(capsys):
    code, out, _ = run(capsys, "stats", "ud", "--json")
    data = json.loads(out)
    assert code == 0 and (data["n"], data["hills"], data["returns"]) == (1, 1, 1)
    code, out, _ = run(capsys, "stats", "ud", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["word"] + StatProfile.csv_header() and rows[1][0] == "ud"


def test_stats_bad_word(capsys):
    code, _, err = run(capsys, "stats", "uddu")
    assert code != 0
    assert "NegativePrefix" in err and "position 3" in err
    code, _, err = run(capsys, "stats", "uxd")
    assert code == 2 and "BadSymbol" in err


def test_map(capsys):
    assert run(capsys, "map", "uudd")[1].strip() == "udud"
    assert run(capsys, "map", "udud", "--inverse")[1].strip() == "uudd"
    assert run(capsys, "map", "ud", "--r", "1")[1].strip() == "ud"
    code, _, err = run(capsys, "map", "ud", "--r", "2")
    assert code == 2 and "ROutOfRange" in err


def test_map_trace(capsys):
    code, out, _ = run(capsys, "map", "uudd", "--trace")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5 and lines[-1] == "udud"
    code, out, _ = run(capsys, "map", "udud", "--inverse", "--trace")
    assert "symbols: o o c c" in out and out.strip().endswith("uudd")


def test_corpus_dyck_csv(capsys, pytestconfig):
    code, out, _ = run(capsys, "corpus", "2", "dyck")
    lines = out.strip().splitlines()
    golden = (pytestconfig.rootpath / "tests" / "golden" / "dyck_corpus_header.csv").read_text().strip()
    assert code == 0 and lines[0] == golden and len(lines) == 3


def test_corpus_s132_json(capsys):
    code, out, _ = run(capsys, "corpus", "3", "s132", "--format", "json")
    records = json.loads(out)
    assert code == 0 and len(records) == 5
    assert {"perm": "123", "fp": 3, "exc": 0, "des": 0} in records


def test_corpus_s321_csv(capsys):
    code, out, _ = run(capsys, "corpus", "4", "s321")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["perm", "fp", "exc", "des"] and len(rows) == 15


def test_corpus_cap(capsys, monkeypatch):
    monkeypatch.setenv("TUNNELKIT_DYCK_CAP", "3")
    code, _, err = run(capsys, "corpus", "4", "dyck")
    assert code == 2 and "CapExceeded" in err
    code, out, _ = run(capsys, "corpus", "4", "dyck", "--cap-override")
    assert code == 0 and len(out.strip().splitlines()) == 15


def test_series(capsys):
    code, out, _ = run(capsys, "series", "catalan", "--order", "4")
    assert code == 0 and out.strip() == "1 + z + 2*z^2 + 5*z^3 + 14*z^4 + O(z^5)"
    code, out, _ = run(capsys, "series", "L", "--order", "2", "--json")
    assert json.loads(out)["order"] == 2


def test_series_default_order(capsys, monkeypatch):
    monkeypatch.setenv("TUNNELKIT_SERIES_ORDER", "3")
    code, out, _ = run(capsys, "series", "catalan")
    assert out.strip().endswith("O(z^4)")


def test_verify_tunnel_rises(capsys):
    code, out, _ = run(capsys, "verify", "tunnel-rises", "--max-n", "10", "--json")
    report = json.loads(out)
    assert code == 0 and report["failure_count"] == 0
    assert report["checks_run"] == sum(len(list(enumerate_paths(n))) for n in range(11))


def test_verify_alias(capsys):
    code, out, _ = run(capsys, "verify", "lemma1", "--max-n", "4", "--json")
    assert code == 0 and json.loads(out)["suite"] == "concat"


def test_verify_gf_L(capsys):
    code, out, _ = run(capsys, "verify", "gf-L", "--order", "6", "--json")
    assert code == 0 and json.loads(out)["failure_count"] == 0


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "unknown-name")
    assert code != 0 and "UnknownSuite" in err and "'unknown-name'" in err


def test_verify_deterministic(capsys):
    first = run(capsys, "verify", "kra", "--max-n", "5", "--json", "--no-elapsed")[1]
    second = run(capsys, "verify", "kra", "--max-n", "5", "--json", "--no-elapsed")[1]
    assert first == second and "elapsed" not in first


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["series", "nope"])
    assert exc.value.code == 2
