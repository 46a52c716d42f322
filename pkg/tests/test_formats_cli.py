import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from hcsemi import Semigroup, fixture, monogenic
from hcsemi.cli import main
from hcsemi.enumeration import all_semigroups
from hcsemi.formats import ParseError, format_smg, parse_certificate, parse_smg

GOLDEN = Path(__file__).parent / "golden"
ORDER_3 = list(all_semigroups(3))


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def test_parse_with_comments_and_labels():
    S = parse_smg("smg 1\n# a comment\n\norder 2\nlabels e f\n0 1\n1 1\n")
    assert S.table == ((0, 1), (1, 1)) and S.labels == ("e", "f")


@pytest.mark.parametrize(
    "text",
    ["", "smg 2\norder 1\n0\n", "smg 1\n", "smg 1\norder x\n", "smg 1\norder 2\n0 0\n", "smg 1\norder 1\nq\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_smg(text)


def test_canonical_round_trip():
    text = (GOLDEN / "zigzag_order5.smg").read_text()
    assert format_smg(parse_smg(text)) == text
    for name in ("ex33_S", "ex36_etaclass"):
        S = fixture(name)
        assert parse_smg(format_smg(S)) == S


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ORDER_3))
def test_round_trip_property(S):
    assert parse_smg(format_smg(S)) == S


def test_certificate_parse_errors():
    with pytest.raises(ParseError):
        parse_certificate("zigzag value=1\n")
    with pytest.raises(ParseError):
        parse_certificate("zigzag value=1 m=1\nspine 1 2 3\nywings x\ntwings 1\nsubset 1\n")


def test_validate(tmp_path, capsys):
    ok = tmp_path / "ok.smg"
    ok.write_text("smg 1\norder 1\n0\n")
    assert run(["validate", str(ok)], capsys)[0] == 0
    bad = tmp_path / "bad.smg"
    bad.write_text("smg 1\norder 2\n1 1\n0 1\n")
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == 2 and "(0, 0, 0)" in err
    cut = tmp_path / "cut.smg"
    cut.write_text("smg 1\norder 2\n0 0\n")
    assert run(["validate", str(cut)], capsys)[0] == 3
    assert run(["validate", str(tmp_path / "missing.smg")], capsys)[0] == 3


def test_analyze_fixtures(capsys):
    code, out, _ = run(["analyze", "--fixture", "ex33_S"], capsys)
    r = kv(out)
    assert code == 0 and r["is_hc"] == "true" and r["green_coincide"] == "true" and r["eta_blocks"] == "3"
    r = kv(run(["analyze", "--fixture", "ex35_T"], capsys)[1])
    assert r["is_hc"] == "true" and r["order"] == "121"
    r = kv(run(["analyze", "--fixture", "ex36_etaclass"], capsys)[1])
    assert r["is_hc"] == "false" and r["hc_counterexample"] == "(a,t1) (a,t2)"


def test_analyze_report_is_frozen(capsys):
    out = run(["analyze", "--fixture", "ex33_S"], capsys)[1]
    assert out == (GOLDEN / "analyze_ex33_S.txt").read_text()


def test_analyze_json_matches_text(capsys):
    text = kv(run(["analyze", "--fixture", "ex33_S"], capsys)[1])
    data = json.loads(run(["analyze", "--fixture", "ex33_S", "--json"], capsys)[1])
    assert list(data) == list(text)
    assert data["eta_blocks"] == 3 and data["is_hc"] is True


def test_dominion_command(tmp_path, capsys):
    code, out, _ = run(["dominion", "--fixture", "ex33_S", "--subset", "3,4,5,6,7,8"], capsys)
    r = kv(out)
    assert code == 0 and r["is_closed"] == "true" and r["dominion"] == "3,4,5,6,7,8"
    r = kv(run(["dominion", "--fixture", "ex33_S", "--subset", ",".join(map(str, range(10)))], capsys)[1])
    assert r["is_dense"] == "true"
    assert run(["dominion", "--fixture", "ex33_S", "--subset", "0,3"], capsys)[0] == 2
    assert run(["dominion", "--fixture", "ex33_S", "--subset", "3,4,5,6,7,8", "--certify", "0"], capsys)[0] == 4
    r = kv(run(["dominion", "--fixture", "ex33_S", "--subset", "e", "--certify", "e"], capsys)[1])
    assert r["certify_status"] == "in_subset"


def test_certificate_round_trip_in_fresh_process(tmp_path, capsys):
    smg = GOLDEN / "zigzag_order5.smg"
    cert = tmp_path / "d4.cert"
    code, out, _ = run(["dominion", str(smg), "--subset", "0,1,2,3", "--certify", "4", "--cert-out", str(cert)], capsys)
    assert code == 0 and kv(out)["certify_status"] == "certified"
    assert cert.read_text() == (GOLDEN / "zigzag_order5_d4.cert").read_text()
    proc = subprocess.run(
        [sys.executable, "-m", "hcsemi", "verify-cert", str(smg), "--cert", str(cert)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "valid=true" in proc.stdout
    tampered = tmp_path / "bad.cert"
    tampered.write_text(cert.read_text().replace("spine 3 1 2", "spine 3 1 3"))
    assert run(["verify-cert", str(smg), "--cert", str(tampered)], capsys)[0] == 2


def test_enumerate(capsys):
    assert run(["enumerate", "--order", "3", "--count-only"], capsys)[1].strip() == "113"
    golden = json.loads((GOLDEN / "hc_counts.json").read_text())
    out = run(["enumerate", "--order", "3", "--filter", "hc", "--count-only"], capsys)[1]
    assert int(out) == golden["3"]
    out = run(["enumerate", "--order", "2"], capsys)[1].splitlines()
    assert out[-1] == "count=8" and len(out) == 9
    assert run(["enumerate", "--order", "6"], capsys)[0] == 6
    assert run(["enumerate", "--order", "4", "--budget", "10"], capsys)[0] == 6


def test_saturate(tmp_path, capsys):
    path = tmp_path / "m21.smg"
    path.write_text(format_smg(monogenic(2, 1)))
    code, out, _ = run(["saturate", str(path), "--extra", "1"], capsys)
    assert code == 0 and kv(out)["dense_extensions"] == "0"
    assert run(["saturate", str(path), "--extra", "3"], capsys)[0] == 6


def test_saturate_alarm(tmp_path, capsys):
    # the order-4 subsemigroup of the golden instance is dense in it
    U = Semigroup(((0, 0, 0, 0), (0, 0, 0, 1), (0, 1, 2, 0), (0, 0, 0, 3)))
    path = tmp_path / "u.smg"
    path.write_text(format_smg(U))
    code, out, _ = run(["saturate", str(path), "--extra", "1"], capsys)
    assert code == 5 and int(kv(out)["dense_extensions"]) > 0


def test_examples(capsys):
    code, out, _ = run(["examples"], capsys)
    assert code == 0
    assert out == (GOLDEN / "examples.txt").read_text()
    assert "((a,t1),(a,t2))" in out
    assert run(["examples", "--mutate"], capsys)[0] == 1
    data = json.loads(run(["examples", "--json"], capsys)[1])
    assert [d["claim"] for d in data] == [line.split()[1][:-1] for line in out.splitlines()]


def test_export(capsys):
    out = run(["export", "--fixture", "ex33_S"], capsys)[1]
    assert parse_smg(out) == fixture("ex33_S")
