import csv
import io
import json
import math

import pytest

from hhcert.cli import EXIT_BUDGET, EXIT_CONFIG, EXIT_FAILED, EXIT_OK, dump_json, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def same_value(json_value, csv_text):
    if json_value is None:
        return csv_text == ""
    if isinstance(json_value, bool):
        return csv_text == ("true" if json_value else "false")
    if isinstance(json_value, float):
        return float(csv_text) == json_value
    return str(json_value) == csv_text


def test_bounds_t21_example():
    code, out, _ = call("bounds", "--fn", "pow:2", "--a", "0", "--b", "1", "--x", "0.5",
                        "--theorem", "t21", "--no-timestamp")
    assert code == EXIT_OK
    rep = json.loads(out)["report"]
    assert rep["lhs"] == pytest.approx(1 / 6, abs=1e-15)
    assert rep["rhs"] == 0.25
    assert rep["theorem_id"] == "T21" and rep["admissible"] is True


def test_quad_example(tmp_path):
    nodes_file = tmp_path / "nodes.txt"
    code, out, _ = call("quad", "--fn", "sqrt_cube", "--a", "0", "--b", "1", "--eps", "0.005",
                        "--no-timestamp", "--partition-out", str(nodes_file))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["status"] == "ok" and doc["cert_total"] <= 0.005
    assert abs(doc["value"] - 4 / 15) <= doc["cert_total"]
    assert len(doc["panels"]) == doc["nodes"] - 1
    assert len(nodes_file.read_text().split()) == doc["nodes"]


def test_quad_budget_exit_code():
    code, out, _ = call("quad", "--fn", "exp_fn", "--eps", "1e-8", "--max-nodes", "16",
                        "--no-timestamp")
    assert code == EXIT_BUDGET
    doc = json.loads(out)
    assert doc["status"] == "budget_exceeded" and doc["nodes"] == 16


def test_verify_csv_all_slack_ok():
    code, out, _ = call("verify", "--output", "csv")
    assert code == EXIT_OK
    rows = parse_csv(out)
    assert rows and all(float(r["slack"]) >= -1e-9 for r in rows if r["admissible"] == "true")
    assert list(rows[0]) == ["theorem_id", "fn", "a", "b", "x", "p", "q", "lhs", "rhs",
                             "relaxed_rhs", "slack", "hypothesis_verdict", "admissible"]


def test_verify_deterministic_and_seed_independent():
    first = call("verify", "--fn", "recip", "--no-timestamp", "--seed", "7")[1]
    again = call("verify", "--fn", "recip", "--no-timestamp", "--seed", "7")[1]
    other = call("verify", "--fn", "recip", "--no-timestamp", "--seed", "8")[1]
    assert first == again
    strip = lambda text: {k: v for k, v in json.loads(text).items() if k != "seed"}
    assert strip(first) == strip(other)


def test_timestamp_only_when_requested():
    with_ts = json.loads(call("bounds", "--fn", "exp_fn", "--theorem", "c21")[1])
    without = json.loads(call("bounds", "--fn", "exp_fn", "--theorem", "c21", "--no-timestamp")[1])
    assert "generated_at" in with_ts and "generated_at" not in without
    del with_ts["generated_at"]
    assert with_ts == without


@pytest.mark.parametrize("argv, key", [
    (("verify", "--fn", "sqrt_cube"), "records"),
    (("means", "--a", "1", "--b", "2", "--n", "3"), "reports"),
    (("identity", "--fn", "neg_log"), "residuals"),
    (("quad", "--fn", "pow:2", "--eps", "0.01"), "panels"),
])
def test_csv_and_json_agree(argv, key):
    doc = json.loads(call(*argv, "--no-timestamp")[1])
    rows = parse_csv(call(*argv, "--output", "csv")[1])
    records = doc[key]
    assert len(rows) == len(records)
    for rec, row in zip(records, rows):
        assert set(rec) == set(row)
        assert all(same_value(rec[k], row[k]) for k in rec)


def test_means_reports():
    code, out, _ = call("means", "--a", "1", "--b", "2", "--no-timestamp")
    assert code == EXIT_OK
    reps = {r["theorem_id"]: r for r in json.loads(out)["reports"]}
    assert set(reps) == {"P31a", "P31b", "P32a", "P32b"}
    assert reps["P31b"]["rhs"] == 0.75 and reps["P32b"]["rhs"] == 0.15625


def test_identity_single_x():
    code, out, _ = call("identity", "--fn", "x_log_x", "--x", "1.25", "--no-timestamp")
    assert code == EXIT_OK
    rows = json.loads(out)["residuals"]
    assert len(rows) == 1 and rows[0]["residual"] < 1e-8


@pytest.mark.parametrize("argv", [
    ("bounds", "--fn", "nope", "--theorem", "t21", "--x", "0.5"),
    ("bounds", "--fn", "pow:2", "--theorem", "t21"),
    ("bounds", "--fn", "pow:2", "--theorem", "c23"),
    ("bounds", "--fn", "recip", "--a", "-1", "--b", "1", "--theorem", "c21"),
    ("bounds", "--fn", "pow:2", "--a", "0", "--theorem", "c21"),
    ("bounds", "--fn", "pow:2", "--theorem", "t22", "--x", "0.5", "--p", "1"),
    ("quad", "--fn", "pow:2"),
    ("means", "--a", "1"),
    ("verify", "--output", "xml"),
    ("frobnicate",),
])
def test_config_errors_exit_2(argv):
    assert call(*argv)[0] == EXIT_CONFIG


def test_inadmissible_bound_exits_1():
    # |cos| on [0, 3] fails every shape test, so no claim is made
    code, out, _ = call("bounds", "--fn", "sin", "--theorem", "c21", "--no-timestamp")
    assert code == EXIT_FAILED
    assert json.loads(out)["report"]["admissible"] is False
    assert call("quad", "--fn", "sin", "--eps", "0.1")[0] == EXIT_FAILED


def test_dump_json_floats_round_trip():
    values = [0.1, 1 / 3, 2.0 ** -60, 1e300, -0.0]
    text = dump_json({"v": values, "bad": math.inf, "flag": True, "none": None})
    back = json.loads(text)
    assert back["v"] == values and back["bad"] is None
    assert back["flag"] is True and back["none"] is None
