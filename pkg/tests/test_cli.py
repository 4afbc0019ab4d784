import contextlib
import io
import json

import pytest

from sumfree import cli


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run_cli(*argv)
    assert code == cli.EXIT_OK, err
    return json.loads(out)


def test_help_and_unknown_verb():
    code, out, _ = run_cli("--help")
    assert code == cli.EXIT_OK and "classify" in out
    code, _, err = run_cli("frobnicate")
    assert code == cli.EXIT_USAGE and "unknown verb" in err


def test_missing_argument_is_precondition():
    code, _, _ = run_cli("mu", "--n", "10")  # --r missing
    assert code == cli.EXIT_PRECONDITION


def test_classify_round_trip():
    doc = run_json("classify", "--set", "1,4,6,9,11,14,16,19",
                   "--n", "20", "--eta", "0.01")
    assert "ii" in doc["result"]["satisfied"]
    assert doc["manifest"]["verb"] == "classify"
    assert doc["manifest"]["result_digest"] == cli.result_digest(doc["result"])


def test_classify_set_file(tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("1\n3\n5\n")
    doc = run_json("classify", "--set-file", str(path),
                   "--n", "10", "--eta", "0.01")
    assert "i" in doc["result"]["satisfied"]


def test_classify_rejects_non_sum_free():
    code, _, err = run_cli("classify", "--set", "1,2", "--n", "10",
                           "--eta", "0.01")
    assert code == cli.EXIT_PRECONDITION and "error" in err


def test_mu_and_budget_exit():
    doc = run_json("mu", "--n", "10", "--r", "2")
    assert doc["result"]["value"] == 8
    code, out, err = run_cli("mu", "--n", "13", "--r", "3", "--budget", "5")
    assert code == cli.EXIT_BUDGET and "budget" in err
    assert json.loads(out)["result"]["status"] == "lower_bound"


def test_h_verb():
    doc = run_json("h", "--r", "2")
    assert doc["result"]["value"] == 4


def test_witness_verb():
    doc = run_json("witness", "--set", "1,2,3,4", "--r", "2")
    parts = doc["result"]["witness"]["parts"]
    assert sorted(sum(parts, [])) == [1, 2, 3, 4]
    doc = run_json("witness", "--set", "1,2,3,4,5", "--r", "2")
    assert doc["result"]["witness"] is None


def test_count_verbs_and_csv():
    doc = run_json("count", "--family", "sf1", "--n", "12", "--engine", "both")
    assert doc["result"]["exact_count"] == 369
    assert doc["result"]["engines_agree"] is True
    code, out, _ = run_cli("count", "--family", "sf2", "--n", "8",
                           "--format", "csv")
    assert code == cli.EXIT_OK
    header, row = out.strip().splitlines()
    assert header == "n,family,exact_count,ratio"
    assert row.startswith("8,sf2,246,")


def test_csv_refused_elsewhere():
    code, _, _ = run_cli("mu", "--n", "10", "--r", "1", "--format", "csv")
    assert code == cli.EXIT_PRECONDITION


def test_count_cap_is_precondition():
    code, _, err = run_cli("count", "--family", "sf1", "--n", "99")
    assert code == cli.EXIT_PRECONDITION and "capped" in err


def test_verify_verbs():
    doc = run_json("verify", "--lemma", "bootstrap", "--max", "8")
    assert doc["result"]["ok"] is True
    doc = run_json("verify", "--lemma", "summation", "--max", "4",
                   "--max-span", "5")
    assert doc["result"]["ok"] is True
    assert doc["result"]["notes"]["strict_failures_all_on_eps0_boundary"]


def test_search_and_example42():
    doc = run_json("search", "--max-size", "5", "--max-span", "10")
    assert doc["result"]["candidates"] == []
    doc = run_json("example42", "--x", "3", "--y", "12")
    assert doc["result"]["diff_size"] == 25
    assert doc["result"]["conclusion_i"] is False


def test_bound_verbs():
    doc = run_json("bound", "--name", "entropy", "--n", "20", "--k", "6",
                   "--alpha", "0.3")
    assert doc["result"]["satisfied"] is True
    doc = run_json("bound", "--name", "partitions", "--k", "30", "--l", "4")
    assert doc["result"]["satisfied"] is True
    doc = run_json("bound", "--name", "janson-graph", "--set", "1,2",
                   "--n", "25", "--brute")
    assert doc["result"]["janson"]["satisfied"] is True
    code, _, err = run_cli("bound", "--name", "entropy", "--n", "20")
    assert code == cli.EXIT_PRECONDITION and "needs" in err


def test_opt_verb():
    doc = run_json("opt", "--delta", "0")
    assert doc["result"]["max_value_per_ell"] == pytest.approx(-0.50564,
                                                               abs=1e-4)
    assert doc["result"]["gradient"]["partial_q"] > 0


def test_digest_stable_across_threads():
    digests = set()
    for threads in ("1", "4", "8"):
        doc = run_json("count", "--family", "sf1", "--n", "15",
                       "--threads", threads)
        digests.add(doc["manifest"]["result_digest"])
        assert doc["manifest"]["shard_count"] == int(threads)
    assert len(digests) == 1


def test_canonical_json_is_deterministic():
    a = cli.canonical_json({"b": 1, "a": [2, 3]})
    b = cli.canonical_json({"a": [2, 3], "b": 1})
    assert a == b == '{"a":[2,3],"b":1}'
    assert cli.result_digest({"x": 1}) == cli.result_digest({"x": 1})
