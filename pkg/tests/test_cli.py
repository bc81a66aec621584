import io
import json
import subprocess
import sys

import pytest

from tcrational.cli import run
from tcrational.errors import InputError
from tcrational.reports import cohomology_to_dict, parse_cohomology_input


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


MINIMAL = {"r": 2, "k": 2, "power_order": {"kind": "infinite", "q_factors": []}}
CASE_B = {
    "r": 2, "k": 3,
    "degrees": [{"free_rank": 1}, {"free_rank": 1}, {"free_rank": 0, "torsion": [[5, 1]]}],
    "power_order": {"kind": "finite", "l": 2, "l_q_factors": []},
}


@pytest.fixture
def write_json(tmp_path):
    def _write(obj, name="in.json"):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return _write


class TestParsing:
    def test_minimal(self):
        data = parse_cohomology_input(json.dumps(MINIMAL).encode())
        assert data.k == 2 and data.is_infinite

    def test_l_not_below_k(self):
        bad = dict(CASE_B, power_order={"kind": "finite", "l": 3, "l_q_factors": []})
        with pytest.raises(InputError, match="l must satisfy 2 <= l <= k-1"):
            parse_cohomology_input(json.dumps(bad))

    def test_composite_prime(self):
        bad = dict(MINIMAL, power_order={"kind": "infinite", "q_factors": [[9, 1]]})
        with pytest.raises(InputError, match="9 is not prime"):
            parse_cohomology_input(json.dumps(bad))

    def test_collects_all_errors(self):
        bad = {"r": 3, "k": 1, "power_order": {"kind": "weird"}, "extra": 1}
        with pytest.raises(InputError) as ei:
            parse_cohomology_input(json.dumps(bad))
        assert len(ei.value.errors) == 4

    def test_rank_at_r(self):
        bad = dict(MINIMAL, degrees=[{"free_rank": 2}, {"free_rank": 1}])
        with pytest.raises(InputError, match="free rank in degree r"):
            parse_cohomology_input(json.dumps(bad))

    def test_malformed(self):
        with pytest.raises(InputError, match="malformed JSON"):
            parse_cohomology_input(b"{not json")
        with pytest.raises(InputError, match="UTF-8"):
            parse_cohomology_input(b"\xff\xfe")

    def test_round_trip(self):
        data = parse_cohomology_input(json.dumps(CASE_B))
        assert parse_cohomology_input(json.dumps(cohomology_to_dict(data))) == data


class TestCommands:
    def test_lambda_table(self):
        rows = call_json("table1", "--max", "40")["result"]["rows"]
        assert len(rows) == 20
        assert rows[4] == {"k": 10, "primes": [2, 3, 7, 11, 13]}

    def test_lambda_table_alias(self):
        assert call_json("lambda-table", "--max", "6")["result"]["rows"][-1]["primes"] == [2, 3, 5, 7]

    def test_tcgen(self):
        code, out, _ = call("tcgen", "--k", "2", "--expand", "4")
        assert code == 0
        assert "P(x) = 4x - 2x^2" in out and "(0, 4, 6, 8)" in out

    def test_tcgen_values(self):
        res = call_json("tcgen", "--values", "3,6,8,10", "--expand", "6")["result"]
        assert res["series"] == [0, 3, 6, 8, 10, 12] and res["series_matches"]

    def test_tcgen_needs_input(self):
        assert call("tcgen")[0] == 1

    def test_lambda_odd(self):
        res = call_json("lambda", "--k", "3")["result"]
        assert res["value"] == 0 and res["note"] == "odd k"

    def test_lambda_even(self):
        res = call_json("lambda", "--k", "4", "--show-expanded-form")["result"]
        assert res["value"] == 90 and res["prime_factors"] == [[2, 1], [3, 2], [5, 1]]
        assert res["expanded_display_value"] == 522 and not res["expanded_display_agrees"]

    def test_zcl_witness(self):
        res = call_json("zcl-witness", "--n", "3", "--k", "2", "--char", "5")["result"]
        assert res["product_nonzero"] and res["witness_length"] == 6
        assert res["sandwich"]["tc_pinned"] == 6

    def test_zcl_witness_failure(self):
        res = call_json("zcl-witness", "--n", "3", "--k", "2", "--char", "2")["result"]
        assert not res["product_nonzero"] and res["sandwich"]["tc_pinned"] is None

    def test_zcl_exhaustive(self):
        res = call_json("zcl-exhaustive", "--n", "2", "--k", "2", "--max-len", "5")["result"]
        assert res["zcl_lower_bound"] == 4

    def test_zcl_exhaustive_cap(self):
        code, _, err = call("zcl-exhaustive", "--n", "4", "--k", "4")
        assert code == 1 and json.loads(err)["error"]["type"] == "ResourceError"

    def test_verify_identities(self):
        code, out, _ = call("verify-lemma2", "--max-n", "4", "--max-k", "3", "--format", "json")
        res = json.loads(out)["result"]
        # the literal mu identity fails, so the report and exit code say so
        assert code == 1 and not res["all_passed"]
        assert {c["identity"] for c in res["checks"]} == {"xi", "mu*(A1-An)", "mu*(A1-An)|reduced", "recursion"}

    def test_char_sets(self, write_json):
        res = call_json("char-sets", "--input", write_json(CASE_B))["result"]
        assert res["case"] == "(ii)" and res["admissible"]["excluded"] == [5]
        assert res["selected_characteristic"] == 7

    def test_char_sets_bad_input(self, write_json):
        bad = dict(MINIMAL, power_order={"kind": "infinite", "q_factors": [[9, 1]]})
        code, out, err = call("char-sets", "--input", write_json(bad))
        assert code == 1 and out == ""
        assert "9 is not prime" in json.loads(err)["error"]["messages"][0]

    def test_missing_file(self):
        assert call("char-sets", "--input", "/nonexistent/x.json")[0] == 1

    def test_cw_build_and_check(self, write_json, tmp_path):
        code, out, _ = call("cw-build", "--input", write_json(CASE_B), "--format", "json")
        assert code == 0
        path = tmp_path / "cells.json"
        path.write_text(out)
        res = call_json("cw-check", "--structure", str(path), "--char", "5")["result"]
        assert res["dims"] == [1, 0, 1, 0, 1, 1, 1] and not res["truncated_polynomial"]

    def test_cw_build_low(self, write_json):
        res = call_json("cw-build", "--input", write_json(CASE_B), "--relators", "low")["result"]
        assert res["case"] == "(b)" and res["cells"][-1]["dimension"] == 6

    def test_exclusions_command(self):
        rows = call_json("table2", "--r", "6", "--k-list", "4,5,16,18,20,22")["result"]["rows"]
        assert rows[-1] == {"k": 22, "excluded": [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]}

    def test_text_outputs(self, write_json):
        for argv in (["table1"], ["table2"], ["lambda", "--k", "6"], ["zcl-witness", "--n", "2", "--k", "2"],
                     ["char-sets", "--input", write_json(MINIMAL)], ["cw-build", "--input", write_json(MINIMAL)]):
            code, out, _ = call(*argv)
            assert code == 0 and out.strip()


class TestExitCodes:
    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_bad_flag_value(self, capsys):
        assert run(["table2", "--k-list", "a,b"]) == 2

    def test_missing_required(self, capsys):
        assert run(["zcl-witness", "--n", "3"]) == 2

    def test_domain_error(self):
        code, _, err = call("zcl-witness", "--n", "3", "--k", "2", "--r", "3")
        assert code == 1 and "odd generator degree" in err


def test_deterministic_output(write_json):
    path = write_json(CASE_B)
    for argv in (["table1"], ["char-sets", "--input", path], ["zcl-witness", "--n", "3", "--k", "3"]):
        first = call(*argv, "--format", "json")[1]
        assert first == call(*argv, "--format", "json")[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tcrational", "lambda", "--k", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "lambda_(3,2) = -6" in proc.stdout
