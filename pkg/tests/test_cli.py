import json

import pytest

from kalmanres.bott import GrassmannianContext
from kalmanres.cli import MISMATCH, OK, REFUSED, USAGE, main
from kalmanres.geometric import BettiTable, resolution_terms


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestExitCodes:
    def test_missing_subcommand_is_usage(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == USAGE

    def test_missing_flag_is_usage(self):
        with pytest.raises(SystemExit) as exc:
            main(["betti", "--s", "1", "--d", "2"])
        assert exc.value.code == USAGE

    def test_unknown_verify_id_is_usage(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "bogus"])
        assert exc.value.code == USAGE

    def test_invalid_ranges_are_usage(self, capsys):
        assert main(["betti", "--s", "3", "--d", "2", "--n", "5"]) == USAGE
        assert "error:" in capsys.readouterr().err

    def test_budget_refusal(self, capsys):
        code = main(["hf", "--s", "1", "--d", "3", "--n", "5", "--kmax", "5"])
        assert code == REFUSED
        err = capsys.readouterr().err
        assert "refused:" in err and "118755" in err


class TestBetti:
    def test_json_round_trips(self, capsys):
        code, payload = run_json(capsys, ["betti", "--s", "1", "--d", "2", "--n", "5"])
        assert code == OK
        assert payload["status"] == "ok"
        table = BettiTable.from_json_obj(payload)
        assert table == resolution_terms(GrassmannianContext(1, 2, 5))
        assert payload["proj_dim"] == table.proj_dim()
        assert payload["regularity"] == table.regularity()

    def test_human_output_mentions_invariants(self, capsys):
        assert main(["betti", "--s", "1", "--d", "2", "--n", "4"]) == OK
        out = capsys.readouterr().out
        assert "proj_dim" in out and "regularity" in out


class TestCohomology:
    def test_group_payload(self, capsys):
        code, payload = run_json(
            capsys, ["cohomology", "--s", "2", "--d", "3", "--n", "8", "--q", "1"]
        )
        assert code == OK
        assert payload["groups"] == {
            "1": {
                "rank": 1,
                "entries": [{"lambdaL": [], "muW": [], "mult": 1, "rank": 1}],
            }
        }

    def test_human_lines(self, capsys):
        assert main(["cohomology", "--s", "2", "--d", "3", "--n", "8", "--q", "2"]) == OK
        out = capsys.readouterr().out
        assert "H^1 total rank = 45" in out
        assert "H^2 total rank = 1" in out


class TestHilbert:
    def test_routes_agree_and_numerator(self, capsys):
        code, payload = run_json(capsys, ["hilbert", "--s", "1", "--d", "2", "--n", "5"])
        assert code == OK
        assert payload["routes_agree"] is True
        assert payload["status"] == "ok"
        assert payload["numerator"] == [1, 1, -9, 11, -4]
        assert payload["denominator_exponent"] == 25

    def test_human_shows_series(self, capsys):
        assert main(["hilbert", "--s", "2", "--d", "2", "--n", "4"]) == OK
        out = capsys.readouterr().out
        assert "(1-t)^16" in out and "agreement: True" in out


class TestConjecture:
    def test_zero_residual_d2(self, capsys):
        code, payload = run_json(capsys, ["conjecture", "--d", "2", "--n", "5"])
        assert code == OK
        assert payload["status"] == "ok"
        assert payload["residual_numerator"] == []

    def test_zero_residual_d3(self, capsys):
        code, payload = run_json(capsys, ["conjecture", "--d", "3", "--n", "6"])
        assert code == OK
        assert payload["residual_numerator"] == []

    def test_prediction_with_telescope_d4(self, capsys):
        code, payload = run_json(capsys, ["conjecture", "--d", "4", "--n", "5"])
        assert code == OK
        assert "residual_numerator" not in payload
        assert payload["telescope_ok"] is True

    def test_prediction_only_d4_large_n(self, capsys):
        code, payload = run_json(capsys, ["conjecture", "--d", "4", "--n", "6"])
        assert code == OK
        assert "residual_numerator" not in payload
        assert "telescope_ok" not in payload
        assert payload["prediction_numerator"][0] == 1


class TestKalmanSampling:
    def test_kalman_test_small(self, capsys):
        code, payload = run_json(
            capsys,
            ["kalman-test", "--s", "1", "--d", "2", "--n", "4", "--trials", "25"],
        )
        assert code == OK
        assert payload["member_sound"] == 25
        assert payload["generic_nonvanishing"] >= 25 * 0.99

    def test_kalman_test_deterministic(self, capsys):
        argv = ["kalman-test", "--s", "2", "--d", "3", "--n", "5", "--trials", "10"]
        assert main(argv) == OK
        first = capsys.readouterr().out
        assert main(argv) == OK
        assert capsys.readouterr().out == first

    def test_codim(self, capsys):
        code, payload = run_json(
            capsys, ["codim", "--s", "1", "--d", "2", "--n", "4", "--seed", "5"]
        )
        assert code == OK
        assert payload["jacobian_rank"] == payload["expected"] == 2

    def test_hf(self, capsys):
        code, payload = run_json(
            capsys, ["hf", "--s", "1", "--d", "2", "--n", "4", "--kmax", "2"]
        )
        assert code == OK
        assert payload["hilbert_function"] == [1, 16, 135]


class TestVerify:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "prop-2-2", "--d", "2", "--n", "5"],
            ["verify", "prop-2-4", "--n", "5"],
            ["verify", "thm-3-3", "--n", "5"],
            ["verify", "thm-3-5", "--n", "6"],
            ["verify", "prop-sdm1", "--d", "3"],
            ["verify", "prop-ndp1"],
            ["verify", "inductive-d2", "--n", "5"],
            ["verify", "inductive-d3", "--n", "5"],
        ],
    )
    def test_narrowed_golden_checks(self, capsys, argv):
        code, payload = run_json(capsys, argv)
        assert code == OK
        assert payload["status"] == "ok"
        assert payload["cases"] and all(c["ok"] for c in payload["cases"])

    def test_m2_output_full(self, capsys):
        code, payload = run_json(capsys, ["verify", "m2-output"])
        assert code == OK
        got = {c["case"]: c for c in payload["cases"]}
        assert got["q=1"]["got"] == [1, 0]
        assert got["q=4"]["got"] == [310, 145]
        assert got["q=5"]["got"] == 705

    def test_human_verdict_line(self, capsys):
        assert main(["verify", "thm-3-3", "--n", "4"]) == OK
        out = capsys.readouterr().out
        assert "verify thm-3-3: OK" in out
