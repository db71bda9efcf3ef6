import json

from towerbound.fixtures import get_fixture

SIX_FACTORS = get_fixture("example3").factor_strings


def test_reproduce_examples_exit_zero(run_cli):
    for fid in ("example1", "example2", "example3"):
        code, out, err = run_cli("reproduce", fid, "--n-max", "1")
        assert code == 0, (fid, err)
        assert "result: pass-with-warnings" in out


def test_reproduce_json_is_deterministic(run_cli):
    code1, out1, _ = run_cli("reproduce", "example3", "--json", "--n-max", "2")
    code2, out2, _ = run_cli("reproduce", "example3", "--json", "--n-max", "2")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == 1
    assert doc["kind"] == "reproduction"
    assert doc["result"] == "pass-with-warnings"


def test_reproduce_all(run_cli):
    code, out, _ = run_cli("reproduce", "all", "--json", "--n-max", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "reproduction-batch"
    assert [r["fixture"] for r in doc["runs"]] == [
        "example1", "example2", "example3",
    ]


def test_reproduce_out_writes_file(run_cli, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        "reproduce", "example1", "--json", "--n-max", "1", "--out", str(target)
    )
    assert code == 0
    assert "wrote" in out
    doc = json.loads(target.read_text())
    assert doc["fixture"] == "example1"


def test_verify_factorization_trivial(run_cli):
    code, out, _ = run_cli(
        "verify-factorization", "--conductor", "3", "--target", "7",
        "--factor", "7",
    )
    assert code == 0
    assert "status: exact" in out


def test_verify_factorization_six_factors(run_cli):
    args = ["verify-factorization", "--conductor", "7", "--target", "43"]
    for f in SIX_FACTORS:
        args += ["--factor", f]
    code, out, _ = run_cli(*args)
    assert code == 0
    assert "status: unit" in out
    assert "FACTOR-UNIT-DISCREPANCY" in out


def test_verify_factorization_mismatch_exits_1(run_cli):
    code, out, _ = run_cli(
        "verify-factorization", "--conductor", "3", "--target", "7",
        "--factor", "2",
    )
    assert code == 1
    assert "status: mismatch" in out


def test_verify_factorization_parse_error_exits_2(run_cli):
    code, _, err = run_cli(
        "verify-factorization", "--conductor", "3", "--target", "7",
        "--factor", "zeta5 + 1",
    )
    assert code == 2
    assert "does not match" in err


def test_split_command(run_cli):
    code, out, _ = run_cli("split", "43", "7", "--json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["e"], doc["f"], doc["g"]) == (1, 1, 6)
    assert doc["classification"] == "totally split"

    code, out, _ = run_cli("split", "2", "9")
    assert code == 0 and "inert" in out

    # a prime dividing the conductor ramifies: reported, but exit 1
    code, out, _ = run_cli("split", "3", "9")
    assert code == 1 and "ramified" in out

    code, _, err = run_cli("split", "6", "9")
    assert code == 2


def test_inert_primes_command(run_cli):
    code, out, _ = run_cli("inert-primes", "3", "--count", "5", "--exclude", "3")
    assert code == 0
    assert "2, 5, 11, 17, 23" in out

    # --exclude removes otherwise-qualifying primes from the stream
    code, out, _ = run_cli(
        "inert-primes", "3", "--count", "3", "--exclude", "5", "--exclude", "11"
    )
    assert code == 0
    assert "2, 17, 23" in out

    # (Z/8)* is not cyclic, so no prime is ever inert; bounded search fails
    code, out, _ = run_cli(
        "inert-primes", "8", "--count", "1", "--ceiling", "50000", "--json"
    )
    assert code == 1


def test_certificate_command_json(run_cli):
    code, out, _ = run_cli("certificate", "example3", "--json", "--n-max", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "certificate"
    rows = doc["rows"]
    assert [r["class_rank_bound"] for r in rows] == [6, 42, 294]
    assert [r["fine_selmer_claimed"] for r in rows] == [6, 18, 54]


def test_construct_cyclotomic(run_cli):
    code, out, _ = run_cli(
        "construct", "--ell", "5", "--p", "3", "--rank-target", "2",
        "--dimension", "1", "--conductor", "3", "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "construction"
    assert doc["plan"]["ramified_target"] == 42
    assert len(doc["plan"]["selected_primes"]) == 42
    assert doc["certificate"]["rows"][0]["class_rank_bound"] == 2


def test_construct_validation_failure_exits_1(run_cli):
    code, _, err = run_cli(
        "construct", "--ell", "7", "--p", "3", "--rank-target", "2",
        "--dimension", "1", "--conductor", "5",
    )
    assert code == 1
    assert "validation failed" in err


def test_construct_bundled_cubic(run_cli):
    code, out, _ = run_cli(
        "construct", "--ell", "3", "--p", "7", "--rank-target", "6",
        "--dimension", "3", "--family", "nilpotent-class-2",
        "--twist-exponent", "1", "--base", "bundled-cubic", "--json",
        "--n-max", "1",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["plan"]["ramified_target"] == 60
    # derived ascending-minimal selection, not the pinned list
    assert doc["plan"]["selected_primes"][:3] == [29, 43, 71]


def test_usage_error_exits_2(run_cli):
    code, _, _ = run_cli("reproduce", "example9")
    assert code == 2
    code, _, _ = run_cli()
    assert code == 2
