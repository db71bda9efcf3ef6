import pytest

from towerbound.cli import main as cli_main

# Acceptance criteria: one test per entry in tests/test_acceptance.py, named
# test_c<NN>_*.  The summary hook below prints one PASS/FAIL line for each.
CRITERIA = {
    "c01": "example 1: the pinned primes are exactly the first 42 qualifying ones",
    "c02": "example 1: the pinned Kummer element equals the product of its primes",
    "c03": "example 2: pinned prime list and Kummer element both reproduce",
    "c04": "example 2: CLI reproduction exits 0 with the two catalogued warnings",
    "c05": "example 3: every pinned prime splits completely then stays inert",
    "c06": "example 3: six-factor product matches 43 up to a catalogued unit",
    "c07": "group and target validation accept/reject the documented cases",
    "c08": "bound identity: the ambiguous margin at layer n is target * p^n exactly",
    "c09": "degree profiles agree with the splitting law for all small cases",
    "c10": "irreducibility test agrees with exhaustive divisor search",
    "c11": "certificate columns reproduce the pinned per-layer values",
}


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(*argv: str):
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_c" not in nodeid:
                continue
            key = nodeid.split("::test_")[1].split("_")[0]
            outcomes[key] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    tw = terminalreporter
    tw.write_sep("=", "acceptance summary")
    for key in sorted(CRITERIA):
        status = outcomes.get(key, "NOT RUN")
        tw.write_line(f"  {key.upper()} {status:7s} {CRITERIA[key]}")
