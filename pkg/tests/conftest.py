import pytest

CRITERIA = {
    1: "axiom suite over the zoo",
    2: "conjugation algebra",
    3: "omega boundedness under d, its conjugate and its symmetrization",
    4: "chi Lipschitz bound and hand values",
    5: "rho_from_chi contract",
    6: "characteristic-function quasi-metric contract",
    7: "negative witnesses and the Sorgenfrey pass",
    8: "interleaved-sequence local identity",
    9: "oracle equivalence on 100 random digraphs",
    10: "byte-identical reports",
}

_results: dict[int, bool] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    n = m.args[0]
    if rep.when == "call":
        _results[n] = _results.get(n, True) and rep.passed
    elif rep.failed:
        _results[n] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(CRITERIA):
        if n in _results:
            status = "PASS" if _results[n] else "FAIL"
            terminalreporter.write_line(f"criterion {n:2d}  {status}  {CRITERIA[n]}")
