from fractions import Fraction

import pytest

from okounkov.lattice import bundled_model, load_model

P2_MINIMAL = {"rank": 1, "gram": [[1]], "curves": [], "nef_gens": [[1]], "eff_gens": [[1]]}

_criteria_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _criteria_results.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria_results:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_criteria_results):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {text}")


@pytest.fixture(scope="session")
def p2():
    return bundled_model("p2")


@pytest.fixture(scope="session")
def f1():
    return bundled_model("f1")


@pytest.fixture(scope="session")
def dp7():
    return bundled_model("dp7")


@pytest.fixture(scope="session")
def fe():
    cache = {}

    def get(e):
        if e not in cache:
            cache[e] = bundled_model("fe", e=e)
        return cache[e]

    return get


@pytest.fixture(scope="session")
def p2_minimal():
    return load_model(P2_MINIMAL)


def Q(*xs):
    return tuple(Fraction(x) for x in xs)
