import pytest

from torusq import build_root_datum, enumerate_weyl


@pytest.fixture(scope="session")
def rd():
    return build_root_datum


@pytest.fixture(scope="session")
def weyl():
    return lambda name: enumerate_weyl(build_root_datum(name))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod._line(i, *mod.RESULTS[i]))
