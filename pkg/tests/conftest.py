import pytest

from permrel.presentation import build_presentation


@pytest.fixture(scope="session")
def alt():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_presentation(n, "alternating")
        return cache[n]

    return get


_ACCEPTANCE = []


def record_criterion(line):
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
