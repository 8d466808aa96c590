import pytest
from hypothesis import settings

# exact arithmetic has uneven running times; fixed seeds keep runs reproducible
settings.register_profile("default", deadline=None, derandomize=True, print_blob=True)
settings.load_profile("default")


ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash[ACCEPTANCE]

    def check(name, ok, detail):
        line = f"{name} {'PASS' if ok else 'FAIL'}: {detail}"
        lines.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
