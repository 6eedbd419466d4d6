import pytest

from wleja.leja import generate_sequence
from wleja.potential import equilibrium_measure
from wleja.weights import FreudWeight


@pytest.fixture(scope="session")
def fw2():
    return FreudWeight(2.0)


@pytest.fixture(scope="session")
def seq200(fw2):
    return generate_sequence(fw2, 200)


@pytest.fixture(scope="session")
def eq2():
    return equilibrium_measure(2.0)


ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record a (passed, detail) line for the acceptance summary, keyed by criterion number."""
    results = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    def record(number, passed, detail):
        results[number] = (bool(passed), detail)
        assert passed, f"criterion {number}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        passed, detail = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")
