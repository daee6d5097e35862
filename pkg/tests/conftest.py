import pytest

from circpair.ferrero import build_phi
from circpair.field import PrimeField

# (p, g) with Phi = <g> circular; g is the smallest generator of its order
SMALL_EVEN = [(13, 5), (17, 4), (29, 12), (31, 6), (37, 11), (61, 11)]
SMALL_ODD = [(7, 2), (13, 3), (19, 7), (31, 2), (61, 9)]

# criterion number -> [title, logged_only, all passed so far]
ACCEPTANCE: dict[int, list] = {}


@pytest.fixture(scope="session")
def F61():
    return PrimeField(61)


@pytest.fixture(scope="session")
def phi11(F61):
    return build_phi(F61, 11)


@pytest.fixture(scope="session")
def phi9(F61):
    return build_phi(F61, 9)


@pytest.fixture(scope="session")
def phi13(F61):
    return build_phi(F61, 13)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            title, logged, passed = ACCEPTANCE[number]
            status = ("LOGGED" if logged else "PASS") if passed else "FAIL"
            terminalreporter.write_line(f"criterion {number:>2}: {status:<6} {title}")


@pytest.fixture(scope="session")
def scanned():
    """Every (p, k) record for 5 <= p <= 200, designs skipped; timed for acceptance 4."""
    import time

    from circpair.catalog import scan

    t0 = time.perf_counter()
    records, _ = scan(5, 200, designs=False)
    return records, time.perf_counter() - t0


@pytest.fixture(scope="session")
def even_suite(scanned):
    records, _ = scanned
    return [build_phi(PrimeField(r.p), r.g) for r in records if r.circular and r.even]


@pytest.fixture(scope="session")
def odd_suite(scanned):
    records, _ = scanned
    return [build_phi(PrimeField(r.p), r.g) for r in records if r.circular and not r.even]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    entry = ACCEPTANCE.setdefault(number, [title, marker.kwargs.get("logged", False), True])
    entry[2] = entry[2] and report.passed
