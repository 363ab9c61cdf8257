import pytest

from qcadvantage.calibration import load_calibration
from qcadvantage.hamio import bundled_corpus

# Two orbitals, four distinct integrals, written by hand.
TWO_ORBITAL_FCIDUMP = """\
 &FCI NORB=2,NELEC=2,MS2=0,
  ORBSYM=1,1,
  ISYM=1,
 &END
  0.5   1 1 1 1
  0.25  2 1 2 1
 -1.25  1 1 0 0
 -0.5   2 2 0 0
  0.75  0 0 0 0
"""

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def cal():
    return load_calibration()


@pytest.fixture(scope="session")
def corpus():
    return bundled_corpus()


@pytest.fixture
def two_orbital_text():
    return TWO_ORBITAL_FCIDUMP


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
