import pytest

from acceptance_log import RESULTS
from cswhit.rootdata import fixture

FIXTURE_KEYS = ["SL2", "PGL2", "A2adj", "B2", "C2", "G2"]


@pytest.fixture(params=FIXTURE_KEYS)
def rd(request):
    return fixture(request.param)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        title, ok, detail = RESULTS[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
