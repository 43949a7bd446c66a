import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from entryrisk import data  # noqa: E402


@pytest.fixture
def fixture_dir():
    return Path(str(data.path("electroputere_2007.json"))).parent


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, status in sorted(lines, key=lambda x: int(x[0].split()[0])):
            terminalreporter.write_line(f"{status}  criterion {crit}")
