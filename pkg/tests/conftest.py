import pytest

from hitofrieze.pattern import new_frieze

# (x, y, label) from the figure captions
FIGURE_PATTERNS = [
    ("1000110", "100110", "p1a1"),
    ("1110", "0110", "p1m1"),
    ("01", "0100", "p11a"),
    ("10", "1010", "p11[2a]"),
    ("011001", "000", "p112"),
    ("001101", "0011", "p11~2"),
    ("10001100", "01010", "p111"),
    ("001", "1010", "pma2"),
    ("1001", "1001", "pmm2"),
    ("0011", "0111", "pm11"),
    ("011", "010", "p[2'm]11"),
    ("01", "1001", "p2'ma"),
    ("0101100", "0110110", "p2'11"),
]


@pytest.fixture(params=FIGURE_PATTERNS, ids=lambda t: t[2])
def figure(request):
    x, y, label = request.param
    return new_frieze(x, y), label


# criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k[2:])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {key}: {detail}")
