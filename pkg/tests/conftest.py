import pytest
from hypothesis import strategies as st

from fatcolor import _pykernels
from fatcolor.graph import Graph

try:
    from fatcolor import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
BACKENDS.append(
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))
)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


# Acceptance summary: one line per criterion, printed at the end of the run.
_ACCEPTANCE: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    marker = dict(report.user_properties).get("criterion")
    if marker is None:
        return
    _ACCEPTANCE.setdefault(marker, []).append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        outcomes = _ACCEPTANCE[crit]
        failed = [n for n, o in outcomes if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        terminalreporter.write_line(
            f"criterion {crit:2d}: {status} ({len(outcomes) - len(failed)}/{len(outcomes)} checks)"
            + (f" failing: {', '.join(n.split('::')[-1] for n in failed)}" if failed else "")
        )
