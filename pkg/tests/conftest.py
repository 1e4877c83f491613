import pytest
from hypothesis import settings, strategies as st

from graphinertia import kernels
from graphinertia.graph import Graph

# exact searches have heavy-tailed running times; wall-clock deadlines only add noise
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=10):
    n = draw(st.integers(min_order, max_order))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return Graph(n, tuple(kernels.rows_from_pairs(n, mask)))


@pytest.fixture(params=["compiled", "python"])
def backend(request):
    if request.param == "compiled" and not kernels.compiled_available():
        pytest.skip("compiled kernels not built")
    prev = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(prev)


# acceptance lines are echoed after the run so they survive output capture
_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_line():
    def record(line: str) -> None:
        print(line)
        _ACCEPTANCE.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
