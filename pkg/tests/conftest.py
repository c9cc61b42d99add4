import hypothesis
from hypothesis import strategies as st

from ramsey_descent.colouring import EdgeColouring

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

ACCEPTANCE_LINES = []


@st.composite
def colourings(draw, min_n=1, max_n=9, max_k=3):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_k))
    m = n * (n - 1) // 2
    cols = draw(st.lists(st.integers(1, k), min_size=m, max_size=m))
    ec = EdgeColouring(n, 1)
    it = iter(cols)
    for u in range(1, n):
        for v in range(u):
            ec.set_colour(u, v, next(it))
    return ec


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
