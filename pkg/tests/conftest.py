from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from homops.abgroup import FgAbGroup, IntMatrix

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# Z is encoded as order 0, as in FgAbGroup.from_orders.
cyclic_orders = st.sampled_from([0] + list(range(2, 13)))
finite_orders = st.integers(min_value=2, max_value=12)


@st.composite
def groups(draw, max_summands: int = 3, finite: bool = False):
    orders = draw(st.lists(finite_orders if finite else cyclic_orders, min_size=0, max_size=max_summands))
    return FgAbGroup.from_orders(orders)


@st.composite
def matrices(draw, max_dim: int = 4, max_entry: int = 20):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.lists(st.integers(-max_entry, max_entry), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return IntMatrix.from_rows(entries, cols)


degrees = st.integers(min_value=2, max_value=6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
