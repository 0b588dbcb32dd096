import hypothesis
import pytest
from hypothesis import strategies as st

from descent123.dyck import DyckPath
from descent123.tables import build_tables, eulerian_rows

hypothesis.settings.register_profile("default", deadline=None, max_examples=200)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=20)
hypothesis.settings.load_profile("default")


def runs(*pairs):
    """``runs((5, 2), (1, 4))`` -> ``U^5 D^2 U D^4`` as a plain string."""
    return "".join("U" * a + "D" * d for a, d in pairs)


@st.composite
def dyck_paths(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    steps = []
    ups = downs = 0
    while ups + downs < 2 * n:
        can_up, can_down = ups < n, downs < ups
        if can_up and can_down:
            up = draw(st.booleans())
        else:
            up = can_up
        steps.append("U" if up else "D")
        ups += up
        downs += not up
    return DyckPath("".join(steps))


@st.composite
def avoiders_123(draw, max_n=12):
    """Random 123-avoider built left to right, never via the bijection."""
    n = draw(st.integers(0, max_n))
    prefix = []
    unused = set(range(1, n + 1))
    while unused:
        low = min(prefix, default=n + 1)
        non_min = [v for i, v in enumerate(prefix) if any(u < v for u in prefix[:i])]
        mid = min(non_min, default=n + 1)
        options = []
        for v in sorted(unused):
            if v > mid:
                continue
            new_mid = mid if v < low else v
            rest = unused - {v}
            if not rest or max(rest) < new_mid:
                options.append(v)
        v = draw(st.sampled_from(options))
        prefix.append(v)
        unused.remove(v)
    return tuple(prefix)


@pytest.fixture(scope="session")
def tables20():
    return build_tables(20)


@pytest.fixture(scope="session")
def rows30():
    return eulerian_rows(30)
