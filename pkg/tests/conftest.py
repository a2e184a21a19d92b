from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from crcontract.polyring import GaussRat, JetMap, MonoKey, RealPoly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion, then assert it."""

    def record(number, description, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number}: {description}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gauss = st.builds(GaussRat, small_fracs, small_fracs)


@st.composite
def real_polys(draw, nvars=2, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        hol = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        anti = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[MonoKey(hol, anti)] = draw(gauss)
    return RealPoly(nvars, terms)


@st.composite
def holomorphic_jets(draw, linear, order=3, max_terms=3):
    n = len(linear)
    comps = []
    for j in range(n):
        p = RealPoly.var(n, j).scale(linear[j])
        for _ in range(draw(st.integers(0, max_terms))):
            deg = draw(st.integers(2, order))
            split = [draw(st.integers(0, deg)) for _ in range(n - 1)]
            exps = _composition(deg, split)
            p = p + RealPoly.monomial(n, exps, coeff=draw(gauss))
        comps.append(p)
    return JetMap(comps, order)


def _composition(deg, cuts):
    cuts = sorted(min(c, deg) for c in cuts)
    bounds = [0] + cuts + [deg]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))
