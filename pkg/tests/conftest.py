import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fockent.fock import ModePartition, Statistics, make_state
from fockent.parser import parse_state
from fockent.sampling import occupation_vectors

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ROOT2 = np.sqrt(2.0)

# Alice-block acceptance lines collected by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def double_split():
    """The two split singles on different modes, boson statistics."""
    return parse_state("(|0,1>+|1,0>)^2")


@pytest.fixture
def split_single():
    return parse_state("|0,1>+|1,0>")


amplitudes = st.complex_numbers(min_magnitude=0.05, max_magnitude=3.0, allow_nan=False, allow_infinity=False)


@st.composite
def states(draw, stats=None, n_particles=None, max_modes=5, max_terms=6):
    """A random (state, partition) with 1..M-1 Alice modes."""
    stats = Statistics.parse(stats) if stats else draw(st.sampled_from(list(Statistics)))
    lo = max(2, n_particles or 1) if stats is Statistics.FERMION else 2
    m = draw(st.integers(lo, max(lo, max_modes)))
    k = draw(st.integers(1, m - 1))
    if n_particles is None:
        top = min(3, m) if stats is Statistics.FERMION else 3
        n = draw(st.integers(1, top))
    else:
        n = n_particles
    basis = occupation_vectors(m, n, stats)
    support = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=max_terms, unique=True))
    amps = draw(st.lists(amplitudes, min_size=len(support), max_size=len(support)))
    return make_state(stats, m, list(zip(support, amps))), ModePartition.split(m, k)
