from __future__ import annotations

import os
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hakenlab import data_path
from hakenlab.exactfield import Mat2
from hakenlab.io import load_corpus, load_representation

SEED = int(os.environ.get("HAKENLAB_SEED", "0"))

settings.register_profile(
    "hakenlab", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("hakenlab")

REPS = Path(str(data_path("reps")))
LINKS = Path(str(data_path("links.json")))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(scope="session")
def corpus():
    return {r.name: r for r in load_corpus(LINKS)}


def rep(name: str):
    return load_representation(REPS / f"{name}.json")


def rep_names() -> list[str]:
    return sorted(p.stem for p in REPS.glob("*.json"))


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=5)
nonzero_fractions = small_fractions.filter(lambda q: q != 0)


@st.composite
def sl2q(draw) -> Mat2:
    """Products of elementary and diagonal matrices over Q."""
    g = Mat2.identity()
    for _ in range(draw(st.integers(1, 4))):
        kind = draw(st.sampled_from(("upper", "lower", "diag")))
        if kind == "diag":
            q = draw(nonzero_fractions)
            g = g * Mat2.diag(q, 1 / Fraction(q))
        else:
            k = draw(small_fractions)
            g = g * (Mat2(1, k, 0, 1) if kind == "upper" else Mat2(1, 0, k, 1))
    return g


# criterion number -> "PASS ..." / "FAIL ..." line, filled by test_acceptance
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
