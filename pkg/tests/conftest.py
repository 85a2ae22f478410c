import pytest
from hypothesis import settings

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")

from loglie import logder
from loglie.analysis import run_analyze
from loglie.polyalg import Ring

EX7_VARS = ("x", "y", "z", "w")
EX7_F = "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2"


@pytest.fixture(scope="session")
def ex7_ring():
    return Ring(EX7_VARS)


@pytest.fixture(scope="session")
def ex7_poly(ex7_ring):
    return ex7_ring.parse(EX7_F)


@pytest.fixture(scope="session")
def ex7_module(ex7_poly):
    return logder.logarithmic_derivations(ex7_poly)


@pytest.fixture(scope="session")
def ex7_initial(ex7_module):
    return logder.initial_lie_algebra(ex7_module)


@pytest.fixture(scope="session")
def ex7_report():
    return run_analyze(EX7_VARS, EX7_F)


@pytest.fixture(scope="session")
def corpus_results():
    from loglie.corpus import run_corpus
    return run_corpus()
