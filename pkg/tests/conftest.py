import pytest
from hypothesis import HealthCheck, settings

from zsubdirect.corpus import standard_corpus
from zsubdirect.semigroup import is_regular_semigroup

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def regular_corpus(corpus):
    return [(name, s) for name, s in corpus if is_regular_semigroup(s)]
