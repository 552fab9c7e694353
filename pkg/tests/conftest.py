import hypothesis
import pytest

from stratisets.corpus import small_posets

hypothesis.settings.register_profile(
    "default",
    deadline=None,
    max_examples=25,
    suppress_health_check=[hypothesis.HealthCheck.too_slow,
                           hypothesis.HealthCheck.data_too_large],
)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def posets():
    return dict(small_posets())


@pytest.fixture(scope="session")
def chain2(posets):
    return posets["chain2"]


@pytest.fixture(scope="session")
def chain3(posets):
    return posets["chain3"]
