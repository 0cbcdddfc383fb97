import hypothesis
import pytest
from tests.utils import fast_config

hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=300, deadline=None)
hypothesis.settings.load_profile("fast")


@pytest.fixture(scope="session")
def quad_cfg():
    return fast_config()
