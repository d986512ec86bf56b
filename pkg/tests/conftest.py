import random

import pytest
from hypothesis import settings

# The randomized acceptance suite already runs every identity at 1000 cases;
# hypothesis runs here are for shrinking quality, not volume.
settings.register_profile("octalg", max_examples=50, deadline=None)
settings.load_profile("octalg")


@pytest.fixture
def rng():
    return random.Random("octalg-tests")
