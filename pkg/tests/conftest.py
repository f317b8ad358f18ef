import numpy as np
import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
seeds = st.integers(0, 2 ** 32 - 1)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))
