import warnings

import pytest

warnings.filterwarnings("ignore", message=".*TBB.*")

from parybent.classify import classify


@pytest.fixture(scope="session")
def classification_32():
    return classify(3, 2)


@pytest.fixture(scope="session")
def classification_33():
    # orbit-invariant sampling is exercised once, in the acceptance suite
    return classify(3, 3, verify_invariants=False)


@pytest.fixture(scope="session")
def classification_52():
    return classify(5, 2, verify_invariants=False)
