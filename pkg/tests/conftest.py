import pytest

from skewbrace.brace import from_assignment
from skewbrace.counts import classes_of_order


@pytest.fixture(scope="session")
def classes_upto_8():
    """Per-order brace class representatives, shared by the whole run."""
    return {n: classes_of_order(n) for n in range(1, 9)}


@pytest.fixture(scope="session")
def braces_upto_8(classes_upto_8):
    """All 62 brace class representatives of order <= 8, as braces."""
    return [
        from_assignment(rep)
        for classes in classes_upto_8.values()
        for _, reps in classes
        for rep in reps
    ]
