import pytest

from fjl.mutations import MUTATIONS, detect


def test_ten_designated():
    assert len(MUTATIONS) == 10


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_mutation_detected(name):
    holds, rejected = detect(name)
    assert holds, "unmutated identity must hold"
    assert rejected, "mutant must be rejected"
