import pytest

from gainslift import SwapSpec, apply_swaps, example24_records, rank_records


@pytest.fixture(scope="session")
def example24():
    return rank_records(example24_records())


@pytest.fixture(scope="session")
def perturbed24(example24):
    """Labels at ranks 6/8 and 12/16 exchanged: higher AUC, weaker early lift."""
    return apply_swaps(example24, SwapSpec(pairs=((6, 8), (12, 16))))


@pytest.fixture(scope="session")
def flipped_pairs24(example24):
    """Labels at ranks 8/9 and 16/19 exchanged: lower AUC, lift at least as
    good through n=15."""
    return apply_swaps(example24, SwapSpec(pairs=((8, 9), (16, 19))))
