import random

import pytest

from wedgeshift import parse_multivector


@pytest.fixture
def rng():
    return random.Random(20250809)


def mv(n, text):
    return parse_multivector(text, n)


@pytest.fixture(name="mv")
def mv_fixture():
    return mv
