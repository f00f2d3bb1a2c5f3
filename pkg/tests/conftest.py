import io

import numpy as np
import pytest

from subembed import load_edge_list


def graph_from_text(text: str):
    return load_edge_list(io.BytesIO(text.encode()))


@pytest.fixture
def path3():
    return graph_from_text("0 1\n1 2")


@pytest.fixture
def triangle():
    return graph_from_text("0 1\n1 2\n0 2")


@pytest.fixture
def pair():
    return graph_from_text("0 1")


@pytest.fixture
def star4():
    # center 0, leaves 1..3
    return graph_from_text("0 1\n0 2\n0 3")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
