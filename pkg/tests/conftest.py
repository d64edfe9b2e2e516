import pytest

from conclose import parse_instance

# Five-element worked instance used throughout the suite: three rules tie
# elements 1-3 together, element 4 forces 1, and three conflict edges cut
# the top of the lattice off.
DEMO_TEXT = """\
elements: 1 2 3 4 5
imp: 1 3 -> 2
imp: 1 2 -> 3
imp: 2 3 -> 1
imp: 4 -> 1
edge: 3 4
edge: 2 4
edge: 2 5
"""


@pytest.fixture(scope="session")
def demo():
    return parse_instance(DEMO_TEXT)


@pytest.fixture(scope="session")
def demo_base(demo):
    return demo[0]


@pytest.fixture(scope="session")
def demo_graph(demo):
    return demo[1]
