import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from monotrails import complete_graph, weighted_subgraph

# Wall-clock deadlines make shared CI boxes flaky; correctness only here.
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

# The 4-vertex worked example used throughout: weights bind to edge keys
# (1,2),(1,3),(1,4),(2,3),(2,4),(3,4) in that order.
K4_WEIGHTS = [1, 3, 6, 5, 4, 2]

K4_EDGE_LIST = """\
c complete graph on 4 vertices
p 4 6
e 1 2 1
e 1 3 3
e 1 4 6
e 2 3 5
e 2 4 4
e 3 4 2
"""


@pytest.fixture
def k4():
    return complete_graph(4, K4_WEIGHTS)


@pytest.fixture
def k4_sub5(k4):
    """k4 with its heaviest edge (v1-v4, weight 6) removed."""
    return weighted_subgraph(k4, 5)


@pytest.fixture
def k3():
    """Triangle with w(v1,v2)=2, w(v2,v3)=1, w(v3,v1)=3."""
    return complete_graph(3, [2, 3, 1])


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(K4_EDGE_LIST)
    return path
