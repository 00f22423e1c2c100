import pytest

from binedge.graph import parse_graph

UNMIXED_NOT_CM = "5; 1-2,1-3,2-3,2-4,3-4,2-5,3-5"
# hexagon bottom=1, then counter-clockwise 2..6, with chords from vertex 1
TRIANGLE_FAN = "6; 1-2,2-3,3-4,4-5,5-6,6-1,1-3,1-4,1-5"


@pytest.fixture
def unmixed_not_cm():
    return parse_graph(UNMIXED_NOT_CM)


@pytest.fixture
def triangle_fan():
    return parse_graph(TRIANGLE_FAN)
