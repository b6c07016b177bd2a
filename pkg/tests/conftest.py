import pytest

from kernelkit.models.entities import Graph
from tests.graphs import complete


@pytest.fixture
def triangle() -> Graph:
    return complete(3)


@pytest.fixture
def paw() -> Graph:
    # triangle 0-1-2 with pendant 2-3
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def instance_file(tmp_path):
    def write(text: str, name: str = "g.txt") -> str:
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return write
