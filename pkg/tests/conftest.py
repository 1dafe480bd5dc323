import pytest

from rsyt.tableaux import Shape, Tableau


@pytest.fixture
def fig1_tableau():
    return Tableau(
        Shape.rect(3, 5),
        ((1, 2, 5, 10, 11), (3, 4, 6, 12, 13), (7, 8, 9, 14, 15)),
    )


@pytest.fixture
def paper_3x3_nonrealizable():
    return Tableau(Shape.rect(3, 3), ((1, 2, 6), (3, 5, 7), (4, 8, 9)))
