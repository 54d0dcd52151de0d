import pytest

from yangbaxter.fields import Field


@pytest.fixture
def rat() -> Field:
    return Field.rationals()


@pytest.fixture
def gf2() -> Field:
    return Field.gf(2)


@pytest.fixture
def gf3() -> Field:
    return Field.gf(3)


@pytest.fixture
def gf5() -> Field:
    return Field.gf(5)


@pytest.fixture
def quad2() -> Field:
    return Field.quadratic(2)


@pytest.fixture
def write_matrix(tmp_path):
    """Write a matrix to a throwaway file and return its path as a string."""
    from yangbaxter.matio import save_matrix

    counter = [0]

    def _write(matrix):
        counter[0] += 1
        path = tmp_path / f"m{counter[0]}.json"
        save_matrix(str(path), matrix)
        return str(path)

    return _write
