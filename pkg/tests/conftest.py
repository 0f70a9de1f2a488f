from pathlib import Path

import pytest

from src.rle_core import RunLengthEncoding

GOLDEN_DIR = Path(__file__).parent / 'golden'


def read_golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding='utf-8').strip()


@pytest.fixture
def pair_x():
    return RunLengthEncoding(((0, 2), (1, 4), (2, 10)))


@pytest.fixture
def pair_y():
    return RunLengthEncoding(((1, 4), (0, 3), (2, 5), (1, 5)))


@pytest.fixture
def ucr_file(tmp_path):
    path = tmp_path / 'toy.tsv'
    path.write_text(
        "1\t0.0\t0.0\t1.0\t1.0\t1.0\t2.0\n"
        "2\t1.0\t1.0\t0.0\t0.0\t2.0\t2.0\n"
        "1\t3.0\t3.0\t3.0\t1.0\t1.0\t1.0\n",
        encoding='utf-8',
    )
    return path


@pytest.fixture
def golden():
    return read_golden
