import shutil
from pathlib import Path

import pytest

from textprep import classic

DATA = Path(__file__).parent / "data"
FIXTURES = Path(classic.__file__).parent / "data" / "fixtures"


@pytest.fixture(scope="session")
def oracle_dir() -> Path:
    return DATA / "oracles"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURES


@pytest.fixture()
def fixture_run_dir(tmp_path) -> Path:
    """Copy of the bundled fixture pack in a writable location."""
    target = tmp_path / "fixtures"
    shutil.copytree(FIXTURES, target)
    return target


@pytest.fixture(scope="session")
def en_wordlists():
    return classic.load_wordlists("en", "sentiment")


def load_oracle(path: Path) -> list[tuple[str, str]]:
    pairs = []
    for line in path.read_text(encoding="utf-8").splitlines():
        word, stemmed = line.split("\t")
        pairs.append((word, stemmed))
    return pairs
