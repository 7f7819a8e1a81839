import sys
from pathlib import Path

import pytest

from nonnash import chicken, coordination, elimination_ladder, prisoners_dilemma

sys.path.insert(0, str(Path(__file__).parent))

REPO_ROOT = Path(__file__).resolve().parent.parent
GAMES_DIR = REPO_ROOT / "games"


@pytest.fixture
def pd():
    return prisoners_dilemma()


@pytest.fixture
def chicken_game():
    return chicken()


@pytest.fixture
def coordination_game():
    return coordination()


@pytest.fixture
def g3x3():
    return elimination_ladder()


@pytest.fixture
def games_dir():
    return GAMES_DIR
