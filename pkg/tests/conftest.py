import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pellrep.linforms import derive_initial_bounds
from pellrep.sequences import SequenceKind
from pellrep.solver import solve


@pytest.fixture(scope="session")
def pell_ledger():
    return derive_initial_bounds(SequenceKind.PELL)


@pytest.fixture(scope="session")
def pell_lucas_ledger():
    return derive_initial_bounds(SequenceKind.PELL_LUCAS)


@pytest.fixture(scope="session")
def pell_report():
    return solve(SequenceKind.PELL)


@pytest.fixture(scope="session")
def pell_lucas_report():
    return solve(SequenceKind.PELL_LUCAS)
