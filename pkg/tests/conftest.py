"""
Shared Test Fixtures
Repository root on sys.path, a session-wide zeta zero table and scratch storage
"""

import os
import sys
from pathlib import Path

import mpmath
import numpy as np
import pytest

sys.path.append(str(Path(__file__).parent.parent))

from utils.data_storage import DataStorage
from zeros.zero_table import load_zeros, validate_gammas

ZERO_COUNT = 700
ZERO_CACHE_KEY = "workbench/zeta_zeros_700"


def _generate_zeros(count):
    mpmath.mp.dps = 20
    return [float(mpmath.zetazero(i).imag) for i in range(1, count + 1)]


@pytest.fixture(scope="session")
def zero_table(request):
    """First 700 zeros (heights past 1000), from WG_ZEROS_PATH or mpmath"""
    path = os.environ.get("WG_ZEROS_PATH")
    if path:
        table = load_zeros(path)
        if len(table) >= ZERO_COUNT:
            return table.head(ZERO_COUNT)
    gammas = request.config.cache.get(ZERO_CACHE_KEY, None)
    if gammas is None or len(gammas) != ZERO_COUNT:
        gammas = _generate_zeros(ZERO_COUNT)
        request.config.cache.set(ZERO_CACHE_KEY, gammas)
    return validate_gammas(np.array(gammas), "mpmath.zetazero")


@pytest.fixture
def storage(tmp_path):
    return DataStorage(tmp_path / "results")
