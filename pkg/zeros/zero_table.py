"""
Zero Table
Loader and container for tabulated ordinates of the nontrivial zeta zeros
"""

import logging
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from utils.errors import ZeroTableError

logger = logging.getLogger(__name__)

FIRST_ZERO = 14.134725141734693
FIRST_ZERO_TOLERANCE = 1e-4


@dataclass(frozen=True)
class ZeroTable:
    """Ascending ordinates gamma of zeros 1/2 + i gamma, gamma > 0"""

    gammas: np.ndarray
    source: str = ""

    @property
    def max_height(self):
        return float(self.gammas[-1])

    def __len__(self):
        return len(self.gammas)

    def count_upto(self, T):
        """Number of tabulated gamma <= T"""
        return int(np.searchsorted(self.gammas, T, side="right"))

    def snap(self, T):
        """
        Largest tabulated gamma <= T

        Args:
            T (float): Truncation height, at most max_height

        Returns:
            tuple: (snapped height, number of zeros used); (T, 0) below the first zero
        """
        if T > self.max_height:
            raise ZeroTableError(f"T={T} exceeds the table height {self.max_height} of {self.source}")
        used = self.count_upto(T)
        return (float(self.gammas[used - 1]) if used else float(T)), used

    def head(self, count):
        """Table restricted to the first count zeros"""
        if count > len(self):
            raise ZeroTableError(f"requested {count} zeros, table has {len(self)}")
        return ZeroTable(self.gammas[:count], self.source)


def validate_gammas(gammas, source=""):
    """
    Check a candidate table and wrap it

    Args:
        gammas (array-like): Ordinates
        source (str): Origin, for error messages

    Returns:
        ZeroTable: Validated table
    """
    gammas = np.asarray(gammas, dtype=np.float64).ravel()
    if gammas.size == 0:
        raise ZeroTableError(f"zero table {source} is empty")
    if not np.all(np.isfinite(gammas)):
        raise ZeroTableError(f"zero table {source} has non-finite entries")
    if np.any(gammas <= 1.0):
        raise ZeroTableError(f"zero table {source} has entries <= 1")
    steps = np.diff(gammas)
    if np.any(steps <= 0):
        bad = int(np.argmax(steps <= 0)) + 1
        raise ZeroTableError(f"zero table {source} is not strictly increasing at entry {bad + 1}")
    if abs(gammas[0] - FIRST_ZERO) > FIRST_ZERO_TOLERANCE:
        raise ZeroTableError(f"zero table {source} starts at {gammas[0]}, expected {FIRST_ZERO:.6f}")
    return ZeroTable(gammas, str(source))


def load_zeros(path, skip_header=False):
    """
    Load a zero table from a text file with one ordinate per line

    Args:
        path (str or Path): Table file
        skip_header (bool): Ignore the first line

    Returns:
        ZeroTable: Validated table
    """
    path = Path(path)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)
            gammas = np.loadtxt(path, dtype=np.float64, skiprows=1 if skip_header else 0,
                                ndmin=1, comments="#")
    except ValueError as e:
        raise ZeroTableError(f"cannot parse zero table {path}: {e}") from e
    table = validate_gammas(gammas, path)
    logger.info("loaded %d zeros from %s up to height %.6f", len(table), path, table.max_height)
    return table
