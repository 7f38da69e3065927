"""Shared plumbing for the workbench: storage, work splitting, errors and number formatting"""

from .data_storage import DataStorage
from .range_splitter import RangeSplitter, ordered_map
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    RangeOverflowError,
    WorkbenchError,
    ZeroTableError,
)

__all__ = [
    'DataStorage', 'RangeSplitter', 'ordered_map',
    'WorkbenchError', 'DomainError', 'RangeOverflowError', 'ZeroTableError',
    'ConfigError', 'ConvergenceError',
]
