"""Command line, configuration, report schemas and plot data for the workbench"""

from .config import ExperimentConfig, build_config, read_config_file
from .reports import REPORT_SCHEMAS, validate_report

__all__ = [
    'ExperimentConfig', 'build_config', 'read_config_file',
    'REPORT_SCHEMAS', 'validate_report',
]
