"""
Data Storage Utility
Handles saving and loading of experiment reports, ledgers and plot data
"""

import json
import logging
from pathlib import Path

import pandas as pd

from utils.formatting import FLOAT_FORMAT

logger = logging.getLogger(__name__)


class DataStorage:
    """Manage storage of workbench reports"""

    def __init__(self, base_dir="results"):
        """
        Initialize data storage

        Args:
            base_dir (str): Base directory for relative file names; absolute
                paths passed to the save methods are used as they are
        """
        self.base_dir = Path(base_dir)

    def resolve(self, filename):
        """Return the target path for filename, creating parent directories"""
        filepath = self.base_dir / filename
        filepath.parent.mkdir(parents=True, exist_ok=True)
        return filepath

    def save_json(self, payload, filename):
        """
        Save a JSON report

        Args:
            payload (dict or pydantic.BaseModel): Report content
            filename (str or Path): Output filename

        Returns:
            Path: Path to saved file
        """
        filepath = self.resolve(filename)
        if hasattr(payload, "model_dump_json"):
            text = payload.model_dump_json(indent=2)
        else:
            text = json.dumps(payload, indent=2, ensure_ascii=False)
        with open(filepath, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.debug("wrote %s", filepath)
        return filepath

    def save_to_csv(self, data, filename, index=False):
        """
        Save data to CSV file with 17-significant-digit floats

        Args:
            data (list or pd.DataFrame): Rows
            filename (str or Path): Output filename
            index (bool): Write the DataFrame index

        Returns:
            Path: Path to saved file
        """
        filepath = self.resolve(filename)
        df = data if isinstance(data, pd.DataFrame) else pd.DataFrame(data)
        df.to_csv(filepath, index=index, float_format=FLOAT_FORMAT, lineterminator="\n")
        logger.debug("wrote %d rows to %s", len(df), filepath)
        return filepath

    def append_ledger(self, rows, filename="ledger.csv", columns=None):
        """
        Append rows to a CSV ledger, writing the header only for a new file

        Args:
            rows (list): Row dictionaries
            filename (str or Path): Ledger filename
            columns (list): Column order

        Returns:
            Path: Path to the ledger
        """
        filepath = self.resolve(filename)
        df = pd.DataFrame(rows, columns=columns)
        new_file = not filepath.exists() or filepath.stat().st_size == 0
        df.to_csv(filepath, mode="a", header=new_file, index=False,
                  float_format=FLOAT_FORMAT, lineterminator="\n")
        return filepath
