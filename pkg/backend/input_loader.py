"""
Input file loading and validation
"""
import json
import logging
from pathlib import Path
from typing import Dict, Optional, Union

import config
from processing.constructions.sl2fd import FDIndexSet
from processing.errors import InputFormatError, InvalidIndex
from processing.exactq import QMatrix
from processing.pentad import CartanPentad
from utils.file_utils import input_digest, input_kind

log = logging.getLogger(__name__)


class InputLoader:
    """Read pentad, matrix and index-set inputs"""

    def __init__(self, max_file_size: Optional[int] = None):
        self.max_file_size = max_file_size or config.MAX_INPUT_SIZE

    def read_json(self, file_path: Union[str, Path]) -> Dict:
        """
        Read and parse a JSON input file

        Raises:
            InputFormatError: missing file, wrong extension, oversize or invalid JSON
        """
        path = Path(file_path)
        if not path.is_file():
            raise InputFormatError(f"No such file: {path}")
        if input_kind(str(path)) != "json":
            raise InputFormatError(f"Expected a .json file: {path}")
        if path.stat().st_size > self.max_file_size:
            raise InputFormatError(f"File exceeds {self.max_file_size} bytes: {path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            raise InputFormatError(f"Cannot read {path}: {e}") from e
        if not isinstance(data, dict):
            raise InputFormatError(f"Top level of {path} must be a JSON object")
        log.debug("loaded %s (sha256 %s)", path, input_digest(data)[:12])
        return data

    def load_pentad(self, file_path: Union[str, Path]) -> CartanPentad:
        """Read a pentad file: {"r", "n", "A", "D", "Gamma"}"""
        return CartanPentad.from_dict(self.read_json(file_path))

    def load_matrix(self, file_path: Union[str, Path]) -> QMatrix:
        """Read a matrix file: {"C": [["2", "-2"], ["-2", "2"]]}"""
        data = self.read_json(file_path)
        if "C" not in data or not isinstance(data["C"], list):
            raise InputFormatError(f"{file_path}: expected a \"C\" list of rows")
        try:
            return QMatrix(data["C"])
        except (TypeError, ValueError) as e:
            raise InputFormatError(f"{file_path}: malformed matrix: {e}") from e

    def parse_indices(self, text: str) -> FDIndexSet:
        """Command-line index sets; any rejection is reported as a parse error"""
        try:
            return FDIndexSet.parse(text)
        except InvalidIndex as e:
            raise InputFormatError(str(e)) from e
