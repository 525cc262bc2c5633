"""
Rendering and storage of computed results
"""
import json
from pathlib import Path
from typing import Dict, Optional, Union

import pandas as pd

import config
from processing.exactq import QMatrix
from utils.file_utils import ensure_directory, safe_stem


class StorageManager:
    """Render dimension tables, matrices, pentads and reports; optionally save them"""

    def __init__(self, output_dir: Optional[Path] = None):
        self.output_dir = Path(output_dir) if output_dir else Path(config.OUTPUT_DIR)

    # -- rendering ---------------------------------------------------------

    def dimension_frame(self, degrees: Dict[int, int]) -> pd.DataFrame:
        """One row per degree, ascending"""
        items = sorted(degrees.items())
        return pd.DataFrame({"degree": [k for k, _ in items], "dim": [v for _, v in items]})

    def render_dimensions(self, table: Dict, format: str = "table") -> str:
        """
        Render a dimension table

        Args:
            table: {"degrees": {k: dim}, "terminated_pos": bool, "terminated_neg": bool, ...}
            format: 'table', 'json' or 'csv'

        Returns:
            The rendered text, newline terminated
        """
        degrees = table["degrees"]
        if format == "json":
            payload = {
                "degrees": {str(k): v for k, v in sorted(degrees.items())},
                "terminated_pos": bool(table.get("terminated_pos", False)),
                "terminated_neg": bool(table.get("terminated_neg", False)),
            }
            return self.to_json(payload)
        frame = self.dimension_frame(degrees)
        if format == "csv":
            return frame.to_csv(index=False, lineterminator="\n")
        if format == "table":
            lines = []
            if table.get("name"):
                lines.append(f"# {table['name']}")
            lines.append(frame.to_string(index=False))
            flags = [side for side, key in (("+", "terminated_pos"), ("-", "terminated_neg")) if table.get(key)]
            if flags:
                lines.append(f"terminated: {' '.join(flags)}")
            return "\n".join(lines) + "\n"
        raise ValueError(f"Unsupported format: {format}")

    def render_matrix(self, matrix: QMatrix, format: str = "json") -> str:
        """Matrices use the {"C": [[...]]} layout; the table format prints a grid"""
        if format == "table":
            frame = pd.DataFrame(matrix.to_strings())
            return frame.to_string(index=False, header=False) + "\n"
        if format == "csv":
            return pd.DataFrame(matrix.to_strings()).to_csv(index=False, header=False, lineterminator="\n")
        return self.to_json({"C": matrix.to_strings()})

    def render_mapping(self, data: Dict, format: str = "json") -> str:
        """Flat key/value reports such as structure summaries"""
        if format == "json":
            return self.to_json(data)
        frame = pd.DataFrame({"key": list(data), "value": [data[k] for k in data]})
        if format == "csv":
            return frame.to_csv(index=False, lineterminator="\n")
        return frame.to_string(index=False) + "\n"

    def to_json(self, data: Union[Dict, list]) -> str:
        return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    # -- storage -----------------------------------------------------------

    def save_result(self, text: str, name: str, format: str = "json",
                    output_path: Optional[Union[str, Path]] = None) -> Path:
        """
        Save rendered output

        Args:
            text: rendered content
            name: base file name, without extension
            format: extension to use ('table' is saved as .txt)
            output_path: explicit target path; defaults to OUTPUT_DIR / name.format

        Returns:
            Path to saved file
        """
        if output_path:
            file_path = Path(output_path)
        else:
            extension = "txt" if format == "table" else format
            file_path = self.output_dir / f"{safe_stem(name)}.{extension}"
        ensure_directory(file_path.parent)
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(text)
        return file_path
