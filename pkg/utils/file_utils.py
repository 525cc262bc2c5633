"""
File utility functions
"""
import hashlib
import json
from pathlib import Path
from typing import Dict, Optional

import config


def input_digest(data: Dict) -> str:
    """SHA-256 of the canonical JSON form, so reformatted copies of one input share a digest"""
    canonical = json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def input_kind(file_path: str) -> Optional[str]:
    """Input kind from the extension, per config.ALLOWED_EXTENSIONS"""
    ext = Path(file_path).suffix.lower()
    for kind, extensions in config.ALLOWED_EXTENSIONS.items():
        if ext in extensions:
            return kind
    return None


def safe_stem(name: str, default: str = "result") -> str:
    stem = "".join(c for c in name if c.isalnum() or c in (" ", "-", "_")).strip().replace(" ", "_")
    return stem or default


def ensure_directory(path: Path):
    path.mkdir(parents=True, exist_ok=True)
