"""
Configuration settings for the pentad Lie algebra toolkit
"""
import os
from pathlib import Path

# Base paths
BASE_DIR = Path(__file__).parent
# Created on first save by the storage layer
OUTPUT_DIR = Path(os.getenv("PENTAD_OUTPUT_DIR", str(BASE_DIR / "outputs")))

# Expansion limits
PENTAD_MAX_DIM = int(os.getenv("PENTAD_MAX_DIM", "20000"))  # total basis size per expansion
DEFAULT_MAX_DEGREE = 6
VERIFY_PAPER_MAX_DEGREE = 8

# sl2 index pairs (i, j) are capped in parsers
MAX_INDEX_ENTRY = 10 ** 6

# Input files
MAX_INPUT_SIZE = 10 * 1024 * 1024  # 10MB
ALLOWED_EXTENSIONS = {
    'json': ['.json'],
}

# Output formats
OUTPUT_FORMATS = ['table', 'json', 'csv']

# Logging
LOG_LEVEL = os.getenv("PENTAD_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
