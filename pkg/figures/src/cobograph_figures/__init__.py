"""Figure rendering for the cobograph CSV datasets."""

from .render import render
from .schema import COLUMNS, DATASET_FILES, MissingColumn, SchemaMismatch, load_rows

__version__ = "0.1.0"
