# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Utility functions."""

import json
from pathlib import Path
from typing import Any

from slide_screen.errors import SchemaError


def parse_json_text(text: str, what: str) -> Any:
    """Parse a JSON argument, naming it in the error."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"Could not parse {what} as JSON: {e}") from e


def load_json_file(path: Path) -> Any:
    """Read and parse a JSON file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SchemaError(f"Could not read {path}: {e}") from e
    return parse_json_text(text, str(path))
