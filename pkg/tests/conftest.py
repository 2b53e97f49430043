# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Fixtures for the slide-screen tests."""


import json
import logging
import random
import tempfile
from pathlib import Path
from typing import Any, Dict, Generator, List

import pytest

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

# Property suites draw from one seeded generator so failures reproduce.
SEED = 20240917


def write_json(directory: Path, name: str, data: Any) -> Path:
    """Write a JSON file into a directory and return its path."""
    path = directory / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.fixture(name="rng", scope="function")
def fixture_rng() -> random.Random:
    """A seeded random generator."""
    return random.Random(SEED)


@pytest.fixture(name="link_file", scope="function")
def fixture_link_file(request) -> Generator[Path, None, None]:
    """Write a link file from a parametrised matrix."""
    # Unpack the parameters
    rows: List[List[int]] = request.param

    with tempfile.TemporaryDirectory() as temp_dir:
        yield write_json(Path(temp_dir), "link.json", {"n": len(rows), "matrix": rows})

    # Upon return everything will be deleted in the temporary directory


@pytest.fixture(name="monodromy_file", scope="function")
def fixture_monodromy_file(request) -> Generator[Path, None, None]:
    """Write a monodromy file from a parametrised {"genus", "matrix"} config."""
    config: Dict[str, Any] = request.param

    with tempfile.TemporaryDirectory() as temp_dir:
        yield write_json(Path(temp_dir), "monodromy.json", config)


@pytest.fixture(name="sequence_file", scope="function")
def fixture_sequence_file(request) -> Generator[Path, None, None]:
    """Write a slide sequence file from parametrised moves."""
    moves: List[List[int]] = request.param

    with tempfile.TemporaryDirectory() as temp_dir:
        yield write_json(Path(temp_dir), "moves.json", {"moves": moves})
