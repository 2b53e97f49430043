# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Tooling shared by the slide-screen command line."""


import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, TextIO

from slide_screen.config import log_directory


def common_logging(
    name: str,
    filename: str,
    stream: TextIO = sys.stderr,
    level: int = logging.INFO,
    logsdir: Optional[Path] = None,
) -> None:
    """Set up common logging."""
    if name == "__main__":
        log_filename = Path(filename).with_suffix("").name
    else:
        log_filename = name

    formatter = logging.Formatter("%(asctime)s %(levelname)-5.5s %(message)s")

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)

    streamhandler = logging.StreamHandler(stream)
    streamhandler.setFormatter(formatter)
    streamhandler.setLevel(level)
    root_logger.addHandler(streamhandler)

    logsdir = logsdir or log_directory()
    if logsdir is None:
        return

    # Get the current time as a timestamp
    timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
    logsdir.mkdir(parents=True, exist_ok=True)

    logspath = logsdir / f"{log_filename}_{timestamp}.log"
    filehandler = logging.FileHandler(logspath)
    filehandler.setFormatter(formatter)
    filehandler.setLevel(logging.DEBUG)

    errfilehandler = logging.FileHandler(
        logsdir / f"{log_filename}_{timestamp}_errors.log"
    )
    errfilehandler.setFormatter(formatter)
    errfilehandler.setLevel(logging.ERROR)

    root_logger.addHandler(filehandler)
    root_logger.addHandler(errfilehandler)
    logging.debug("Logging to %s", logspath)
