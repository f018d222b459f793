from pathlib import Path
from typing import Any, Optional, Union
import copy
import logging
import time

import toml

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"

DEFAULT_CONFIG: dict[str, dict[str, Any]] = {
    "search": {
        "shards": 1,
        "oracle_ceiling": 4096,
    },
    "output": {
        "format": "csv",
    },
}


class TimeRecorder:
    def __init__(self, title: str = "Task", logger: Optional[logging.Logger] = None):
        self.t = 0.0
        self.elapsed = 0.0
        self.title = title
        self.logger = logger if logger is not None else logging.getLogger(TimeRecorder.__name__)

    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.elapsed = time.perf_counter() - self.t
        self.logger.info(f"{self.title} took {self.elapsed:.2f} seconds.")


def load_config(path: Optional[Union[str, Path]] = None) -> dict[str, dict[str, Any]]:
    """Loads a TOML run profile on top of the built-in defaults.

    Args:
        path (str | Path, optional): Profile to read. Defaults are returned
            unchanged when no path is given.

    Returns:
        dict: Sections ``search`` and ``output`` with every key filled in.
            Other sections (script profiles such as ``run``) pass through.
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if path is None:
        return config
    loaded = toml.load(path)
    for section, values in loaded.items():
        if section not in config:
            config[section] = values
            continue
        unknown = set(values) - set(config[section])
        if unknown:
            raise ValueError(f"Unknown keys {sorted(unknown)} in [{section}] of {path}.")
        config[section].update(values)
    return config


def setup_logging(level: int = logging.WARNING, log_file: Optional[Union[str, Path]] = None):
    if log_file is not None:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
    logging.basicConfig(
        filename=log_file,
        level=level,
        filemode="w",
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
        force=True,
    )
