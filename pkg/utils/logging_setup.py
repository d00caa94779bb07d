# utils/logging_setup.py
import logging
import sys
from pathlib import Path
from typing import Optional, Union

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"
LOG_FILE = "poincare.log"


def configure_logging(level: Union[str, int] = "INFO", log_dir: Optional[Path] = None) -> logging.Logger:
    """
    stderr handler plus logs/poincare.log. Stdout stays reserved for command output.
    Calling it again replaces the handlers installed by a previous call.
    """
    root = logging.getLogger()
    root.setLevel(level)
    for h in list(root.handlers):
        if getattr(h, "_poincare", False):
            root.removeHandler(h)
            h.close()

    formatter = logging.Formatter(LOG_FORMAT)
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_dir / LOG_FILE, encoding="utf-8"))
    for h in handlers:
        h.setFormatter(formatter)
        h._poincare = True
        root.addHandler(h)
    return root
