"""Load the hardcoded polynomial tables shipped under ``data/``."""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional

import fsspec
from tenacity import after_log, retry, retry_if_exception_type, stop_after_attempt, wait_fixed

from .exact_core import MultiPolyTable
from .exceptions import G2LocusError

logger = logging.getLogger(__name__)

_PACKAGE_DATA_DIR = Path(__file__).parent / "data"
_READ_ATTEMPTS = 3
_READ_WAIT_SECONDS = 0.2

# Table names, without the ".txt" suffix.
J2 = "j2"
J4 = "j4"
J6_PRINTED = "j6_printed"
L2_PRINTED = "l2_printed"
PHI3 = "phi3"
G1 = "g1"
G2 = "g2"


_data_dir_override: Optional[str] = None


def set_data_dir(data_dir: Optional[str]) -> None:
    """Read tables from ``data_dir`` (an fsspec URL) instead of the packaged directory; None restores the default."""
    global _data_dir_override  # pylint: disable=global-statement
    _data_dir_override = data_dir
    load_table.cache_clear()


def table_url(name: str, data_dir: Optional[str] = None) -> str:
    """Location of a table, in the packaged data directory unless ``data_dir`` or :func:`set_data_dir` overrides it."""
    data_dir = data_dir or _data_dir_override
    base = data_dir.rstrip("/") if data_dir else str(_PACKAGE_DATA_DIR)
    return f"{base}/{name}.txt"


@retry(
    retry=retry_if_exception_type(OSError),
    stop=stop_after_attempt(_READ_ATTEMPTS),
    wait=wait_fixed(_READ_WAIT_SECONDS),
    after=after_log(logging.getLogger("g2locus"), logging.INFO),
    reraise=True,
)
def _read_text(url: str) -> str:
    with fsspec.open(url, "r", encoding="utf-8") as handle:
        return str(handle.read())


@lru_cache(maxsize=None)
def load_table(name: str, data_dir: Optional[str] = None) -> MultiPolyTable:
    """Read and parse a polynomial table.

    Args:
        name (str): Table name such as ``"j4"``.
        data_dir (str): Optional fsspec URL of an alternative data directory.

    Returns:
        MultiPolyTable: The parsed table.

    Raises:
        G2LocusError: If the table cannot be read.
    """
    url = table_url(name, data_dir)
    logger.debug("Loading polynomial table %s", url)
    try:
        text = _read_text(url)
    except OSError as exc:
        raise G2LocusError(f"cannot read polynomial table {url}") from exc
    return MultiPolyTable.from_text(text)
