# type: ignore
# pylint: disable=missing-function-docstring
from fractions import Fraction
from pathlib import Path

import pytest

from cognite.g2locus import tables
from cognite.g2locus.exact_core import MultiPolyTable
from cognite.g2locus.exceptions import G2LocusError

PACKAGED = Path(tables.__file__).parent / "data"


@pytest.mark.parametrize("name", [tables.J2, tables.J4, tables.J6_PRINTED, tables.L2_PRINTED, tables.PHI3])
def test_load_packaged_table(name):
    expected = MultiPolyTable.from_text((PACKAGED / f"{name}.txt").read_text(encoding="utf-8"))
    assert tables.load_table(name) == expected


def test_table_url():
    assert tables.table_url("j2") == f"{PACKAGED}/j2.txt"
    assert tables.table_url("j2", "memory://tables/") == "memory://tables/j2.txt"


def test_set_data_dir(memory_fs):
    memory_fs.pipe_file("/tables/j2.txt", b"# replaced\n2 0 : 3\n")
    tables.set_data_dir("memory://tables")
    assert tables.load_table(tables.J2).coefficient((2, 0)) == Fraction(3)
    tables.set_data_dir(None)
    assert tables.load_table(tables.J2) != MultiPolyTable.from_text("2 0 : 3\n")


def test_load_table_exception(memory_fs):
    with pytest.raises(G2LocusError):
        tables.load_table("no_such_table")
    with pytest.raises(G2LocusError):
        tables.load_table(tables.J2, "memory://empty")
