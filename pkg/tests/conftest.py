import os
from unittest import mock

import fsspec
import pytest

from cognite.g2locus import tables
from cognite.g2locus.elliptic_locus import UVPoint
from cognite.g2locus.igusa import BinarySextic


@pytest.fixture(scope="function", autouse=True)
def mock_unset_env():
    with mock.patch.dict(os.environ, values={}, clear=True):
        yield


@pytest.fixture(scope="function", autouse=True)
def default_data_dir():
    yield
    tables.set_data_dir(None)


@pytest.fixture
def memory_fs():
    fs = fsspec.filesystem("memory")
    yield fs
    fs.store.clear()


@pytest.fixture
def x6_minus_1():
    return BinarySextic.of(-1, 0, 0, 0, 0, 0, 1)


@pytest.fixture
def x5_minus_x():
    return BinarySextic.of(0, -1, 0, 0, 0, 1, 0)


@pytest.fixture
def x6_minus_x():
    return BinarySextic.of(0, -1, 0, 0, 0, 0, 1)


@pytest.fixture
def gl2_3_point():
    return UVPoint.of(25, -250)


@pytest.fixture
def z3_d8_points():
    return [UVPoint.of(0, 0), UVPoint.of(225, 6750)]


@pytest.fixture
def sextic(request):
    return request.getfixturevalue(request.param)
