import warnings

import pytest

from pachner.catalog import CATALOG, get

# Single-tetrahedron exploration warnings are expected noise in tests.
warnings.filterwarnings("ignore", message="exploration from a single-tetrahedron")


@pytest.fixture(params=sorted(CATALOG))
def catalog_tri(request):
    return request.param, get(request.param)


@pytest.fixture
def fig8():
    return get("fig8")
