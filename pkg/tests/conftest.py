import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

from hopfcross.catalog import catalog_named
from hopfcross.crossed import StandardTriple, build_xyz


@pytest.fixture(scope="session")
def cyclic2():
    return catalog_named("cyclic:2")


@pytest.fixture(scope="session")
def cyclic3():
    return catalog_named("cyclic:3")


@pytest.fixture(scope="session")
def sweedler():
    return catalog_named("sweedler4")


@pytest.fixture(scope="session")
def taft25():
    return catalog_named("taft:2:5")


@pytest.fixture(scope="session")
def setup_c2(cyclic2):
    return StandardTriple(cyclic2)


@pytest.fixture(scope="session")
def setup_c3(cyclic3):
    return StandardTriple(cyclic3)


@pytest.fixture(scope="session")
def setup_sw(sweedler):
    return StandardTriple(sweedler)


@pytest.fixture(scope="session")
def setup_taft(taft25):
    return StandardTriple(taft25)


@pytest.fixture(scope="session")
def xyz_c2(cyclic2, setup_c2):
    return {w: build_xyz(cyclic2, w, setup_c2) for w in ("X", "Y", "Z")}


@pytest.fixture(scope="session")
def xyz_c3(cyclic3, setup_c3):
    return {w: build_xyz(cyclic3, w, setup_c3) for w in ("X", "Y", "Z")}


@pytest.fixture(scope="session")
def xyz_sw(sweedler, setup_sw):
    return {w: build_xyz(sweedler, w, setup_sw) for w in ("X", "Y", "Z")}


@pytest.fixture(scope="session")
def xyz_taft(taft25, setup_taft):
    return {w: build_xyz(taft25, w, setup_taft) for w in ("X", "Y", "Z")}
