import pytest

from vdwshock.thermo import GasModel, reference_constants


@pytest.fixture
def ideal_gas():
    return GasModel(gamma=1.4, btilde=0.0)


@pytest.fixture
def covolume_gas():
    return GasModel(gamma=1.4, btilde=0.3)


@pytest.fixture
def ideal_ref(ideal_gas):
    return reference_constants(1.0, 1.0, ideal_gas)


@pytest.fixture
def covolume_ref(covolume_gas):
    return reference_constants(1.0, 1.0, covolume_gas)
