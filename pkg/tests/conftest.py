import math

import pytest

from plasmon_spdc import (
    ConstantIndex,
    LayerStack,
    silver_johnson_christy,
)

LAMBDA_PAIR = 1.0e-6


@pytest.fixture(scope="session")
def silver():
    return silver_johnson_christy()


@pytest.fixture(scope="session")
def prism():
    return ConstantIndex(1.5, "prism")


@pytest.fixture(scope="session")
def vacuum():
    return ConstantIndex(1.0, "vacuum")


@pytest.fixture(scope="session")
def kretschmann_stack(prism, silver, vacuum):
    """Reference stack: n0 = 1.5 prism / 60 nm silver / vacuum."""
    return LayerStack(prism, ((silver, 60e-9),), vacuum)


@pytest.fixture(scope="session")
def theta_spp_1um():
    """From-normal coupling angle for the 1 um mode of the reference stack."""
    import plasmon_spdc as ps

    mode = ps.spp_mode(ps.permittivity(silver_johnson_christy(), LAMBDA_PAIR), 1.0, LAMBDA_PAIR)
    _, theta = ps.kretschmann_angle(mode.n_sp.real, 1.5)
    return theta
