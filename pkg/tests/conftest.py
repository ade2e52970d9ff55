import math

import pytest

from wscjam.area_metrics import RegionSpec
from wscjam.channel import EnvConstants, TransmitPowers
from wscjam.scenario import JammerConfig, Scenario


def make_scenario(d_ab=20.0, r_j=7.0, t1=0.0, t2=0.0, z=13.2, g_a=15.0, g_j1=15.0, g_j2=15.0, **kw):
    return Scenario(
        d_ab=d_ab,
        powers=TransmitPowers(g_a, g_j1, g_j2),
        jammers=JammerConfig(r_j, t1, t2, z, z),
        **kw,
    )


# Eve-ring validation configurations (jammer angles in degrees)
FIG2 = {
    "a": dict(r_j=23.0, t1=45.0, t2=45.0),
    "b": dict(r_j=14.0, t1=60.0, t2=60.0),
    "c": dict(r_j=7.0, t1=30.0, t2=30.0),
}


@pytest.fixture
def urban():
    return EnvConstants()


@pytest.fixture(params=sorted(FIG2))
def fig2_scenario(request):
    return make_scenario(**FIG2[request.param])


@pytest.fixture
def coarse_region():
    return RegionSpec(40.0, 0.5, 16, 36)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
