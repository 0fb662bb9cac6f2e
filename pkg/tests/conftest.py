from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from linkrep.families import named

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

HOPF = "X[1,3,2,4] X[3,1,4,2]"
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


@pytest.fixture(scope="session")
def corpus():
    names = ["Hopf", "Trefoil", "L6n1", "L8n8", "L5m3", "G0Link", "Chain(3)", "Luv(3,1)"]
    return {n: named(n) for n in names}
