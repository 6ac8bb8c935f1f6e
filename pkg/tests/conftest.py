import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qcalc.fixtures import chain_quantaloid, frame_f, q_f, star_cat, x_f


@pytest.fixture(scope="session")
def F():
    return frame_f()


@pytest.fixture(scope="session")
def QF():
    return q_f()


@pytest.fixture(scope="session")
def X(QF):
    return x_f(QF)


@pytest.fixture(scope="session")
def pt(QF):
    return star_cat(QF, "*", "pt")


@pytest.fixture(scope="session")
def QC2():
    return chain_quantaloid(2)


@pytest.fixture(scope="session")
def QC3():
    return chain_quantaloid(3)
