import pytest
from hypothesis import settings

from PalWidth import words as WD
from PalWidth import messagelogger as ML

settings.register_profile("default", deadline=None)
settings.load_profile("default")

@pytest.fixture(autouse=True)
def quietLogger():
    ML.SetVerbosity(0)
    ML.SetLogFile("")
    yield

@pytest.fixture
def ctx22():
    return WD.GroupContext(2, 2)

@pytest.fixture
def ctx23():
    return WD.GroupContext(2, 3)

@pytest.fixture
def ctx32():
    return WD.GroupContext(3, 2)
