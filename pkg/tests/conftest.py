import json
from pathlib import Path

import pytest

from scgroup import (
    AbelianParams,
    PGroupParams,
    build_abelian_family,
    build_maxclass_family,
    build_pgroup,
)

FIXTURES_PATH = Path(__file__).parent / "fixtures" / "fixtures.json"


@pytest.fixture(scope="session")
def oracle_fixtures():
    return json.loads(FIXTURES_PATH.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def p312():
    return build_pgroup(PGroupParams(3, 1, 2))


@pytest.fixture(scope="session")
def p321():
    return build_pgroup(PGroupParams(3, 2, 1))


@pytest.fixture(scope="session")
def p514():
    return build_pgroup(PGroupParams(5, 1, 4))


@pytest.fixture(scope="session")
def maxclass_g312():
    return build_maxclass_family(PGroupParams(3, 1, 2))


@pytest.fixture(scope="session")
def maxclass_g321():
    return build_maxclass_family(PGroupParams(3, 2, 1))


@pytest.fixture(scope="session")
def maxclass_g514():
    return build_maxclass_family(PGroupParams(5, 1, 4))


@pytest.fixture(scope="session")
def abelian_g311():
    return build_abelian_family(AbelianParams(3, 1, 1))


@pytest.fixture(scope="session")
def abelian_g312():
    return build_abelian_family(AbelianParams(3, 1, 2))


@pytest.fixture(scope="session")
def abelian_g511():
    return build_abelian_family(AbelianParams(5, 1, 1))
