from pathlib import Path

import pytest

from fuzzylp import (
    Program,
    builtin_unit_interval,
    close,
    parse_program,
    parse_sim,
)

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def unit():
    return builtin_unit_interval()


@pytest.fixture(scope="session")
def hotel_rules(unit):
    return parse_program((DATA / "hotel.fpl").read_text(), unit)


@pytest.fixture(scope="session")
def hotel_relation(unit):
    eqs, tnorm = parse_sim((DATA / "hotel.sim").read_text(), unit)
    return close(eqs, unit, tnorm or "godel")


@pytest.fixture(scope="session")
def hotel_program(hotel_rules, unit, hotel_relation):
    return Program(tuple(hotel_rules), unit, hotel_relation)
