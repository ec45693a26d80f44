from __future__ import annotations

import pytest

from genusgate.fielddb import load_database, validate_record
from genusgate.prover import packaged_db_path


@pytest.fixture(scope="session")
def shipped_db_text() -> str:
    with open(packaged_db_path(), encoding="utf-8") as handle:
        return handle.read()


@pytest.fixture(scope="session")
def shipped_db(shipped_db_text):
    return load_database(shipped_db_text)


@pytest.fixture(scope="session")
def validated_fields(shipped_db):
    """(record, NumberField) pairs for every shipped row; fields share
    splitting caches across the whole test session."""
    return [(record, validate_record(record)) for record in shipped_db.records]
