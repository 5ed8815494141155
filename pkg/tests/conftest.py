from pathlib import Path

import pytest

from blendsmith.resources import load_resource_dir

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures" / "resources"

EXAMPLE_DESCRIPTION = "Creating an application to split expense wisely"


@pytest.fixture(scope="session")
def store():
    return load_resource_dir(FIXTURE_DIR)


@pytest.fixture(scope="session")
def patterns(store):
    return store.hyphenation
