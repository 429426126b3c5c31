from pathlib import Path

import pytest

from balagha.annotation import parse_document
from balagha.taxonomy import load_taxonomy

SAMPLES = Path(__file__).resolve().parents[1] / "samples"


@pytest.fixture(scope="session")
def taxonomy():
    return load_taxonomy()


@pytest.fixture(scope="session")
def samples_dir():
    return SAMPLES


def load_sample(name):
    return parse_document((SAMPLES / f"{name}.balagha.json").read_bytes())


@pytest.fixture(scope="session")
def sample_docs():
    names = ("sample_a", "sample_b", "sample_c", "sample_d", "sample_e")
    return {name: load_sample(name) for name in names}


@pytest.fixture(scope="session")
def calibration_docs():
    names = ("calibration_1", "calibration_2", "calibration_3")
    return [load_sample(name) for name in names]
