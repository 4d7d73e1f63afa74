import pytest
from click.testing import CliRunner

from palwords import HarnessConfig, Verifier
from palwords.verify import clear_memo


@pytest.fixture
def harness_options():
    options = {
        "THEOREM_MAX_LEN": 6,
        "HERITAGE_MAX_LEN": 5,
        "DOUBLING_MAX_LEN": 5,
        "PATTERN_MAX_LEN": 8,
        "SU_MAX_LEN": 8,
        "LEAVES_MAX_LEN": 10,
        "CENTRAL_MAX_LEN": 10,
        "THREE_MAX_LEN": 12,
        "THREE_CROSS_CHECK_LEN": 8,
        "UNBORDERED_MAX_LEN": 300,
        "THREADS": 1,
        "OVERRIDE_GUARDS": False,
    }

    return options


@pytest.fixture
def verifier(harness_options) -> Verifier:
    test = Verifier()
    test.init_config(harness_options)
    yield test
    clear_memo()


@pytest.fixture
def config(harness_options) -> HarnessConfig:
    return HarnessConfig(**harness_options)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
