import pytest
from pydantic import ValidationError

from palwords import HarnessConfig
from palwords.errors import PydanticClassRequired, ResourceGuardError
from palwords.verify import _su_chunk
from palwords.workers import WorkerPool


def test_defaults():
    config = HarnessConfig()

    assert config.THEOREM_MAX_LEN == 12
    assert config.HERITAGE_MAX_LEN == 8
    assert config.THREADS == 1
    assert not config.OVERRIDE_GUARDS


def test_environment_is_ignored(monkeypatch):
    monkeypatch.setenv("THREADS", "4")
    monkeypatch.setenv("THEOREM_MAX_LEN", "3")

    config = HarnessConfig()

    assert config.THREADS == 1
    assert config.THEOREM_MAX_LEN == 12


@pytest.mark.parametrize("field", ["THEOREM_MAX_LEN", "PSI_MAX_FACTOR", "THREADS"])
def test_rejects_non_positive(field):
    with pytest.raises(ValidationError):
        HarnessConfig(**{field: 0})


def test_check_guard(config):
    assert config.check_guard("THEOREM_MAX_LEN", 16) == 16
    with pytest.raises(ResourceGuardError):
        config.check_guard("THEOREM_MAX_LEN", 17)


def test_override_guards():
    config = HarnessConfig(OVERRIDE_GUARDS=True)

    assert config.check_guard("DOUBLING_MAX_LEN", 9) == 9


def test_worker_pool_requires_settings():
    with pytest.raises(PydanticClassRequired):
        WorkerPool({"THREADS": 2})


@pytest.mark.asyncio
async def test_inline_pool(config):
    async with WorkerPool(config) as pool:
        assert pool.executor is None
        results = await pool.map(_su_chunk, [(3, 0, 1), (3, 1, 1)])

    assert [checked for checked, _, _ in results] == [4, 4]
    assert all(not failures for _, failures, _ in results)


@pytest.mark.asyncio
async def test_process_pool_matches_inline():
    config = HarnessConfig(THREADS=2)

    async with WorkerPool(config) as pool:
        assert pool.executor is not None
        results = await pool.map(_su_chunk, [(4, prefix, 2) for prefix in range(4)])

    assert pool.executor is None
    assert sum(checked for checked, _, _ in results) == 16
