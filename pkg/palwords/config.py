from typing import Dict, Tuple

from pydantic import conint, field_validator
from pydantic_settings import BaseSettings as Settings
from pydantic_settings import PydanticBaseSettingsSource

from .errors import ResourceGuardError

#: hard ceilings a guard may not exceed without ``OVERRIDE_GUARDS``
GUARD_LIMITS: Dict[str, int] = {
    "THEOREM_MAX_LEN": 16,
    "HERITAGE_MAX_LEN": 10,
    "DOUBLING_MAX_LEN": 8,
    "PATTERN_MAX_LEN": 12,
    "SU_MAX_LEN": 20,
    "LEAVES_MAX_LEN": 16,
    "CENTRAL_MAX_LEN": 20,
    "THREE_MAX_LEN": 40,
    "UNBORDERED_MAX_LEN": 300,
    "PSI_MAX_PREFIX": 512,
    "PSI_MAX_FACTOR": 24,
    "TM_MAX_K": 10,
}


class HarnessConfig(Settings):
    THEOREM_MAX_LEN: int = 12
    HERITAGE_MAX_LEN: int = 8
    DOUBLING_MAX_LEN: int = 8
    PATTERN_MAX_LEN: int = 10
    SU_MAX_LEN: int = 16
    LEAVES_MAX_LEN: int = 14
    CENTRAL_MAX_LEN: int = 14
    THREE_MAX_LEN: int = 30
    THREE_CROSS_CHECK_LEN: int = 12
    UNBORDERED_MAX_LEN: int = 300
    PSI_MAX_PREFIX: int = 512
    PSI_MAX_FACTOR: int = 24
    TM_EXACT_MAX_K: int = 3
    TM_MAX_K: int = 10
    THREADS: conint(ge=1) = 1
    OVERRIDE_GUARDS: bool = False

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # keyword arguments only, the environment is never read
        return (init_settings,)

    @field_validator(
        "THEOREM_MAX_LEN",
        "HERITAGE_MAX_LEN",
        "DOUBLING_MAX_LEN",
        "PATTERN_MAX_LEN",
        "SU_MAX_LEN",
        "LEAVES_MAX_LEN",
        "CENTRAL_MAX_LEN",
        "THREE_MAX_LEN",
        "THREE_CROSS_CHECK_LEN",
        "UNBORDERED_MAX_LEN",
        "PSI_MAX_PREFIX",
        "PSI_MAX_FACTOR",
        "TM_EXACT_MAX_K",
        "TM_MAX_K",
    )
    def guard_validator(cls, v, info):
        """Guards must be positive."""
        if v < 1:
            raise ValueError(f"{info.field_name} must be positive, got {v}")
        return v

    def check_guard(self, name: str, value: int) -> int:
        """
        Return ``value`` when it respects the ceiling registered for ``name``.

        :param name: a key of ``GUARD_LIMITS``.
        :param value: the requested bound.
        """
        limit = GUARD_LIMITS[name]
        if value > limit and not self.OVERRIDE_GUARDS:
            raise ResourceGuardError(
                f"{name}={value} exceeds the resource guard {limit}; "
                "pass --override-guards to run it anyway"
            )
        return value
