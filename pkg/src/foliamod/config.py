"""Settings loaded from the environment (and a ``.env`` file, if present)."""

from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from foliamod.core.models import IntegratorSettings

ENV_PREFIX = "FOLIAMOD_"


class Settings(BaseModel):
    """Numeric defaults shared by the commands."""

    tol: float = Field(default=1e-10, gt=0)
    degeneracy_tol: float = Field(default=1e-10, gt=0)
    rank_rel_tol: float = Field(default=1e-6, gt=0)
    jacobian_step: float = Field(default=1e-5, ge=1e-7, le=1e-4)
    ode_rtol: float = Field(default=1e-10, gt=0)
    ode_atol: float = Field(default=1e-12, gt=0)
    ode_max_steps: int = Field(default=1_000_000, ge=1)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> Settings:
        """Read ``FOLIAMOD_*`` variables; unset ones keep their defaults."""
        load_dotenv()
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None:
                values[name] = raw
        return cls.model_validate(values)

    def integrator(self) -> IntegratorSettings:
        return IntegratorSettings(
            rtol=self.ode_rtol, atol=self.ode_atol, max_steps=self.ode_max_steps
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
