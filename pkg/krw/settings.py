"""Environment settings for krw

Values come from the process environment (prefix KRW_) or an optional .env
file in the working directory.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class KrwSettings(BaseSettings):
    """Application settings loaded from environment"""

    model_config = SettingsConfigDict(env_prefix="KRW_", env_file=".env", extra="ignore")

    iter_cap: int = Field(default=10_000, ge=1, description="Filtration reduction iteration cap")
    log_level: str = Field(default="WARNING", description="Logging level")
    replay_config_path: str = Field(default="./config/replay.yaml", description="Default replay config")
    maps_dir: str = Field(default="./config/maps", description="Directory of map-definition files")


def get_settings() -> KrwSettings:
    """Factory function to read the current settings

    Returns:
        Settings reflecting the environment at call time
    """
    return KrwSettings()
