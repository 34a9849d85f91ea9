import logging
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field
from rich.console import Console
from rich.logging import RichHandler

load_dotenv()

# Enumeration beyond this is refused outright; S_10 already has 3.6M elements.
HARD_ENUMERATION_LIMIT = 10
DEFAULT_ENUMERATION_CAP = 8


class Settings(BaseModel):
    """Runtime configuration resolved from the environment (and a local .env)."""
    cache_dir: Optional[str] = Field(None, description="Directory for the on-disk character cache")
    enumeration_cap: int = Field(DEFAULT_ENUMERATION_CAP, ge=1, le=HARD_ENUMERATION_LIMIT)
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    chunk_size: int = Field(10_000, ge=1, description="Monte Carlo samples per RNG substream")
    log_level: str = Field("WARNING")

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            "cache_dir": os.getenv("BRICKWORK_CACHE_DIR"),
            "enumeration_cap": os.getenv("BRICKWORK_ENUMERATION_CAP"),
            "workers": os.getenv("BRICKWORK_WORKERS"),
            "chunk_size": os.getenv("BRICKWORK_CHUNK_SIZE"),
            "log_level": os.getenv("BRICKWORK_LOG_LEVEL"),
        }
        return cls(**{k: v for k, v in values.items() if v not in (None, "")})


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()


def configure_logging(level: Optional[str] = None) -> None:
    """Route all package loggers through rich. Only entry points call this."""
    level = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)],
        force=True,
    )
