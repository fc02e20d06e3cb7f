"""Configuration management for strongce"""
import os
from typing import Optional
from dotenv import load_dotenv

load_dotenv()


def _optional_int(raw: Optional[str]) -> Optional[int]:
    if raw is None or raw.strip() == "":
        return None
    return int(raw)


class Settings:
    """Settings loaded from environment variables"""

    def __init__(self):
        # Randomness
        self.seed: Optional[int] = _optional_int(os.getenv("STRONGCE_SEED"))

        # Logging
        self.log_level: str = os.getenv("STRONGCE_LOG_LEVEL", "INFO").upper()
        self.log_file: str = os.getenv("STRONGCE_LOG_FILE", "")

        # Search limits for the exact oracle and the fallback
        self.node_limit: int = int(os.getenv("STRONGCE_NODE_LIMIT", "2000000"))
        self.time_limit: float = float(os.getenv("STRONGCE_TIME_LIMIT", "60"))
        self.fallback_restarts: int = int(os.getenv("STRONGCE_FALLBACK_RESTARTS", "20"))

        # Engine
        self.list_size: int = int(os.getenv("STRONGCE_LIST_SIZE", "22"))
        self.debug_checks: bool = os.getenv("STRONGCE_DEBUG_CHECKS", "0").lower() in ("1", "true", "yes")

    def resolve_seed(self, cli_seed: Optional[int]) -> int:
        """STRONGCE_SEED wins over the command line; 0 when neither is given"""
        if self.seed is not None:
            return self.seed
        return cli_seed if cli_seed is not None else 0


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get singleton settings instance"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Forget the cached settings so the environment is read again"""
    global _settings
    _settings = None
