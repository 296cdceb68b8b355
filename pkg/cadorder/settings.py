"""
Application settings and configuration.
Loads environment variables and provides typed config objects.
"""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

_REPO_ROOT = Path(__file__).resolve().parent.parent


class Settings:
    """Application settings loaded from environment variables."""

    # Experiment defaults
    SEED: int = int(os.getenv("CADORDER_SEED", "7"))
    WORKERS: int = int(os.getenv("CADORDER_WORKERS", "1"))

    # Logging
    LOG_LEVEL: str = os.getenv("CADORDER_LOG_LEVEL", "WARNING").upper()

    # SMO solver
    KKT_TOL: float = float(os.getenv("CADORDER_KKT_TOL", "1e-3"))
    MAX_PASSES: int = int(os.getenv("CADORDER_MAX_PASSES", "100000"))

    # Bundled mini-corpus
    CORPUS_DIR: str = os.getenv("CADORDER_CORPUS_DIR", str(_REPO_ROOT / "data" / "corpus"))
    LABELS_DIR: str = os.getenv("CADORDER_LABELS_DIR", str(_REPO_ROOT / "data" / "labels"))

    def validate(self) -> list[str]:
        """Check for unusable settings. Returns list of offending keys."""
        problems = []
        if self.WORKERS < 1:
            problems.append("CADORDER_WORKERS")
        if self.KKT_TOL <= 0:
            problems.append("CADORDER_KKT_TOL")
        if self.MAX_PASSES < 1:
            problems.append("CADORDER_MAX_PASSES")
        if self.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            problems.append("CADORDER_LOG_LEVEL")
        if not Path(self.CORPUS_DIR).is_dir():
            problems.append("CADORDER_CORPUS_DIR")
        if not Path(self.LABELS_DIR).is_dir():
            problems.append("CADORDER_LABELS_DIR")
        return problems


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
