"""
Application-wide configuration management.

This module loads configuration from environment variables and provides
a singleton Config object shared by the group engine, the search routines
and the CLI.
"""

import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file if it exists
load_dotenv()


class Config:
    """
    Singleton configuration class for kernelsplit settings.

    Only one instance exists for the lifetime of the process; call
    ``reload()`` after changing the environment (tests do this).
    """

    _instance: Optional['Config'] = None
    _initialized: bool = False

    def __new__(cls):
        """Singleton pattern: return the same instance if already created."""
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        """Initialize configuration (only once due to Singleton pattern)."""
        if self._initialized:
            return
        self._load()
        self._initialized = True

    def _load(self):
        # ====================================================================
        # PATHS
        # ====================================================================
        project_root = Path(__file__).parent.parent.parent

        self.PROJECT_ROOT = project_root
        self.RESULTS_DIR = Path(os.getenv("RESULTS_DIR", str(project_root / "results")))
        self.LOGS_DIR = self.RESULTS_DIR / "logs"
        self.REPORTS_DIR = self.RESULTS_DIR / "reports"

        self._ensure_directories()

        # ====================================================================
        # ORDER BOUNDS
        # ====================================================================
        # Element-enumeration routines (classes, center, normal subgroups)
        self.MAX_ORDER = int(os.getenv("KERNELSPLIT_MAX_ORDER", "10000"))
        # Largest |F| handed to the automorphism search
        self.AUT_MAX_ORDER = int(os.getenv("KERNELSPLIT_AUT_MAX_ORDER", "3600"))
        self.OUT_MAX_ORDER = int(os.getenv("KERNELSPLIT_OUT_MAX_ORDER", "24"))
        self.GAMMA_MAX_ORDER = int(os.getenv("KERNELSPLIT_GAMMA_MAX_ORDER", "24"))
        self.ENUMERATION_MAX_ORDER = int(os.getenv("KERNELSPLIT_ENUMERATION_MAX_ORDER", "720"))

        # ====================================================================
        # SEARCH SETTINGS
        # ====================================================================
        self.SEARCH_TIMEOUT_SECONDS = float(os.getenv("KERNELSPLIT_SEARCH_TIMEOUT", "0"))  # 0 = no limit
        self.GENERATOR_PAIR_ATTEMPTS = int(os.getenv("KERNELSPLIT_GENERATOR_PAIR_ATTEMPTS", "4000"))
        self.SWEEP_WORKERS = int(os.getenv("KERNELSPLIT_SWEEP_WORKERS", "1"))
        self.SERIES_STRATEGY = os.getenv("KERNELSPLIT_SERIES_STRATEGY", "largest")

        # ====================================================================
        # LOGGING SETTINGS
        # ====================================================================
        self.LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
        self.LOG_FILE = self.LOGS_DIR / "kernelsplit.log"

    def reload(self):
        """Re-read every setting from the environment."""
        self._load()

    def _ensure_directories(self):
        """Create necessary directories if they don't exist."""
        for directory in (self.RESULTS_DIR, self.LOGS_DIR, self.REPORTS_DIR):
            directory.mkdir(parents=True, exist_ok=True)

    def validate(self) -> bool:
        """
        Validate that the numeric bounds are usable.

        Returns:
            bool: True if configuration is valid, False otherwise
        """
        bounds = {
            "KERNELSPLIT_MAX_ORDER": self.MAX_ORDER,
            "KERNELSPLIT_AUT_MAX_ORDER": self.AUT_MAX_ORDER,
            "KERNELSPLIT_OUT_MAX_ORDER": self.OUT_MAX_ORDER,
            "KERNELSPLIT_GAMMA_MAX_ORDER": self.GAMMA_MAX_ORDER,
        }
        valid = True
        for name, value in bounds.items():
            if value < 1:
                print(f"WARNING: {name} must be positive, got {value}")
                valid = False
        if self.SERIES_STRATEGY not in ("largest", "smallest"):
            print(f"WARNING: unknown KERNELSPLIT_SERIES_STRATEGY '{self.SERIES_STRATEGY}'")
            valid = False
        return valid


# Global singleton instance
config = Config()
