"""
Configuration management using environment variables
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Application configuration"""

    # Group construction
    ELEMENT_CAP: int = int(os.getenv("FUSION_ELEMENT_CAP", "100000"))

    # Subgroup lattice walks over Sylow subgroups
    SYLOW_CAP: int = int(os.getenv("FUSION_SYLOW_CAP", "512"))

    # Brute-force normal complement oracle
    ORACLE_MAX_ORDER: int = int(os.getenv("FUSION_ORACLE_MAX_ORDER", "400"))

    # Verification harness
    CATALOG_MAX_ORDER: int = int(os.getenv("FUSION_CATALOG_MAX_ORDER", "400"))
    FULL_WITNESS: bool = _env_flag("FUSION_FULL_WITNESS", "false")
    WORKERS: int = int(os.getenv("FUSION_WORKERS", "1"))

    # Logging
    LOG_LEVEL: str = os.getenv("FUSION_LOG_LEVEL", "WARNING")

    @classmethod
    def get_limits(cls) -> dict:
        """Get the computation caps as a plain dict"""
        return {
            "element_cap": cls.ELEMENT_CAP,
            "sylow_cap": cls.SYLOW_CAP,
            "oracle_max_order": cls.ORACLE_MAX_ORDER,
            "catalog_max_order": cls.CATALOG_MAX_ORDER,
        }

    @classmethod
    def validate_limits(cls) -> list:
        """Validate computation caps"""
        errors = []

        for name, value in cls.get_limits().items():
            if value < 1:
                errors.append(f"{name} must be positive (got {value})")
        if cls.CATALOG_MAX_ORDER > cls.ORACLE_MAX_ORDER:
            errors.append(
                f"catalog_max_order ({cls.CATALOG_MAX_ORDER}) exceeds "
                f"oracle_max_order ({cls.ORACLE_MAX_ORDER})"
            )
        if cls.WORKERS < 1:
            errors.append(f"FUSION_WORKERS must be at least 1 (got {cls.WORKERS})")

        return errors

    @classmethod
    def validate_logging_config(cls) -> list:
        """Validate logging configuration"""
        errors = []

        if cls.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"FUSION_LOG_LEVEL has unknown level {cls.LOG_LEVEL!r}")

        return errors


# Global config instance
config = Config()
