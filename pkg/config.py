import os
from fractions import Fraction

import yaml
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name, default):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


class Config:
    # Fixture with the table of pointless curves over F_2
    FIXTURES_PATH = os.getenv(
        "POINTLESS_FIXTURES",
        os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "pointless_table_q2.txt"),
    )

    # Field arithmetic
    FIELD_CEILING = int(os.getenv("POINTLESS_FIELD_CEILING", 2 ** 16))

    # Group order factorization
    FACTOR_TRIAL_BOUND = int(os.getenv("POINTLESS_FACTOR_TRIAL_BOUND", 10 ** 6))
    FACTOR_FALLBACK = _env_bool("POINTLESS_FACTOR_FALLBACK", True)

    # Discrete logarithms and unit group structure
    DLOG_TABLE_LIMIT = int(os.getenv("POINTLESS_DLOG_TABLE_LIMIT", 2 ** 20))
    ONE_UNIT_LIMIT = int(os.getenv("POINTLESS_ONE_UNIT_LIMIT", 2 ** 12))

    # Subgroup and character enumeration
    SUBGROUP_ORDER_LIMIT = int(os.getenv("POINTLESS_SUBGROUP_ORDER_LIMIT", 2 ** 24))
    MAX_COORDINATES = int(os.getenv("POINTLESS_MAX_COORDINATES", 8))
    CHARACTER_LIMIT = int(os.getenv("POINTLESS_CHARACTER_LIMIT", 10 ** 5))

    # Seed for generator sampling (recorded in reports)
    SEED = int(os.getenv("POINTLESS_SEED", 20120201))

    # Parameter selection tunables
    C1 = Fraction(os.getenv("POINTLESS_C1", "1/48"))
    C2 = Fraction(os.getenv("POINTLESS_C2", "1/2"))
    WINDOW_LOW = Fraction(os.getenv("POINTLESS_WINDOW_LOW", "1"))
    WINDOW_HIGH = Fraction(os.getenv("POINTLESS_WINDOW_HIGH", "12"))
    C_Q = int(os.getenv("POINTLESS_CQ", 2))

    # Table rows from this n on are only run with --deep
    DEEP_FROM = int(os.getenv("POINTLESS_DEEP_FROM", 14))

    # Logging
    LOGS_DIR = os.getenv("POINTLESS_LOGS_DIR", "logs")
    LOG_TO_FILE = _env_bool("POINTLESS_LOG_TO_FILE", False)

    @classmethod
    def load_overrides(cls, path=None):
        """
        Apply overrides from a YAML mapping of attribute names to values

        Args:
            path: YAML file; defaults to the POINTLESS_CONFIG environment variable

        Returns:
            Dictionary of the attributes that were overridden
        """
        path = path or os.getenv("POINTLESS_CONFIG")
        if not path:
            return {}

        with open(path) as f:
            data = yaml.safe_load(f) or {}

        applied = {}
        for key, value in data.items():
            name = key.upper()
            if not hasattr(cls, name) or name.startswith("_"):
                raise ValueError(f"Unknown configuration key in {path}: {key}")
            current = getattr(cls, name)
            if isinstance(current, Fraction):
                value = Fraction(str(value))
            elif isinstance(current, bool):
                value = bool(value)
            elif isinstance(current, int):
                value = int(value)
            setattr(cls, name, value)
            applied[name] = value
        return applied
