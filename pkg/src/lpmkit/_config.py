import os

LEVELS = ("fast", "oracle")
ENV_VAR = "LPMKIT_ORACLE_LEVEL"

# full 2^n subset checks are skipped above this size
FULL_CHECK_NMAX = 14

_default = "fast"


def oracle_level(requested=None):
    """Effective verification level; the environment variable wins."""
    env = os.environ.get(ENV_VAR)
    level = env or requested or _default
    if level not in LEVELS:
        raise ValueError(f"unknown verification level {level!r}, expected one of {LEVELS}")
    return level


def checking(check=None):
    if check is not None:
        return bool(check)
    return oracle_level() == "oracle"


def configure(level):
    """Set the process-wide default level (the environment still wins)."""
    global _default
    if level not in LEVELS:
        raise ValueError(f"unknown verification level {level!r}")
    _default = level
