"""Enumeration caps, overridable from the environment."""

import os

DEFAULT_ENUMERATION_LIMIT = 10**6
DEFAULT_AUT_LIMIT = 200
LIMIT_ENV = "TWISTMAT_LIMIT"


def enumeration_limit(default: int | None = None) -> int:
    """Maximum finite group size; TWISTMAT_LIMIT overrides `default`."""
    raw = os.environ.get(LIMIT_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ENUMERATION_LIMIT if default is None else default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{LIMIT_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{LIMIT_ENV} must be a positive integer, got {raw!r}")
    return value
