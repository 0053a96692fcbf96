"""Enumeration caps and default series order.

Every default can be overridden through an environment variable carrying the
``TUNNELKIT_`` prefix, e.g. ``TUNNELKIT_DYCK_CAP=18``.
"""

import os
from dataclasses import dataclass

from .errors import CapExceeded

ENV_PREFIX = "TUNNELKIT_"


def _env_int(name, default):
    raw = os.environ.get(ENV_PREFIX + name)
    return default if raw is None else int(raw)


@dataclass(frozen=True)
class Limits:
    dyck_cap: int = 16
    perm_cap: int = 10
    series_order: int = 8

    @classmethod
    def from_env(cls):
        return cls(
            dyck_cap=_env_int("DYCK_CAP", cls.dyck_cap),
            perm_cap=_env_int("PERM_CAP", cls.perm_cap),
            series_order=_env_int("SERIES_ORDER", cls.series_order),
        )


def limits():
    return Limits.from_env()


def check_cap(n, cap, what="n"):
    if cap is not None and n > cap:
        raise CapExceeded(f"{what}={n} exceeds the enumeration cap {cap}")
