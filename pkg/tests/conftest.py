"""Shared pytest configuration.

The compiled kernels pay a one-off jit cost on first call, which would
trip hypothesis' per-example deadline, so the deadline is disabled.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "elfuse",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("elfuse")
