"""Isolation forests with selectable split-guiding criteria.

Thin wrapper around the compiled _faircut module. The extension lives inside
this package in an installed wheel; in a plain CMake build tree it sits on
PYTHONPATH next to the sources instead, hence the import fallback.
"""

try:
    from ._faircut import (
        ConfigError,
        DataError,
        IoError,
        Model,
        aupr,
        auroc,
        expected_depth,
        fit,
    )
except ImportError:
    from _faircut import (
        ConfigError,
        DataError,
        IoError,
        Model,
        aupr,
        auroc,
        expected_depth,
        fit,
    )

__all__ = [
    "ConfigError",
    "DataError",
    "IoError",
    "Model",
    "aupr",
    "auroc",
    "expected_depth",
    "fit",
]
