"""Worst-case insertion loss of wavelength-routed optical crossbars."""

from ._oxbar import (
    Error,
    InvalidInput,
    ModelError,
    assign,
    classify,
    compare,
    evaluate,
    frontier,
    implementations,
    partition_waveguides,
    presets,
    resources,
    run_cli,
    sweep_n,
    validate,
    verify,
)

__all__ = [
    "Error",
    "InvalidInput",
    "ModelError",
    "assign",
    "classify",
    "compare",
    "evaluate",
    "frontier",
    "implementations",
    "partition_waveguides",
    "presets",
    "resources",
    "run_cli",
    "sweep_n",
    "validate",
    "verify",
]
