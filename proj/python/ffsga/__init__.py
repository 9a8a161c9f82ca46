"""Flexible flow shop scheduling with a dual heterogeneous island GA."""

from ._core import (
    ConfigError,
    ContractError,
    Instance,
    IoError,
    estimate_emax,
    evaluate_assignment,
    generate_instance,
    load_instance,
    mean_total_load,
    save_instance,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "ContractError",
    "Instance",
    "IoError",
    "estimate_emax",
    "evaluate_assignment",
    "generate_instance",
    "load_instance",
    "mean_total_load",
    "save_instance",
    "solve",
    "__version__",
]
