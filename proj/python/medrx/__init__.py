"""Mixer-first MedRadio receiver front-end modeling toolkit."""

from medrx._core import (  # noqa: F401
    __version__,
    berlab,
    config,
    devicemodels,
    explorer,
    linkbudget,
    npathsim,
)

__all__ = [
    "__version__",
    "berlab",
    "config",
    "devicemodels",
    "explorer",
    "linkbudget",
    "npathsim",
]
