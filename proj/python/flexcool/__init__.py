"""Python front end for the flexcool simulator.

Documents are plain dicts with the same layout as the CLI's JSON config files.
"""

import json

from . import _flexcool
from ._flexcool import (
    ConfigError,
    UnstableSystem,
    is_stable,
    log_negativity,
    solve_lyapunov,
    thermal_occupation,
)

__all__ = [
    "ConfigError",
    "UnstableSystem",
    "drift_diffusion",
    "is_stable",
    "log_negativity",
    "preset",
    "presets",
    "simulate",
    "solve_lyapunov",
    "sweep",
    "thermal_occupation",
]


def presets():
    return list(_flexcool.preset_names())


def preset(name, series="", overrides=()):
    """Resolved config document of a named scenario."""
    return json.loads(_flexcool.preset_document(name, series, list(overrides)))


def simulate(document, overrides=()):
    return json.loads(_flexcool.simulate(json.dumps(document), list(overrides)))


def sweep(document, overrides=(), threads=0):
    """Returns {"meta": ..., "rows": [...]} with the CSV column names as keys."""
    return json.loads(_flexcool.sweep(json.dumps(document), list(overrides), threads))


def drift_diffusion(document):
    return _flexcool.drift_diffusion(json.dumps(document))
