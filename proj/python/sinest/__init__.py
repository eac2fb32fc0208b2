"""Python bindings for the sinest sinusoid estimation library."""

import json as _json

from ._core import (
    SinestError,
    SinusoidParams,
    circular_acf,
    frequency_from_acf,
    fundamental_frequency,
    model_acf_full,
    model_acf_reduced,
    moving_average,
    normalizing_constant,
    phase_arcsin_at_time,
    phase_arctan_at_origin,
    phase_from_crossover,
    synthesize,
)
from ._core import estimate as _estimate
from ._core import landmarks as _landmarks
from ._core import screen as _screen


def estimate(values, **kwargs):
    """Run screening and parameter recovery; returns the report as a dict."""
    return _json.loads(_estimate(list(values), **kwargs))


def screen(values, far=0.01):
    """Two-gate signal/noise decision as a dict."""
    return _json.loads(_screen(list(values), far))


def landmarks(params):
    """Zero crossings, extrema and period decomposition as a dict."""
    return _json.loads(_landmarks(params))


__all__ = [
    "SinestError",
    "SinusoidParams",
    "circular_acf",
    "estimate",
    "frequency_from_acf",
    "fundamental_frequency",
    "landmarks",
    "model_acf_full",
    "model_acf_reduced",
    "moving_average",
    "normalizing_constant",
    "phase_arcsin_at_time",
    "phase_arctan_at_origin",
    "phase_from_crossover",
    "screen",
    "synthesize",
]
