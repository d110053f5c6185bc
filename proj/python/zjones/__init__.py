"""Colour power series of knots, Borel resummation and diagnostics."""

import json

from ._zjones import (
    ZJonesError,
    canonical,
    cli,
    cv_weight,
    kashaev_closed,
    kashaev_quadrature,
    rep_to_color,
    weight_character,
)
from . import _zjones

__all__ = [
    "ZJonesError",
    "canonical",
    "cli",
    "cv_weight",
    "gevrey",
    "kashaev_closed",
    "kashaev_quadrature",
    "rep_to_color",
    "resum",
    "series",
    "weight_character",
]


def series(knot, order, colour="s", normalized=False):
    """Exact h-series as a dict with rational coefficients stored as strings."""
    return json.loads(_zjones.series_json(knot, order, str(colour), normalized))


def resum(m, p, s0, h, theta=0.0, tol=1e-9):
    out = json.loads(_zjones.resum_json(m, p, complex(s0), complex(h), theta, tol))
    out["value"] = complex(out["value"]["re"], out["value"]["im"])
    return out


def gevrey(knot, s0="1/2", order=40):
    return json.loads(_zjones.gevrey_json(knot, str(s0), order))
