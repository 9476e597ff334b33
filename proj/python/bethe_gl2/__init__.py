"""Bethe algebra of the gl_2 Gaudin model.

Thin wrappers over the C++ core. Exact values come back as ``fractions.Fraction``;
floating results stay decimal strings so no precision is lost.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ConfigError, __version__

__all__ = [
    "ConfigError",
    "__version__",
    "seeded_points",
    "universal_operator",
    "decompose",
    "leaves",
    "eliminate",
    "character",
    "verify",
]


def _pts(points):
    return [str(Fraction(p)) for p in points] if points is not None else []


def seeded_points(n, seed=1):
    return [Fraction(p) for p in _core.seeded_points(n, seed)]


def universal_operator(n, points=None, K="nilpotent", seed=1):
    """W as coefficients (lowest degree first) and the matrices U_1..U_n."""
    raw = json.loads(_core.operator_json(n, _pts(points), K, seed))
    return {
        "points": [Fraction(p) for p in raw["points"]],
        "W": [Fraction(c) for c in raw["W"]],
        "U": [[[Fraction(x) for x in row] for row in u] for u in raw["U"]],
    }


def decompose(n, points=None, seed=1):
    raw = json.loads(_core.decompose_json(n, _pts(points), seed))
    for b in raw["blocks"]:
        b["eigenvalue"] = Fraction(b["eigenvalue"])
        b["syt"] = int(b["syt"])
    return raw


def leaves(n, points=None, precision=128, seed=1):
    return json.loads(_core.leaves_json(n, _pts(points), precision, seed))


def eliminate(k, d):
    return json.loads(_core.eliminate_json(k, d))


def character(k, d, order=10):
    return json.loads(_core.character_json(k, d, order))


def verify(suites=("all",), **options):
    """Runs check suites; options are the certificate config keys (n, seed, ...)."""
    cfg = dict(options)
    cfg["suite"] = list(suites)
    if "seed" in cfg:
        cfg["seed"] = str(cfg["seed"])
    return json.loads(_core.verify_json(json.dumps(cfg)))
