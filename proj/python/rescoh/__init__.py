"""Exact computations for residual Eisenstein cohomology of Sp(2n)."""

import json

from . import _rescoh
from ._rescoh import RescohError, intertwining_coefficient, run_cli, wedge_weights

__all__ = [
    "RescohError",
    "validate",
    "package",
    "enumerate_data",
    "sl2_verify",
    "lshape",
    "intertwining_coefficient",
    "wedge_weights",
    "run_cli",
]


def validate(rank, chamber, alpha0, lam):
    return json.loads(_rescoh.validate_json(rank, chamber, alpha0, list(lam)))


def package(rank, chamber, alpha0, lam):
    """Full document (hc_datum, package, levi, lshape), or the violations."""
    return json.loads(_rescoh.package_json(rank, chamber, alpha0, list(lam)))


def enumerate_data(rank, weight_bound):
    return json.loads(_rescoh.enumerate_json(rank, weight_bound))


def sl2_verify(a_plus="-1", a_minus="1", germ_depth=4):
    return json.loads(_rescoh.sl2_verify_json(str(a_plus), str(a_minus), germ_depth))


def lshape(rank, parabolic, central_character_trivial=True, tempered=True, central_value_nonzero=True):
    return json.loads(
        _rescoh.lshape_json(rank, parabolic, central_character_trivial, tempered, central_value_nonzero)
    )
