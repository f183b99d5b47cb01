"""Exact arithmetic on the curve x^2+y^2+z^2+w^2 = x^3+y^3+z^3+w^3 = 0 and its quotients."""

from ._core import (
    catalog_labels,
    count,
    equation,
    groebner,
    igusa,
    j_invariant,
    lpoly,
    lpoly_row,
    molien,
    points_row,
    quotient_ideal,
    verify,
)

__all__ = [
    "catalog_labels",
    "count",
    "equation",
    "groebner",
    "igusa",
    "j_invariant",
    "lpoly",
    "lpoly_row",
    "molien",
    "points_row",
    "quotient_ideal",
    "verify",
]
