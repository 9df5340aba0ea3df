"""Exact truncated q-series, two-color partition counts and identity audits."""

from ._core import (
    InvalidSpecialization,
    ParseError,
    QPartError,
    catalog_keys,
    check_ids,
    count,
    enumerate,
    expand,
    named_series,
    verify,
)

__all__ = [
    "InvalidSpecialization",
    "ParseError",
    "QPartError",
    "catalog_keys",
    "check_ids",
    "count",
    "enumerate",
    "expand",
    "named_series",
    "verify",
]
