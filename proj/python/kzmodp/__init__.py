"""Arithmetic solutions of the KZ system mod p."""

import json

from ._core import (
    InvalidPoint,
    KzParams,
    NonzeroWronskian,
    NotAdmissible,
    NotPrime,
    descend,
    reducibility,
    solution_rank,
    solve,
    sweep_tsv,
    verify_symbolic,
)
from . import _core

__all__ = [
    "InvalidPoint",
    "KzParams",
    "NonzeroWronskian",
    "NotAdmissible",
    "NotPrime",
    "annihilator",
    "descend",
    "params",
    "qpoly",
    "reducibility",
    "solution_rank",
    "solve",
    "sweep_tsv",
    "verify_symbolic",
]


def params(p, q, n):
    return KzParams.derive(p, q, n)


def annihilator(params, z):
    """Report dict with keys dim, expected, relations_span, basis."""
    return json.loads(_core.ann_json(params, list(z)))


def qpoly(params, z, i):
    return json.loads(_core.qpoly_json(params, list(z), i))
