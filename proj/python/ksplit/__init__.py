"""Exact K-terminal network reliability by separator splitting."""

from ._core import (
    LabelledPartition,
    Network,
    bell,
    count_reduced_states,
    count_states,
    enumerate_states,
    join,
    lambda_,
    lattice,
    m_indicator,
    moebius,
    moebius_bruteforce,
    refines,
    restrict,
    star,
)

__all__ = [
    "LabelledPartition",
    "Network",
    "bell",
    "count_reduced_states",
    "count_states",
    "enumerate_states",
    "join",
    "lambda_",
    "lattice",
    "m_indicator",
    "moebius",
    "moebius_bruteforce",
    "refines",
    "restrict",
    "star",
]
