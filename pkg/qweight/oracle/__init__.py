"""Brute-force ground truth on explicit stabilizer codes."""
from qweight.oracle.census import (
    FineGrainedWeights,
    entropy_profile,
    fine_grained_sl,
    fine_grained_table,
    fine_grained_unitary,
    group_sl_weights,
    random_stabilizer_state,
    reduced_weights,
    shadow_direct,
    subset_mask,
    subsystem_entropy,
    trade_off,
)
from qweight.oracle.dense import code_projector, code_state_vectors, dense_weights
from qweight.oracle.fixtures import load_fixture, parse_fixture, read_fixture, shipped_fixtures
from qweight.oracle.pauli import PauliElement
from qweight.oracle.stabilizer import StabilizerCode, make_code, purify

__all__ = [
    "PauliElement",
    "StabilizerCode",
    "make_code",
    "purify",
    "FineGrainedWeights",
    "group_sl_weights",
    "fine_grained_sl",
    "fine_grained_unitary",
    "fine_grained_table",
    "reduced_weights",
    "shadow_direct",
    "subsystem_entropy",
    "entropy_profile",
    "random_stabilizer_state",
    "trade_off",
    "subset_mask",
    "dense_weights",
    "code_projector",
    "code_state_vectors",
    "parse_fixture",
    "read_fixture",
    "load_fixture",
    "shipped_fixtures",
]
