"""r-noncommuting graphs of finite rings: construction, analysis and verification."""

from .graphcore import UNBOUNDED, UNDECIDED, UNREACHABLE, SimpleGraph, build_delta, build_gamma
from .isoclinism import IsoclinismWitness, find_isoclinism, verify_witness
from .ringcore import (
    FiniteRing,
    RingAxiomError,
    center,
    commutator,
    commutator_set,
    load_ring,
    make_E,
    make_F,
    make_Zn,
    parse_element,
    validate_ring,
)

__all__ = [
    "FiniteRing", "RingAxiomError", "center", "commutator", "commutator_set", "load_ring",
    "make_E", "make_F", "make_Zn", "parse_element", "validate_ring",
    "SimpleGraph", "build_gamma", "build_delta", "UNBOUNDED", "UNREACHABLE", "UNDECIDED",
    "IsoclinismWitness", "find_isoclinism", "verify_witness",
]
