"""Straightening in the quantum matrix algebra and its crystal limit at q = 0."""
from .coeffs import ONE, Q, ZERO, RationalQ, parse, q_int, q_power
from .combinatorics import (
    Tableau,
    Tabloid,
    column_reading,
    insertion_tableau,
    plactic_equiv,
    recording_tableau,
    rs,
    rs_inverse,
)
from .crystal import component, lower_op, raise_op, shape_component, stats, to_dot, word_graph
from .qmatrix import NCPoly, normalize, qdet, qminor
from .straighten import (
    Bitableau,
    expand_in_bitableaux,
    expand_in_quantum_tableaux,
    q_zero_class,
    quantum_tableau,
    straighten_flag,
    verify_theorem1,
)
from .uqaction import LEFT, RIGHT, act_e, act_f, act_qeps

__version__ = "0.1.0"

__all__ = [
    "Bitableau",
    "LEFT",
    "NCPoly",
    "ONE",
    "Q",
    "RIGHT",
    "RationalQ",
    "Tableau",
    "Tabloid",
    "ZERO",
    "act_e",
    "act_f",
    "act_qeps",
    "column_reading",
    "component",
    "expand_in_bitableaux",
    "expand_in_quantum_tableaux",
    "insertion_tableau",
    "lower_op",
    "normalize",
    "parse",
    "plactic_equiv",
    "q_int",
    "q_power",
    "q_zero_class",
    "qdet",
    "qminor",
    "quantum_tableau",
    "raise_op",
    "recording_tableau",
    "rs",
    "rs_inverse",
    "shape_component",
    "stats",
    "straighten_flag",
    "to_dot",
    "verify_theorem1",
    "word_graph",
]
