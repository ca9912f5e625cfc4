from .dot import crystal_dot
from .highest_weight import (
    a_highest_weight_vertices,
    all_unbarred,
    classical_component_hw,
    e_set,
    enumerate_highest_weight,
    highest_weight_vertices,
    hw_alphabet,
    tensor_crystal,
    weight_multiplicity,
)
from .letters import Letter, LetterCrystal, RowWord, letter_crystal, letter_str, parse_letter
from .tensor import TensorCrystal, TensorVertex, flatten, parse_vertex, regroup, shape_of, word_str
from .theta import in_hat, theta, theta_by_rewriting, theta_row

__all__ = [
    "Letter",
    "LetterCrystal",
    "RowWord",
    "TensorCrystal",
    "TensorVertex",
    "a_highest_weight_vertices",
    "all_unbarred",
    "classical_component_hw",
    "crystal_dot",
    "e_set",
    "enumerate_highest_weight",
    "flatten",
    "highest_weight_vertices",
    "hw_alphabet",
    "in_hat",
    "letter_crystal",
    "letter_str",
    "parse_letter",
    "parse_vertex",
    "regroup",
    "shape_of",
    "tensor_crystal",
    "theta",
    "theta_by_rewriting",
    "theta_row",
    "weight_multiplicity",
    "word_str",
]
