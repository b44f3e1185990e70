"""Braids, entropy lower bounds and Hofer-stability experiments for periodic
orbits of time-periodic Hamiltonian flows on the disk and torus."""

from braidstab._core import (
    are_conjugate,
    braid_word_of_rotation,
    build_q,
    find_periodic_points,
    gamma_estimate,
    gf2_corpus,
    hamiltonian_value,
    hofer_norm,
    integrate,
    normal_form_str,
    q_braid_gamma,
    verify_q_structure,
    words_equal,
)

__all__ = [
    "are_conjugate",
    "braid_word_of_rotation",
    "build_q",
    "find_periodic_points",
    "gamma_estimate",
    "gf2_corpus",
    "hamiltonian_value",
    "hofer_norm",
    "integrate",
    "normal_form_str",
    "q_braid_gamma",
    "verify_q_structure",
    "words_equal",
]

__version__ = "0.1.0"
