"""Fox free calculus and Magnus representations of braid-like automorphism groups."""

from .words import (
    FreeWord,
    Endomorphism,
    Gen,
    GeneratorWord,
    reduce,
    commutator,
    group_commutator,
    sigma,
    a_pure,
    eps,
    eps3,
    perm,
    identity,
    parse_word,
    parse_generators,
)
from .rings import GroupRingElem, LaurentPoly, Phi, trivialize, abelianize, GASSNER, BURAU
from .fox import abelianized_jacobian, fox_derivative, fundamental_formula_holds, derivatives_vanish_under
from .magnus import (
    RepMatrix,
    PhiIncompatible,
    NotConjugating,
    ClosureNotKnot,
    DivisionFails,
    magnus_matrix,
    gassner,
    rho,
    rho_hat_G,
    rho_hat_B,
    reduced_burau,
    alexander_polynomial,
)
from .braids import (
    BraidWord,
    Permutation,
    braid_to_endo,
    pure_generator_as_braid,
    pure_generator_as_eps,
    is_conjugating,
    is_braid,
    kernel_witness,
)

__version__ = "0.1.0"

__all__ = [
    "FreeWord",
    "Endomorphism",
    "Gen",
    "GeneratorWord",
    "reduce",
    "commutator",
    "group_commutator",
    "sigma",
    "a_pure",
    "eps",
    "eps3",
    "perm",
    "identity",
    "parse_word",
    "parse_generators",
    "RepMatrix",
    "PhiIncompatible",
    "NotConjugating",
    "ClosureNotKnot",
    "DivisionFails",
    "magnus_matrix",
    "gassner",
    "rho",
    "rho_hat_G",
    "rho_hat_B",
    "reduced_burau",
    "alexander_polynomial",
    "BraidWord",
    "Permutation",
    "braid_to_endo",
    "pure_generator_as_braid",
    "pure_generator_as_eps",
    "is_conjugating",
    "is_braid",
    "kernel_witness",
    "GroupRingElem",
    "LaurentPoly",
    "Phi",
    "trivialize",
    "abelianize",
    "GASSNER",
    "BURAU",
    "abelianized_jacobian",
    "fox_derivative",
    "fundamental_formula_holds",
    "derivatives_vanish_under",
]
