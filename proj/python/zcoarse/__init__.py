"""Word metrics on Z, g-adic and pro-Q residues, power-invertibility spectra."""

from ._zcoarse import (
    __version__,
    compare_bases,
    distance,
    divergence_witness,
    inverse_sequence,
    mod_inverse,
    oracle_length,
    partition,
    q_star,
    rectify_multiplication,
    run,
    special_rep,
    spectrum,
    spectrum_profinite,
    validate_formula,
    word_length,
)

__all__ = [
    "__version__",
    "compare_bases",
    "distance",
    "divergence_witness",
    "inverse_sequence",
    "mod_inverse",
    "oracle_length",
    "partition",
    "q_star",
    "rectify_multiplication",
    "run",
    "special_rep",
    "spectrum",
    "spectrum_profinite",
    "validate_formula",
    "word_length",
]
