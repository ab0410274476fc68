"""Finite-scale certification of latching objects, cofibration classes,
goodness and realization for truncated symmetric spectra in pointed
simplicial sets.

Everything is computed with explicit finite tables: monomorphism and
isomorphism verdicts are decidable, every colimit comes with its
universal factorization, and every failed check carries a replayable
witness.  All verdicts are truncation-qualified.
"""

from .pointed import (
    CoconeResult,
    MismatchError,
    PointedMap,
    PointedSet,
    coequalizer,
    compose,
    is_epi,
    is_iso,
    is_mono,
    mono_witness,
    pullback,
    pushout,
    smash_sets,
    wedge,
)
from .reports import CheckReport, Witness
from .simplicial import (
    BisimplicialSet,
    SimplicialMap,
    SimplicialSet,
    TruncationError,
    circle,
    diagonal,
    is_mono_ssetmap,
    smash_ssets,
    sphere,
    validate_bisimplicial,
    validate_sset,
    validate_sset_map,
)
from .spectra import (
    SpectrumMap,
    SymSpectrum,
    bar_s,
    bar_to_sphere,
    day_tensor,
    is_flat_cofibration,
    is_levelwise_cofibration,
    is_positive_flat,
    is_positive_levelwise,
    latching_corner,
    latching_map_of_spectrum_map,
    smash_over_s,
    spectral_latching,
    sphere_spectrum,
    unit_oracle,
    validate_spectrum,
    validate_spectrum_map,
)
from .reedy import (
    SimplicialSpectrum,
    SimplicialSpectrumMap,
    bisimplicial_reedy_report,
    is_good,
    is_positive_good,
    is_reedy_cofibration,
    pointwise_cofiber,
    realize,
    realize_map,
    reedy_cofibrant_report,
    simplicial_latching,
    validate_simplicial_spectrum,
    validate_simplicial_spectrum_map,
)
from .generators import GenConfig, GeneratorStarvation
from .suites import SuiteSummary, run_suite

__version__ = "0.1.0"
