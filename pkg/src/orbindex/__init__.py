"""Exact equivariant and orbifold index computations.

The fixed-point side (``strata`` + ``charform`` + ``engine``) and the
representation-theoretic side (``oracle``) are computed independently and
compared in exact cyclotomic arithmetic.
"""
from .cyclotomic import Cyclotomic, cyc_arith, cyc_conjugate, cyc_root, cyc_to_rational
from .engine import (
    compute,
    decompose,
    fourier_inversion,
    index_by_cyclic,
    index_by_elements,
    lefschetz_from_strata,
    pair_inform,
    pair_twist,
    uhat_classes,
)
from .errors import OrbIndexError
from .groups import (
    ClassFunction,
    CyclicClass,
    FiniteGroup,
    Representation,
    WallpaperGroup,
    epsilon_trivial,
    extend_by_zero,
    irreducible_representations,
)
from .oracle import closed_form_L, kernel_character, lefschetz_average
from .report import IndexReport, emit_report
from .strata import (
    ManifoldModel,
    catalog,
    dump_model,
    football,
    instantiate,
    load_model,
    symprod_s2,
    torusrot,
    validate_model,
    wallpaper,
)

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "cyc_arith",
    "cyc_conjugate",
    "cyc_root",
    "cyc_to_rational",
    "compute",
    "decompose",
    "fourier_inversion",
    "index_by_cyclic",
    "index_by_elements",
    "lefschetz_from_strata",
    "pair_inform",
    "pair_twist",
    "uhat_classes",
    "OrbIndexError",
    "ClassFunction",
    "CyclicClass",
    "FiniteGroup",
    "Representation",
    "WallpaperGroup",
    "epsilon_trivial",
    "extend_by_zero",
    "irreducible_representations",
    "closed_form_L",
    "kernel_character",
    "lefschetz_average",
    "IndexReport",
    "emit_report",
    "ManifoldModel",
    "catalog",
    "dump_model",
    "football",
    "instantiate",
    "load_model",
    "symprod_s2",
    "torusrot",
    "validate_model",
    "wallpaper",
]
