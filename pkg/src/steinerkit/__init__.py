"""Steiner systems, the point configurations they index, and checked invariants.

Closed forms live in :mod:`steinerkit.formulas`; everything else computes the
same quantities by enumeration so the two can be compared.
"""

__version__ = "0.1.0"

from .designs import (
    BlockFamily,
    DesignError,
    DesignParams,
    SteinerSystem,
    bundled,
    complement,
    construct_sts,
    fano,
    load_design,
    s_2_4_13,
    search_design,
    verify_design,
)
from .monomials import CoverIdealSpec, alpha_symbolic, containment_witness, in_symbolic_power
from .simplicial import delta_of_family, h_vector_oracle, hochster_betti, is_matroid
from .geometry import configuration_points, vandermonde_arrangement
from .codes import code_params, hyp

__all__ = [
    "BlockFamily", "DesignError", "DesignParams", "SteinerSystem", "bundled", "complement",
    "construct_sts", "fano", "load_design", "s_2_4_13", "search_design", "verify_design",
    "CoverIdealSpec", "alpha_symbolic", "containment_witness", "in_symbolic_power",
    "delta_of_family", "h_vector_oracle", "hochster_betti", "is_matroid",
    "configuration_points", "vandermonde_arrangement", "code_params", "hyp",
]
