"""Cyclic lattice codes on q x q torus grids for all odd q >= 5.

Builds the code spanned by (1, 2(n-1)) on the q x q torus, its full
generator set, the Mannheim minimum distance (brute force and closed
form), the polyomino fundamental regions that tile the lattice, the
[[2q, 2, d]] / [[2q**2, 2q, t=q]] parameter families with rate and gain
comparisons, and the burst-error interleaver with its correctability
guarantees.
"""

from .codes import (CodewordSet, GeneratorSet, codewords, generates_same_code,
                    generator_set, is_perfect, is_sum_of_two_squares,
                    verify_determinant)
from .distance import (DistanceReport, distance_report, mannheim_weight,
                       min_distance_bruteforce, min_distance_closed_form,
                       move_vectors)
from .interleaving import (BurstCluster, FailureExemplar, InterleaverMap,
                           SimulationStats, build_interleaver,
                           burst_correctability_exhaustive, deinterleave,
                           is_correctable, simulate)
from .lattice import (SLOT_LEFT, SLOT_TOP, Cell, Edge, TorusLattice, Vector,
                      symmetric_residue)
from .params import (CodeParams, ComparisonRow, RateGain, bmd_params, compare,
                     interleaved_params, kitaev_params, rate_gain,
                     toric_code_params)
from .tessellation import (Polyomino, Tiling, canonical_polyomino,
                           is_fundamental_region, lee_sphere, render_ascii,
                           render_svg, tessellate)

__version__ = "0.1.0"

__all__ = [
    "BurstCluster", "Cell", "CodeParams", "CodewordSet", "ComparisonRow",
    "DistanceReport", "Edge", "FailureExemplar", "GeneratorSet",
    "InterleaverMap", "Polyomino", "RateGain", "SLOT_LEFT", "SLOT_TOP",
    "SimulationStats", "Tiling", "TorusLattice", "Vector", "bmd_params",
    "build_interleaver", "burst_correctability_exhaustive",
    "canonical_polyomino", "codewords", "compare", "deinterleave",
    "distance_report", "generates_same_code", "generator_set",
    "interleaved_params", "is_correctable", "is_fundamental_region",
    "is_perfect", "is_sum_of_two_squares", "kitaev_params", "lee_sphere",
    "mannheim_weight", "min_distance_bruteforce", "min_distance_closed_form",
    "move_vectors", "rate_gain", "render_ascii", "render_svg", "simulate",
    "symmetric_residue", "tessellate", "toric_code_params",
    "verify_determinant",
]
