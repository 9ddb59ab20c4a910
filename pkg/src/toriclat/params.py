"""Code parameters, rates, and gains for the four code families compared.

All rates and gains are exact rationals; decimals appear only at output
boundaries.  Printed gain tables list the raw ratio (k/n)*(t+1); the
honest decibel value 10*log10(G) is exposed separately as gain_db.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .distance import min_distance_closed_form
from .lattice import TorusLattice

FAMILY_TORIC = "toric"
FAMILY_INTERLEAVED = "interleaved"
FAMILY_KITAEV = "kitaev"
FAMILY_BMD = "bmd"


@dataclass(frozen=True)
class CodeParams:
    """An [[n, k, d]] (or [[n, k, t]]) descriptor; d may be unset when the
    family is specified directly by its correction capability t."""

    family: str
    n: int
    k: int
    d: int | None
    t: int

    def __post_init__(self) -> None:
        if self.n <= self.k:
            raise ValueError("n must exceed k")
        if self.d is not None and self.t != (self.d - 1) // 2:
            raise ValueError(f"t={self.t} inconsistent with d={self.d}")


@dataclass(frozen=True)
class RateGain:
    rate: Fraction
    gain: Fraction

    @property
    def gain_db(self) -> float:
        return 10.0 * math.log10(self.gain)


def toric_code_params(lattice: TorusLattice) -> CodeParams:
    """[[2q, 2, d]] with d = 3 for n in {2,3,4} and d = 4 for n >= 5."""
    d = min_distance_closed_form(lattice)
    return CodeParams(FAMILY_TORIC, 2 * lattice.q, 2, d, (d - 1) // 2)


def interleaved_params(lattice: TorusLattice) -> CodeParams:
    """[[2q**2, 2q, t = q]]: q interleaved copies of the [[2q, 2, t=1]] code."""
    q = lattice.q
    return CodeParams(FAMILY_INTERLEAVED, 2 * q * q, 2 * q, None, q)


def kitaev_params(q: int) -> CodeParams:
    """[[2q**2, 2, q]] on the q x q torus."""
    if q < 5 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 5, got {q}")
    return CodeParams(FAMILY_KITAEV, 2 * q * q, 2, q, (q - 1) // 2)


def bmd_params(r: int) -> CodeParams:
    """[[2m, 2, 2r+1]] with m = 2r**2 + 2r + 1, for r >= 1."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    m = 2 * r * r + 2 * r + 1
    return CodeParams(FAMILY_BMD, 2 * m, 2, 2 * r + 1, r)


def rate_gain(params: CodeParams) -> RateGain:
    """R = k/n and G = (k/n)*(t+1), both exact."""
    rate = Fraction(params.k, params.n)
    return RateGain(rate, rate * (params.t + 1))


@dataclass(frozen=True)
class ComparisonRow:
    """Interleaved code versus the two baselines at the same q (bmd at r=q)."""

    q: int
    interleaved: tuple[CodeParams, RateGain]
    kitaev: tuple[CodeParams, RateGain]
    bmd: tuple[CodeParams, RateGain]
    rate_beats_kitaev: bool
    gain_beats_kitaev: bool
    rate_beats_bmd: bool
    gain_beats_bmd: bool

    @property
    def dominates(self) -> bool:
        return (self.rate_beats_kitaev and self.gain_beats_kitaev
                and self.rate_beats_bmd and self.gain_beats_bmd)


def compare(q: int) -> ComparisonRow:
    if q < 5 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 5, got {q}")
    lattice = TorusLattice(q)
    inter = interleaved_params(lattice)
    kitaev = kitaev_params(q)
    bmd = bmd_params(q)
    rg_i, rg_k, rg_b = rate_gain(inter), rate_gain(kitaev), rate_gain(bmd)
    return ComparisonRow(
        q,
        (inter, rg_i),
        (kitaev, rg_k),
        (bmd, rg_b),
        rate_beats_kitaev=rg_i.rate > rg_k.rate,
        gain_beats_kitaev=rg_i.gain > rg_k.gain,
        rate_beats_bmd=rg_i.rate > rg_b.rate,
        gain_beats_bmd=rg_i.gain > rg_b.gain,
    )
