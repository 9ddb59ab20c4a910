"""Pure-Python kernels for the burst-exhaustion sweep and the seeded
channel simulation.

toriclat.kernels swaps in the compiled twin (_kernels_c) when it was
built; both implementations follow the same draw sequences and must
return identical results.

Shared conventions:
  * cells       -- the tiling shape's offsets, row-major; cell i of a
                   cluster anchored at (ax, ay) is ((ax+px) % q, (ay+py) % q).
  * block_grid  -- length q*q, block index of the cell at x + q*y... stored
                   row-major as index y*q + x.
  * a pattern assigns each cluster cell one of {0 none, 1 top, 2 left};
    patterns are ordered like itertools.product((0,1,2), repeat=ncells),
    i.e. base-3 integers with cell 0 as the most significant digit.
  * trial draws -- stream(seed, trial): anchor x, anchor y, then either
    one choice in range(3) per cell (model 0) or a partial Fisher-Yates
    over the cluster's 2*ncells edges taking the first ncells (model 1).
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .rng import stream

MODEL_ONE_PER_CELL = 0
MODEL_UNIFORM_CLUSTER = 1


def burst_exhaustive(
    q: int, cells: Sequence[tuple[int, int]], block_grid: Sequence[int]
) -> tuple[int, int, tuple[int, int, int] | None]:
    """Try every anchor and every one-edge-per-cell error pattern.

    A pattern fails when two chosen edges land in the same code block.
    Returns (cases, failures, witness); the witness is (ax, ay,
    pattern_index) of the first failing case, or None.
    """
    ncells = len(cells)
    patterns = list(product((0, 1, 2), repeat=ncells))
    # the block of an edge ignores the slot, so only the selected cells matter
    selections = [tuple(i for i, ch in enumerate(pat) if ch) for pat in patterns]
    cases = 0
    failures = 0
    witness: tuple[int, int, int] | None = None
    for ay in range(q):
        for ax in range(q):
            masks = [1 << block_grid[((ay + py) % q) * q + (ax + px) % q]
                     for px, py in cells]
            for pi, sel in enumerate(selections):
                acc = 0
                for i in sel:
                    m = masks[i]
                    if acc & m:
                        failures += 1
                        if witness is None:
                            witness = (ax, ay, pi)
                        break
                    acc |= m
            cases += len(selections)
    return cases, failures, witness


def simulate_trials(
    q: int,
    cells: Sequence[tuple[int, int]],
    block_grid: Sequence[int],
    seed: int,
    start: int,
    count: int,
    model: int,
    t: int = 1,
    max_record: int = 5,
) -> tuple[int, int, list[int]]:
    """Run trials [start, start+count); return (correctable, failures,
    first failing trial indices, at most max_record of them)."""
    ncells = len(cells)
    nedges = 2 * ncells
    correctable = 0
    failing: list[int] = []
    for trial in range(start, start + count):
        rng = stream(seed, trial)
        ax = rng.below(q)
        ay = rng.below(q)
        blocks = [block_grid[((ay + py) % q) * q + (ax + px) % q]
                  for px, py in cells]
        counts = [0] * q
        if model == MODEL_ONE_PER_CELL:
            for i in range(ncells):
                if rng.below(3):
                    counts[blocks[i]] += 1
        elif model == MODEL_UNIFORM_CLUSTER:
            perm = list(range(nedges))
            for i in range(ncells):
                j = i + rng.below(nedges - i)
                perm[i], perm[j] = perm[j], perm[i]
                counts[blocks[perm[i] >> 1]] += 1
        else:
            raise ValueError(f"unknown model {model}")
        if max(counts) <= t:
            correctable += 1
        elif len(failing) < max_record:
            failing.append(trial)
    return correctable, count - correctable, failing
