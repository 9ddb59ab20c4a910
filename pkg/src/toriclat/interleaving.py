"""Interleaving of 2*q**2 stream qubits across the torus edges.

Stream positions are split into q blocks of 2q.  Block b owns both edge
slots of the q cells {c_b + k*(1, g) mod q}, where c_b is the b-th cell
of the tiling shape in row-major order (c_0 = (0, 0) for the canonical
shape): positions [2qb, 2qb+q) take the top edges in k order, positions
[2qb+q, 2qb+2q) the left edges.  Because the shape's cells lie in
pairwise distinct cosets, any translate of the shape touches every block
in exactly one cell, so a cluster of errors confined to one translate
with at most one errored edge per cell leaves at most one error per
block -- correctable by a per-block capability of t = 1.

The block partition depends only on the code, not on which generator
enumerates it: every generating vector spans the same subgroup, hence
the same cosets.  Swapping the generator would only reorder positions
within a block, so the canonical (1, g) layout is the one exposed.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .codes import codewords
from .lattice import SLOT_LEFT, SLOT_TOP, Cell, Edge, TorusLattice
from .rng import M64, stream
from .tessellation import Polyomino, canonical_polyomino

MODEL_ONE_PER_CELL = "one-per-cell"
MODEL_UNIFORM_CLUSTER = "uniform-cluster"

_MODEL_IDS = {
    MODEL_ONE_PER_CELL: kernels.MODEL_ONE_PER_CELL,
    MODEL_UNIFORM_CLUSTER: kernels.MODEL_UNIFORM_CLUSTER,
}


@dataclass(frozen=True)
class InterleaverMap:
    """Bijection between stream positions 0..2q**2-1 and torus edges."""

    lattice: TorusLattice
    shape: Polyomino
    anchors: tuple[Cell, ...]
    stream_to_edge: tuple[Edge, ...]
    block_grid: tuple[int, ...]

    @property
    def block_size(self) -> int:
        return 2 * self.lattice.q

    def edge_block(self, edge: Edge) -> int:
        return self.block_grid[edge.y * self.lattice.q + edge.x]

    def stream_block(self, index: int) -> int:
        return index // self.block_size


def build_interleaver(
    lattice: TorusLattice, shape: Polyomino | None = None
) -> InterleaverMap:
    """Lay the 2*q**2 stream positions onto the torus edges block by block.

    The shape must be a fundamental region; the default is the canonical
    tiling shape.  Raises ValueError when two shape cells share a coset.
    """
    q = lattice.q
    if shape is None:
        shape = canonical_polyomino(lattice)
    code = codewords(lattice)

    block_grid = [-1] * (q * q)
    for b, (bx, by) in enumerate(shape.cells):
        for kx, ky in code.codewords:
            idx = ((by + ky) % q) * q + (bx + kx) % q
            if block_grid[idx] != -1:
                raise ValueError(
                    "shape is not a fundamental region: blocks "
                    f"{block_grid[idx]} and {b} collide on cell "
                    f"({(bx + kx) % q}, {(by + ky) % q})")
            block_grid[idx] = b

    stream_edges: list[Edge] = []
    for bx, by in shape.cells:
        cells_b = [((bx + kx) % q, (by + ky) % q) for kx, ky in code.codewords]
        stream_edges.extend(Edge(x, y, SLOT_TOP) for x, y in cells_b)
        stream_edges.extend(Edge(x, y, SLOT_LEFT) for x, y in cells_b)
    if len(set(stream_edges)) != 2 * q * q:
        raise AssertionError("stream placement is not a bijection")

    return InterleaverMap(lattice, shape, shape.cells, tuple(stream_edges),
                          tuple(block_grid))


def deinterleave(mapping: InterleaverMap, errors) -> list[int]:
    """Per-block error counts for a set of errored edges."""
    counts = [0] * mapping.lattice.q
    for edge in set(errors):
        counts[mapping.edge_block(edge)] += 1
    return counts


def is_correctable(mapping: InterleaverMap, errors, t: int = 1
                   ) -> tuple[bool, list[int]]:
    """Whether every block sees at most t errors; lists offending blocks."""
    counts = deinterleave(mapping, errors)
    offending = [b for b, c in enumerate(counts) if c > t]
    return not offending, offending


def cluster_cells(lattice: TorusLattice, shape: Polyomino, anchor: Cell
                  ) -> tuple[Cell, ...]:
    """The shape's translate anchored at the given cell."""
    return tuple(lattice.translate(anchor, offset) for offset in shape.cells)


def burst_exhaustive_report(lattice: TorusLattice
                            ) -> tuple[int, int, tuple[int, int, int] | None]:
    """Enumerate all q**2 anchors x 3**q one-edge-per-cell patterns.

    Returns (cases, failures, witness); a failing witness is (ax, ay,
    pattern_index).  Limited to q <= 9, where 3**q stays enumerable.
    """
    if lattice.q > 9:
        raise ValueError("exhaustive burst enumeration is limited to q <= 9")
    mapping = build_interleaver(lattice)
    return kernels.burst_exhaustive(lattice.q, mapping.shape.cells,
                                    mapping.block_grid)


def burst_correctability_exhaustive(lattice: TorusLattice) -> bool:
    """True when every cluster pattern with at most one errored edge per
    cell is correctable with t = 1 per block."""
    _, failures, _ = burst_exhaustive_report(lattice)
    return failures == 0


def double_slot_uncorrectable_exhaustive(lattice: TorusLattice) -> bool:
    """Negative control: erroring both slots of any one cluster cell must
    be reported uncorrectable, for every anchor and every cell."""
    mapping = build_interleaver(lattice)
    for anchor in lattice.cells():
        for cell in cluster_cells(lattice, mapping.shape, anchor):
            errors = {Edge(cell[0], cell[1], SLOT_TOP),
                      Edge(cell[0], cell[1], SLOT_LEFT)}
            ok, _ = is_correctable(mapping, errors)
            if ok:
                return False
    return True


@dataclass(frozen=True)
class BurstCluster:
    """One polyomino-shaped error cluster."""

    anchor: Cell
    cells: tuple[Cell, ...]
    errored_edges: tuple[Edge, ...]


@dataclass(frozen=True)
class FailureExemplar:
    trial: int
    cluster: BurstCluster


@dataclass(frozen=True)
class SimulationStats:
    q: int
    model: str
    seed: int
    trials: int
    correctable: int
    failures: int
    exemplars: tuple[FailureExemplar, ...]


def _replay_trial(lattice: TorusLattice, shape: Polyomino, seed: int,
                  trial: int, model: str) -> BurstCluster:
    """Re-derive one trial's cluster and errors from its stream."""
    q = lattice.q
    rng = stream(seed, trial)
    ax = rng.below(q)
    ay = rng.below(q)
    cells = cluster_cells(lattice, shape, (ax, ay))
    edges: list[Edge] = []
    if model == MODEL_ONE_PER_CELL:
        for cell in cells:
            choice = rng.below(3)
            if choice == 1:
                edges.append(Edge(cell[0], cell[1], SLOT_TOP))
            elif choice == 2:
                edges.append(Edge(cell[0], cell[1], SLOT_LEFT))
    else:
        nedges = 2 * len(cells)
        perm = list(range(nedges))
        for i in range(len(cells)):
            j = i + rng.below(nedges - i)
            perm[i], perm[j] = perm[j], perm[i]
        for e in perm[:len(cells)]:
            cell = cells[e >> 1]
            edges.append(Edge(cell[0], cell[1], e & 1))
    return BurstCluster((ax, ay), cells, tuple(edges))


def simulate(lattice: TorusLattice, trials: int, seed: int,
             model: str = MODEL_ONE_PER_CELL, t: int = 1, workers: int = 1,
             max_exemplars: int = 5) -> SimulationStats:
    """Sample random cluster-error trials and count correctable ones.

    Trial i draws from an independent stream derived from (seed, i), so
    the statistics are identical for any worker count.  one-per-cell
    picks none/top/left uniformly per cluster cell; uniform-cluster draws
    q of the cluster's 2q edges without replacement, which can err both
    slots of one cell and thereby overflow a block.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if model not in _MODEL_IDS:
        raise ValueError(f"unknown model {model!r}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    mapping = build_interleaver(lattice)
    q = lattice.q
    model_id = _MODEL_IDS[model]
    seed_u64 = seed & M64

    chunk = -(-trials // workers)
    ranges = [(start, min(chunk, trials - start))
              for start in range(0, trials, chunk)]

    def run(span: tuple[int, int]):
        start, count = span
        return kernels.simulate_trials(q, mapping.shape.cells,
                                       mapping.block_grid, seed_u64, start,
                                       count, model_id, t, max_exemplars)

    if len(ranges) == 1:
        results = [run(ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            results = list(pool.map(run, ranges))

    correctable = sum(r[0] for r in results)
    failing: list[int] = []
    for r in results:
        failing.extend(r[2])
    exemplars = tuple(
        FailureExemplar(i, _replay_trial(lattice, mapping.shape, seed, i, model))
        for i in failing[:max_exemplars])
    return SimulationStats(q, model, seed, trials, correctable,
                           trials - correctable, exemplars)
