import pytest

from toriclat import kernels
from toriclat.interleaving import build_interleaver
from toriclat.lattice import TorusLattice
from toriclat.rng import M64, SplitMix64, mix64, stream


def test_mix64_is_stable():
    # frozen values pin the generator across refactors and backends
    assert mix64(0) == 0
    assert mix64(1) == 6238072747940578789
    assert mix64(0x9E3779B97F4A7C15) == 16294208416658607535


def test_splitmix_reference_sequence():
    # the published first three outputs of splitmix64 for seed 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_streams_are_reproducible_and_independent():
    a = stream(42, 7)
    b = stream(42, 7)
    c = stream(42, 8)
    seq_a = [a.next_u64() for _ in range(8)]
    assert seq_a == [b.next_u64() for _ in range(8)]
    assert seq_a != [c.next_u64() for _ in range(8)]


def test_below_bounds_and_edge_cases():
    rng = SplitMix64(123)
    for n in (1, 2, 3, 5, 64, 1000):
        for _ in range(50):
            assert 0 <= rng.below(n) < n
    assert all(SplitMix64(i).below(1) == 0 for i in range(20))
    with pytest.raises(ValueError):
        rng.below(0)


def test_negative_seed_masks_like_two_complement():
    assert [stream(-1, 0).next_u64() for _ in range(4)] == \
        [stream(M64, 0).next_u64() for _ in range(4)]


def _interleaver_args(q):
    mapping = build_interleaver(TorusLattice(q))
    return q, mapping.shape.cells, mapping.block_grid


needs_compiled = pytest.mark.skipif(
    kernels.compiled is None, reason="compiled kernels not built")


@needs_compiled
def test_backends_agree_on_burst_exhaustive():
    for q in (5, 7):
        args = _interleaver_args(q)
        assert kernels.pure.burst_exhaustive(*args) == \
            kernels.compiled.burst_exhaustive(*args)


@needs_compiled
@pytest.mark.parametrize("model", [0, 1])
def test_backends_agree_on_simulation(model):
    q, cells, grid = _interleaver_args(5)
    pure = kernels.pure.simulate_trials(q, cells, grid, 42, 0, 2000, model)
    comp = kernels.compiled.simulate_trials(q, cells, grid, 42, 0, 2000, model)
    assert pure == comp


@needs_compiled
def test_backends_agree_on_chunked_simulation():
    q, cells, grid = _interleaver_args(7)
    whole = kernels.pure.simulate_trials(q, cells, grid, 9, 0, 1000, 1)
    parts = [kernels.compiled.simulate_trials(q, cells, grid, 9, s, 250, 1)
             for s in (0, 250, 500, 750)]
    assert whole[0] == sum(p[0] for p in parts)
    assert whole[1] == sum(p[1] for p in parts)


def _burst_by_is_correctable(q, shape, mapping):
    """Reference enumeration through the public API, for cross-checking."""
    from itertools import product

    from toriclat.interleaving import cluster_cells, is_correctable
    from toriclat.lattice import Edge

    cases = failures = 0
    first = None
    for ay in range(q):
        for ax in range(q):
            cells = cluster_cells(mapping.lattice, shape, (ax, ay))
            for pi, pattern in enumerate(product((0, 1, 2), repeat=q)):
                errors = {Edge(c[0], c[1], choice - 1)
                          for c, choice in zip(cells, pattern) if choice}
                ok, _ = is_correctable(mapping, errors)
                if not ok:
                    failures += 1
                    if first is None:
                        first = (ax, ay, pi)
                cases += 1
    return cases, failures, first


def test_burst_kernel_agrees_with_the_public_api_enumeration():
    q = 5
    mapping = build_interleaver(TorusLattice(q))
    reference = _burst_by_is_correctable(q, mapping.shape, mapping)
    fast = kernels.pure.burst_exhaustive(q, mapping.shape.cells,
                                         mapping.block_grid)
    assert fast == reference == (6075, 0, None)


def test_burst_kernel_agrees_with_the_api_on_a_failing_layout():
    # corrupt the block map so collisions exist, then compare routes
    q = 5
    mapping = build_interleaver(TorusLattice(q))
    bad_grid = list(mapping.block_grid)
    cells = mapping.shape.cells
    bad_grid[cells[1][1] * q + cells[1][0]] = \
        bad_grid[cells[0][1] * q + cells[0][0]]
    from dataclasses import replace
    broken = replace(mapping, block_grid=tuple(bad_grid))
    reference = _burst_by_is_correctable(q, broken.shape, broken)
    fast = kernels.pure.burst_exhaustive(q, cells, bad_grid)
    assert fast == reference
    assert fast[1] > 0


def test_burst_witness_reports_the_failing_case():
    # a deliberately broken block map: both shape cells of one block
    q = 5
    mapping = build_interleaver(TorusLattice(q))
    bad_grid = list(mapping.block_grid)
    # relabel so two different cells of the cluster at (0,0) share block 0
    cells = mapping.shape.cells
    first = cells[0]
    second = cells[1]
    bad_grid[second[1] * q + second[0]] = \
        bad_grid[first[1] * q + first[0]]
    cases, failures, witness = kernels.pure.burst_exhaustive(q, cells, bad_grid)
    assert cases == 25 * 3 ** 5
    assert failures > 0
    assert witness is not None
