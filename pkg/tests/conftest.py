"""Shared seeded generators for random states, operators and families."""

import numpy as np

from qreduce import DensityMatrix, HistoryFamily, Projector, ProjectorFamily, make_density


def rng_for(*key) -> np.random.Generator:
    """Deterministic generator keyed by a tuple of nonnegative ints."""
    return np.random.default_rng(np.random.SeedSequence(list(key)))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def haar_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-distributed unitary via QR with the standard phase fix."""
    q, r = np.linalg.qr(complex_gaussian(rng, (dim, dim)))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def random_density(rng: np.random.Generator, dim: int) -> DensityMatrix:
    """Full-rank positive state G G^dagger / Tr, generic off-diagonals."""
    g = complex_gaussian(rng, (dim, dim))
    m = g @ g.conj().T
    return make_density(m / np.trace(m).real)


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = complex_gaussian(rng, (dim, dim))
    return 0.5 * (g + g.conj().T)


def random_rank1_family(rng: np.random.Generator, dim: int) -> ProjectorFamily:
    return ProjectorFamily.from_basis(haar_unitary(rng, dim))


def quasi_positive_density(
    rng: np.random.Generator, dim: int, epsilon: float
) -> DensityMatrix:
    """Unit-trace Hermitian state with exactly one eigenvalue at -epsilon."""
    positives = rng.uniform(0.2, 1.0, dim - 1)
    positives *= (1.0 + epsilon) / positives.sum()
    eigs = np.concatenate([[-epsilon], positives])
    u = haar_unitary(rng, dim)
    m = (u * eigs) @ u.conj().T
    return make_density(0.5 * (m + m.conj().T), quasi_threshold=10 * epsilon)


def random_partition_family(rng: np.random.Generator, dim: int) -> ProjectorFamily:
    """Projector family with random ranks (summing to dim) in a random basis."""
    u = haar_unitary(rng, dim)
    cuts = sorted(rng.choice(range(1, dim), size=rng.integers(0, dim), replace=False))
    bounds = [0, *cuts, dim]
    members = []
    for lo, hi in zip(bounds, bounds[1:]):
        block = u[:, lo:hi]
        members.append(Projector(block @ block.conj().T))
    return ProjectorFamily(members)


def random_history_family(
    rng: np.random.Generator, dim: int, n_slots: int, rank_one: bool = False
) -> HistoryFamily:
    rho = random_density(rng, dim)
    ham = random_hermitian(rng, dim)
    times = np.cumsum(rng.uniform(0.1, 1.0, n_slots))
    if rank_one:
        slot_families = [random_rank1_family(rng, dim) for _ in range(n_slots)]
    else:
        slot_families = [random_partition_family(rng, dim) for _ in range(n_slots)]
    return HistoryFamily(rho, ham, times, slot_families)
