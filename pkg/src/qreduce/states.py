"""States, projectors and observables on finite-dimensional Hilbert spaces.

Density matrices carry a positivity classification: besides ordinary
positive states, the anticommutator reduction rule legitimately produces
Hermitian unit-trace matrices with small negative eigenvalues
("quasi-positive") or larger ones ("indefinite").  Construction therefore
never rejects a valid Hermitian unit-trace matrix; it only records which
regime it falls in, relative to a caller-chosen threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    EigenSystem,
    as_square_matrix,
    frobenius_distance,
    hermitian_eigensystem,
    is_hermitian,
)

DEFAULT_QUASI_THRESHOLD = 1e-3
POSITIVE_EIG_TOL = 1e-12
DEGENERACY_TOL = 1e-8

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class PositivityClass(Enum):
    POSITIVE = "positive"
    QUASI_POSITIVE = "quasi_positive"
    INDEFINITE = "indefinite"


def _classify(min_eigenvalue: float, quasi_threshold: float) -> PositivityClass:
    if min_eigenvalue >= -POSITIVE_EIG_TOL:
        return PositivityClass.POSITIVE
    if min_eigenvalue >= -quasi_threshold:
        return PositivityClass.QUASI_POSITIVE
    return PositivityClass.INDEFINITE


class DensityMatrix:
    """Hermitian unit-trace matrix with a cached positivity classification."""

    def __init__(
        self,
        matrix,
        quasi_threshold: float = DEFAULT_QUASI_THRESHOLD,
        tol: float = DEFAULT_TOL,
        _positivity: PositivityClass | None = None,
    ):
        m = as_square_matrix(matrix)
        if not is_hermitian(m, tol):
            raise ValueError("density matrix must be Hermitian")
        trace = np.trace(m)
        if abs(trace - 1.0) > tol:
            raise ValueError(f"density matrix must have unit trace, got {trace}")
        self.matrix = m
        self.matrix.flags.writeable = False
        self.quasi_threshold = float(quasi_threshold)
        eigvals = hermitian_eigensystem(m, tol).eigenvalues
        self.min_eigenvalue = float(eigvals[0])
        self.eigenvalues = eigvals
        # Unitary conjugation preserves the spectrum exactly, so evolve()
        # carries the class over rather than re-deciding near a boundary.
        self.positivity_class = (
            _positivity if _positivity is not None else _classify(self.min_eigenvalue, quasi_threshold)
        )

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def quasi_epsilon(self) -> float:
        """|most negative eigenvalue|, 0 for positive states."""
        return max(0.0, -self.min_eigenvalue)

    def is_positive(self) -> bool:
        return self.positivity_class is PositivityClass.POSITIVE

    def __repr__(self) -> str:
        return (
            f"DensityMatrix(dim={self.dim}, {self.positivity_class.value}, "
            f"min_eig={self.min_eigenvalue:.3e})"
        )


def make_density(
    matrix, quasi_threshold: float = DEFAULT_QUASI_THRESHOLD, tol: float = DEFAULT_TOL
) -> DensityMatrix:
    """Validate and classify a Hermitian unit-trace matrix.

    Classification: positive when the smallest eigenvalue is above
    -1e-12, quasi-positive when it is negative but within
    ``quasi_threshold`` in magnitude, indefinite otherwise.
    """
    return DensityMatrix(matrix, quasi_threshold=quasi_threshold, tol=tol)


def pure_state_density(vector, quasi_threshold: float = DEFAULT_QUASI_THRESHOLD) -> DensityMatrix:
    """|psi><psi| from a unit-norm state vector."""
    v = np.asarray(vector, dtype=complex).reshape(-1)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state vector must be normalized, |psi| = {norm}")
    return make_density(np.outer(v, v.conj()), quasi_threshold=quasi_threshold)


class Projector:
    """Orthogonal projector: P = P^dagger = P^2."""

    def __init__(self, matrix, tol: float = DEFAULT_TOL):
        m = as_square_matrix(matrix)
        if not is_hermitian(m, tol):
            raise ValueError("projector must be Hermitian")
        if np.max(np.abs(m @ m - m)) > tol:
            raise ValueError("projector must be idempotent")
        trace = float(np.trace(m).real)
        rank = int(round(trace))
        if abs(trace - rank) > tol * m.shape[0]:
            raise ValueError(f"projector trace {trace} is not close to an integer")
        self.matrix = m
        self.matrix.flags.writeable = False
        self.rank = rank

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_vector(cls, vector) -> "Projector":
        """Rank-1 projector onto a (normalized) vector."""
        v = np.asarray(vector, dtype=complex).reshape(-1)
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()))

    def __repr__(self) -> str:
        return f"Projector(dim={self.dim}, rank={self.rank})"


class ProjectorFamily:
    """Ordered, pairwise-orthogonal projectors summing to the identity."""

    def __init__(self, members: Iterable[Projector], tol: float = DEFAULT_TOL):
        members = tuple(members)
        if not members:
            raise ValueError("projector family must not be empty")
        dim = members[0].dim
        if any(p.dim != dim for p in members):
            raise ValueError("all family members must share one dimension")
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if np.max(np.abs(members[i].matrix @ members[j].matrix)) > tol:
                    raise ValueError(f"projectors {i} and {j} are not orthogonal")
        total = sum(p.matrix for p in members)
        if np.max(np.abs(total - np.eye(dim))) > tol:
            raise ValueError("projector family does not sum to the identity")
        self.members = members
        self.dim = dim

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Projector:
        return self.members[i]

    def all_rank_one(self) -> bool:
        return all(p.rank == 1 for p in self.members)

    @classmethod
    def from_basis(cls, vectors) -> "ProjectorFamily":
        """Family of rank-1 projectors from the columns of a unitary."""
        u = np.asarray(vectors, dtype=complex)
        return cls([Projector.from_vector(u[:, k]) for k in range(u.shape[1])])

    def __repr__(self) -> str:
        ranks = [p.rank for p in self.members]
        return f"ProjectorFamily(dim={self.dim}, ranks={ranks})"


class Observable:
    """Hermitian operator with its spectral decomposition cached."""

    def __init__(self, matrix, tol: float = DEFAULT_TOL):
        m = as_square_matrix(matrix)
        if not is_hermitian(m, tol):
            raise ValueError("observable must be Hermitian")
        self.matrix = m
        self.matrix.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def eigensystem(self) -> EigenSystem:
        return hermitian_eigensystem(self.matrix)


def _degenerate_clusters(eigenvalues: np.ndarray, tol: float) -> list[set[int]]:
    clusters: list[set[int]] = [{0}]
    for i in range(1, eigenvalues.shape[0]):
        if eigenvalues[i] - eigenvalues[i - 1] <= tol:
            clusters[-1].add(i)
        else:
            clusters.append({i})
    return clusters


def spectral_projectors(
    observable: Observable,
    partition: Sequence[Iterable[int]],
    degeneracy_tol: float = DEGENERACY_TOL,
) -> ProjectorFamily:
    """Projectors onto groups of an observable's eigenvalue indices.

    ``partition`` lists disjoint index sets (into the ascending eigenvalue
    order) that together cover every index.  Splitting a near-degenerate
    cluster (gap <= ``degeneracy_tol``) across sets is rejected: the
    individual eigenvectors would be basis-dependent there.
    """
    es = observable.eigensystem
    d = observable.dim
    sets = [frozenset(int(i) for i in s) for s in partition]
    flat: list[int] = [i for s in sets for i in s]
    if len(flat) != len(set(flat)):
        raise ValueError("partition sets overlap")
    if set(flat) != set(range(d)):
        raise ValueError("partition must cover all eigenvalue indices exactly once")
    for cluster in _degenerate_clusters(es.eigenvalues, degeneracy_tol):
        if len(cluster) > 1 and not any(cluster <= s for s in sets):
            raise ValueError(
                f"partition splits a degenerate eigenvalue cluster {sorted(cluster)}"
            )
    members = []
    for s in sets:
        idx = sorted(s)
        vs = es.eigenvectors[:, idx]
        members.append(Projector(vs @ vs.conj().T))
    return ProjectorFamily(members)


def evolve(rho: DensityMatrix, u, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Unitary conjugation U rho U^dagger.

    The spectrum (hence the positivity class) is preserved exactly, so the
    output reuses the input classification.
    """
    u = as_square_matrix(u)
    if u.shape != rho.matrix.shape:
        raise ValueError("dimension mismatch between state and unitary")
    if np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) > tol:
        raise ValueError("evolution operator is not unitary within tolerance")
    out = u @ rho.matrix @ u.conj().T
    out = 0.5 * (out + out.conj().T)
    return DensityMatrix(
        out, quasi_threshold=rho.quasi_threshold, _positivity=rho.positivity_class
    )


def partial_trace(
    joint: DensityMatrix, dims: Sequence[int], keep: int
) -> DensityMatrix:
    """Reduced state of one tensor factor.

    ``dims`` are the factor dimensions in tensor-product order; ``keep`` is
    the index of the factor to retain.
    """
    dims = [int(d) for d in dims]
    n = len(dims)
    if int(np.prod(dims)) != joint.dim:
        raise ValueError(f"factor dims {dims} do not multiply to {joint.dim}")
    if not 0 <= keep < n:
        raise ValueError(f"keep index {keep} out of range for {n} factors")
    t = joint.matrix.reshape(dims + dims)
    # Trace out factors one by one, from the highest axis down.
    for ax in reversed(range(n)):
        if ax == keep:
            continue
        t = np.trace(t, axis1=ax, axis2=ax + (t.ndim // 2))
    out = t.reshape(dims[keep], dims[keep])
    out = 0.5 * (out + out.conj().T)
    return DensityMatrix(out, quasi_threshold=joint.quasi_threshold)


def event_probability(rho: DensityMatrix, projector: Projector) -> float:
    """Tr[rho P].

    For quasi-positive or indefinite states the value may lie outside
    [0, 1]; that is meaningful output, not an error.  A residual imaginary
    part above 1e-8 signals corrupted inputs and raises.
    """
    if rho.dim != projector.dim:
        raise ValueError("dimension mismatch between state and projector")
    tr = complex(np.einsum("ij,ji->", rho.matrix, projector.matrix))
    if abs(tr.imag) > 1e-8:
        raise ValueError(f"event probability has imaginary residue {tr.imag}")
    return float(tr.real)


def bloch_vector(rho: DensityMatrix) -> np.ndarray:
    """(r_x, r_y, r_z) with rho = (I + r . sigma)/2; |r| > 1 flags a
    non-positive state."""
    if rho.dim != 2:
        raise ValueError("Bloch vector is defined for dimension 2 only")
    m = rho.matrix
    return np.array(
        [
            2.0 * m[0, 1].real,
            -2.0 * m[0, 1].imag,
            (m[0, 0] - m[1, 1]).real,
        ]
    )


def density_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """Frobenius distance between two states' matrices."""
    return frobenius_distance(a.matrix, b.matrix)
