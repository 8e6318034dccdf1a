"""Time-ordered projector histories and their probability functionals.

A history family fixes an initial state, a Hamiltonian, a strictly
increasing time grid, and one complete orthogonal projector family per
time.  Projectors are moved to the Heisenberg picture, P(t) = U†(t) P U(t),
so a branch probability is a pure matrix chain on the initial state.

Two functionals are provided.  The modified one nests symmetrized
products,

    p = Re Tr[ P_n(t_n) (1/2)[P_{n-1}(t_{n-1}), ... (1/2)[P_1(t_1), rho]_+ ...]_+ ],

and is linear in every slot projector, hence automatically additive; the
price is that p may leave [0, 1] for families that are not decohered.
The standard chain Tr[P_n ... P_1 rho P_1 ... P_n] is kept as a baseline.
Consistency of a family is positivity of the modified functional over
every coarse-graining (per-slot unions of members).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, NumericalContractError
from .linalg import as_square_matrix, is_hermitian, unitary_exp
from .states import DensityMatrix, Projector, ProjectorFamily

CONSISTENCY_ENUMERATION_CAP = 10**6
_IMAG_TOL = 1e-8


@dataclass(frozen=True)
class HistoryEvent:
    """One projector pick at one time."""

    time: float
    projector_index: int


def heisenberg_projector(projector: Projector, hamiltonian: np.ndarray, t: float) -> Projector:
    """Move a projector to the Heisenberg picture: U†(t) P U(t), U = exp(-iHt)."""
    h = as_square_matrix(hamiltonian)
    if not is_hermitian(h):
        raise ValueError("hamiltonian must be Hermitian")
    u = unitary_exp(h, t)
    moved = u.conj().T @ projector.matrix @ u
    moved = 0.5 * (moved + moved.conj().T)
    return Projector(moved)


class HistoryFamily:
    """Alternative histories over a common time grid.

    ``slot_families[k]`` lists the projectors available at ``times[k]``;
    each slot family must already be complete and orthogonal (enforced by
    ProjectorFamily).  Heisenberg-evolved member matrices are computed
    once per slot on first use and cached.
    """

    def __init__(
        self,
        initial_state: DensityMatrix,
        hamiltonian: np.ndarray,
        times,
        slot_families,
    ):
        self.initial_state = initial_state
        self.hamiltonian = as_square_matrix(hamiltonian)
        if not is_hermitian(self.hamiltonian):
            raise ValueError("hamiltonian must be Hermitian")
        if self.hamiltonian.shape != initial_state.matrix.shape:
            raise ValueError("hamiltonian dimension must match the state")
        self.times = tuple(float(t) for t in times)
        if len(self.times) == 0:
            raise ValueError("need at least one time slot")
        if any(t1 <= t0 for t0, t1 in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        self.slot_families = tuple(slot_families)
        if len(self.slot_families) != len(self.times):
            raise ValueError("need exactly one projector family per time")
        for k, fam in enumerate(self.slot_families):
            if fam.dim != initial_state.dim:
                raise ValueError(f"slot {k} family dimension mismatch")
        self._evolved: dict[int, list[np.ndarray]] = {}

    @property
    def n_slots(self) -> int:
        return len(self.times)

    @property
    def branch_shape(self) -> tuple[int, ...]:
        return tuple(len(fam) for fam in self.slot_families)

    def evolved_members(self, slot: int) -> list[np.ndarray]:
        """Heisenberg-picture matrices of every projector in one slot."""
        if slot not in self._evolved:
            t = self.times[slot]
            u = unitary_exp(self.hamiltonian, t)
            udag = u.conj().T
            cooked = []
            for proj in self.slot_families[slot].members:
                m = udag @ proj.matrix @ u
                cooked.append(0.5 * (m + m.conj().T))
            self._evolved[slot] = cooked
        return self._evolved[slot]

    def truncated(self) -> "HistoryFamily":
        """Same family without its final slot."""
        if self.n_slots < 2:
            raise ValueError("cannot truncate a single-slot family")
        return HistoryFamily(
            self.initial_state,
            self.hamiltonian,
            self.times[:-1],
            self.slot_families[:-1],
        )


@dataclass(frozen=True)
class History:
    """One branch: a projector index for every slot of a family."""

    family: HistoryFamily
    choice: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "choice", tuple(int(c) for c in self.choice))
        shape = self.family.branch_shape
        if len(self.choice) != len(shape):
            raise ValueError("one projector index per time slot required")
        for slot, (c, m) in enumerate(zip(self.choice, shape)):
            if not 0 <= c < m:
                raise ValueError(f"slot {slot} index {c} out of range [0, {m})")


def _chain_probability(rho: np.ndarray, slot_matrices: list[np.ndarray]) -> float:
    """Nested symmetrized chain ending in a trace against the final slot."""
    x = rho
    for p in slot_matrices[:-1]:
        x = 0.5 * (p @ x + x @ p)
    value = np.einsum("ij,ji->", slot_matrices[-1], x)
    if abs(value.imag) > _IMAG_TOL:
        raise NumericalContractError(
            f"history probability has imaginary residue {value.imag:.3e}"
        )
    return float(value.real)


def history_probability_modified(h: History) -> float:
    """Symmetrized-chain probability of one branch; may lie outside [0, 1]."""
    fam = h.family
    mats = [fam.evolved_members(k)[c] for k, c in enumerate(h.choice)]
    return _chain_probability(fam.initial_state.matrix, mats)


def history_probability_standard(h: History) -> float:
    """Baseline chain Tr[P_n ... P_1 rho P_1 ... P_n]; >= 0 for positive rho."""
    fam = h.family
    x = fam.initial_state.matrix
    for k, c in enumerate(h.choice):
        p = fam.evolved_members(k)[c]
        x = p @ x @ p
    value = np.trace(x)
    if abs(value.imag) > _IMAG_TOL:
        raise NumericalContractError(
            f"history probability has imaginary residue {value.imag:.3e}"
        )
    return float(value.real)


@dataclass(frozen=True)
class Violation:
    """A coarse-grained branch whose probability escaped [ -tol, 1 + tol ].

    ``slot_subsets`` gives, per slot, the member indices whose projectors
    were summed to form that slot's coarse projector.
    """

    slot_subsets: tuple[tuple[int, ...], ...]
    probability: float


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    violations: tuple[Violation, ...]
    probability_table: dict[tuple[int, ...], float]


def _coarse_branch_count(shape: tuple[int, ...]) -> int:
    total = 1
    for m in shape:
        total *= 2**m
    return total


def check_consistency(fam: HistoryFamily, tol: float = 1e-9) -> ConsistencyReport:
    """Positivity of the modified functional over every coarse-graining.

    Each slot may be replaced by any union of its members (the union's
    projector is the member sum); every branch of every such coarse
    family is evaluated.  The returned table maps fine-grained branches
    (all-singleton subsets) to their probabilities.
    """
    shape = fam.branch_shape
    if _coarse_branch_count(shape) > CONSISTENCY_ENUMERATION_CAP:
        raise CapExceededError(
            f"coarse-graining enumeration would exceed {CONSISTENCY_ENUMERATION_CAP} branches"
        )
    # per slot: every nonempty subset of member indices, with its summed matrix
    slot_subsets: list[list[tuple[tuple[int, ...], np.ndarray]]] = []
    for k in range(fam.n_slots):
        members = fam.evolved_members(k)
        options = []
        for r in range(1, len(members) + 1):
            for combo in itertools.combinations(range(len(members)), r):
                summed = members[combo[0]].copy()
                for i in combo[1:]:
                    summed = summed + members[i]
                options.append((combo, summed))
        slot_subsets.append(options)

    violations: list[Violation] = []
    table: dict[tuple[int, ...], float] = {}
    rho = fam.initial_state.matrix
    n = fam.n_slots

    def descend(slot: int, x: np.ndarray, picked: tuple[tuple[int, ...], ...]) -> None:
        for combo, mat in slot_subsets[slot]:
            desc = picked + (combo,)
            if slot == n - 1:
                value = np.einsum("ij,ji->", mat, x)
                if abs(value.imag) > _IMAG_TOL:
                    raise NumericalContractError(
                        f"history probability has imaginary residue {value.imag:.3e}"
                    )
                p = float(value.real)
                if all(len(s) == 1 for s in desc):
                    table[tuple(s[0] for s in desc)] = p
                if p < -tol or p > 1.0 + tol:
                    violations.append(Violation(slot_subsets=desc, probability=p))
            else:
                descend(slot + 1, 0.5 * (mat @ x + x @ mat), desc)

    descend(0, rho, ())
    return ConsistencyReport(
        consistent=not violations,
        violations=tuple(violations),
        probability_table=table,
    )


def additivity_residual(fam: HistoryFamily, slot: int, parts: tuple[int, int]) -> float:
    """Worst |p(merged) - p(part1) - p(part2)| over branches of the other slots.

    ``parts`` names two distinct members of ``slot``; "merged" replaces
    them by their sum.  Linearity of the chain makes this vanish.
    """
    i, j = parts
    if i == j:
        raise ValueError("parts must be two distinct member indices")
    members = fam.evolved_members(slot)
    if not (0 <= i < len(members) and 0 <= j < len(members)):
        raise ValueError("part index out of range")
    merged = members[i] + members[j]
    rho = fam.initial_state.matrix
    other_ranges = [
        range(m) for k, m in enumerate(fam.branch_shape) if k != slot
    ]
    worst = 0.0
    for other in itertools.product(*other_ranges):
        picks = list(other)
        picks.insert(slot, -1)

        def chain_with(slot_mat: np.ndarray) -> float:
            mats = [
                slot_mat if k == slot else fam.evolved_members(k)[picks[k]]
                for k in range(fam.n_slots)
            ]
            return _chain_probability(rho, mats)

        residual = abs(
            chain_with(merged) - chain_with(members[i]) - chain_with(members[j])
        )
        worst = max(worst, residual)
    return worst


def marginalization_residual(fam: HistoryFamily) -> float:
    """Worst |sum over final-slot members of p(full) - p(truncated)|.

    The final slot's family sums to the identity, so summing it out must
    reproduce the truncated family's probabilities.
    """
    if fam.n_slots < 2:
        raise ValueError("marginalization needs at least two slots")
    short = fam.truncated()
    worst = 0.0
    last = fam.n_slots - 1
    for prefix in itertools.product(*(range(m) for m in short.branch_shape)):
        p_short = history_probability_modified(History(short, prefix))
        total = 0.0
        for c in range(fam.branch_shape[last]):
            total += history_probability_modified(History(fam, prefix + (c,)))
        worst = max(worst, abs(total - p_short))
    return worst
