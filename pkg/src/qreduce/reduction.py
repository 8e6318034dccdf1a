"""State-update rules after a projective event.

Three rules live here:

* standard (Lueders): rho -> P rho P / Tr[rho P]; discards interference
  with the complement, so the unread mixture sum_n P_n rho P_n differs
  from rho.
* one-parameter family: the symmetrized update plus lambda-weighted
  pointer-basis corrections; for every lambda the unread mixture
  sum_n p_n rho_n collapses back to rho identically.
* anticommutator (lambda = 0): rho -> (P rho + rho P) / (2 Tr[rho P]);
  basis-independent, may leave the state only quasi-positive.

``event_condition`` classifies whether 0 < Tr[rho P] < 1 holds, i.e.
whether the event can branch at all; probabilities escaping [0, 1] on a
quasi-positive state mark directions where no event is produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import frobenius_distance
from .states import (
    DEFAULT_QUASI_THRESHOLD,
    DensityMatrix,
    Projector,
    ProjectorFamily,
    event_probability,
)

MIN_EVENT_PROBABILITY = 1e-12
DEFAULT_EVENT_TOL = 1e-9


class Postulate(Enum):
    STANDARD = "standard"
    LAMBDA = "lambda"
    MODIFIED = "modified"


class EventStatus(Enum):
    BRANCHES = "Branches"
    CERTAIN_TRUE = "CertainTrue"
    CERTAIN_FALSE = "CertainFalse"
    OUT_OF_RANGE = "OutOfRange"


@dataclass(frozen=True)
class ReductionOutcome:
    probability: float
    post_state: DensityMatrix
    postulate: Postulate
    lam: float | None = None


def reduce_standard(
    rho: DensityMatrix,
    projector: Projector,
    quasi_threshold: float = DEFAULT_QUASI_THRESHOLD,
) -> ReductionOutcome:
    """Lueders update: post-state P rho P / Tr[rho P]."""
    p = event_probability(rho, projector)
    if p <= MIN_EVENT_PROBABILITY:
        raise ValueError(f"event probability {p} too small to condition on")
    pm = projector.matrix
    post = pm @ rho.matrix @ pm / p
    post = 0.5 * (post + post.conj().T)
    return ReductionOutcome(
        probability=p,
        post_state=DensityMatrix(post, quasi_threshold=quasi_threshold),
        postulate=Postulate.STANDARD,
    )


def unread_mixture_standard(
    rho: DensityMatrix,
    family: ProjectorFamily,
    quasi_threshold: float = DEFAULT_QUASI_THRESHOLD,
) -> DensityMatrix:
    """Outcome-averaged Lueders state sum_n P_n rho P_n.

    Zeroes every off-block element of rho with respect to the family; the
    result generally differs from rho, which is exactly the break with
    unitary evolution the anticommutator rule avoids.
    """
    if family.dim != rho.dim:
        raise ValueError("dimension mismatch between state and family")
    out = np.zeros_like(rho.matrix)
    for proj in family:
        out = out + proj.matrix @ rho.matrix @ proj.matrix
    out = 0.5 * (out + out.conj().T)
    return DensityMatrix(out, quasi_threshold=quasi_threshold)


def reduce_modified(
    rho: DensityMatrix,
    projector: Projector,
    quasi_threshold: float = DEFAULT_QUASI_THRESHOLD,
) -> ReductionOutcome:
    """Anticommutator update: post-state (P rho + rho P) / (2 Tr[rho P]).

    Requires only |Tr[rho P]| > 1e-12; a negative probability is recorded
    as-is (gatekeeping belongs to ``event_condition``).  The post-state is
    Hermitian with unit trace but may be quasi-positive or indefinite; the
    classification is recorded on it.
    """
    p = event_probability(rho, projector)
    if abs(p) <= MIN_EVENT_PROBABILITY:
        raise ValueError(f"|event probability| = {abs(p)} too small to condition on")
    pm = projector.matrix
    post = (rho.matrix @ pm + pm @ rho.matrix) / (2.0 * p)
    post = 0.5 * (post + post.conj().T)
    return ReductionOutcome(
        probability=p,
        post_state=DensityMatrix(post, quasi_threshold=quasi_threshold),
        postulate=Postulate.MODIFIED,
    )


def _pointer_vectors(family: ProjectorFamily) -> np.ndarray:
    """Unit vectors spanning a rank-1 family, as columns."""
    if not family.all_rank_one():
        raise ValueError(
            "lambda-family reduction requires a rank-1 (pointer basis) family"
        )
    cols = []
    for proj in family:
        m = proj.matrix
        j = int(np.argmax(m.diagonal().real))
        cols.append(m[:, j] / np.sqrt(m[j, j].real))
    return np.stack(cols, axis=1)


def reduce_lambda(
    rho: DensityMatrix,
    family: ProjectorFamily,
    index: int,
    lam: float,
    quasi_threshold: float = DEFAULT_QUASI_THRESHOLD,
) -> ReductionOutcome:
    """One-parameter update for outcome ``index`` of a pointer-basis family.

    post = (1/p) { (rho P + P rho)/2 - lam * s * P + lam * sum_k |rho_ik| P_k }

    where s = sum_{j != i} |rho_ij| and rho_ij are matrix elements in the
    family's basis.  lam = 0 reduces to the anticommutator rule; lam >= 1
    restores positivity in the decohered regime.
    """
    if family.dim != rho.dim:
        raise ValueError("dimension mismatch between state and family")
    if not 0 <= index < len(family):
        raise ValueError(f"index {index} out of range for family of {len(family)}")
    vectors = _pointer_vectors(family)
    proj = family[index]
    p = event_probability(rho, proj)
    if p <= MIN_EVENT_PROBABILITY:
        raise ValueError(f"event probability {p} too small to condition on")

    # |rho_ij| in the pointer basis, row of the chosen outcome.
    row = vectors[:, index].conj() @ rho.matrix @ vectors
    moduli = np.abs(row)
    post = (rho.matrix @ proj.matrix + proj.matrix @ rho.matrix) / 2.0
    off_total = 0.0
    for k, member in enumerate(family):
        if k == index:
            continue
        off_total += moduli[k]
        post = post + lam * moduli[k] * member.matrix
    post = (post - lam * off_total * proj.matrix) / p
    post = 0.5 * (post + post.conj().T)
    return ReductionOutcome(
        probability=p,
        post_state=DensityMatrix(post, quasi_threshold=quasi_threshold),
        postulate=Postulate.LAMBDA,
        lam=float(lam),
    )


def unread_mixture_lambda(
    rho: DensityMatrix,
    family: ProjectorFamily,
    lam: float,
    quasi_threshold: float = DEFAULT_QUASI_THRESHOLD,
) -> DensityMatrix:
    """Outcome-averaged lambda-family state sum_n p_n rho_n.

    The lambda corrections cancel pairwise (|rho_ij| = |rho_ji|), so this
    equals rho for every lambda: the unread measurement leaves no trace.
    """
    out = np.zeros_like(rho.matrix)
    for n in range(len(family)):
        outcome = reduce_lambda(rho, family, n, lam, quasi_threshold=quasi_threshold)
        out = out + outcome.probability * outcome.post_state.matrix
    out = 0.5 * (out + out.conj().T)
    return DensityMatrix(out, quasi_threshold=quasi_threshold)


def event_condition(
    rho: DensityMatrix, projector: Projector, tol: float = DEFAULT_EVENT_TOL
) -> EventStatus:
    """Classify p = Tr[rho P] against the branching window (tol, 1 - tol).

    BRANCHES: the event can actualize either way.  CERTAIN_TRUE /
    CERTAIN_FALSE: p pinned at 1 or 0.  OUT_OF_RANGE: p escapes [0, 1],
    possible only for non-positive states; no event occurs there.
    """
    p = event_probability(rho, projector)
    if tol < p < 1.0 - tol:
        return EventStatus.BRANCHES
    if 1.0 - tol <= p <= 1.0 + tol:
        return EventStatus.CERTAIN_TRUE
    if abs(p) <= tol:
        return EventStatus.CERTAIN_FALSE
    return EventStatus.OUT_OF_RANGE


def postulate_distance(rho: DensityMatrix, projector: Projector) -> float:
    """Frobenius distance between the Lueders and anticommutator post-states."""
    post_std = reduce_standard(rho, projector).post_state
    post_mod = reduce_modified(rho, projector).post_state
    return frobenius_distance(post_std.matrix, post_mod.matrix)
