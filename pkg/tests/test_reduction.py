"""State-update rules: closed-form posts, unread mixtures, event gating."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    haar_unitary,
    random_density,
    random_rank1_family,
    rng_for,
)
from qreduce import (
    EventStatus,
    PositivityClass,
    Postulate,
    Projector,
    ProjectorFamily,
    density_distance,
    event_condition,
    make_density,
    postulate_distance,
    pure_state_density,
    reduce_lambda,
    reduce_modified,
    reduce_standard,
    unread_mixture_lambda,
    unread_mixture_standard,
)

P0 = Projector([[1.0, 0.0], [0.0, 0.0]])
P1 = Projector([[0.0, 0.0], [0.0, 1.0]])
QUBIT_POINTER = ProjectorFamily([P0, P1])


def coherent_qubit(a2: float, z: complex):
    return make_density([[a2, z], [np.conj(z), 1.0 - a2]])


def symmetric_qubit(ratio: float):
    # Equal populations, real coherence r/2; the lambda-map workhorse.
    return coherent_qubit(0.5, ratio / 2.0)


def test_standard_post_state_is_the_projector_for_rank_one_events():
    for trial in range(5):
        rng = rng_for(300, trial)
        rho = random_density(rng, 4)
        u = haar_unitary(rng, 4)
        proj = Projector(np.outer(u[:, 0], u[:, 0].conj()))
        out = reduce_standard(rho, proj)
        assert out.postulate is Postulate.STANDARD
        assert out.lam is None
        assert abs(out.probability - np.trace(rho.matrix @ proj.matrix).real) < 1e-14
        # P rho P / p collapses onto the ray of P
        assert density_distance(out.post_state, make_density(proj.matrix)) < 1e-12
        assert out.post_state.positivity_class is PositivityClass.POSITIVE


def test_standard_rejects_vanishing_probability():
    rho = pure_state_density([1.0, 0.0])
    with pytest.raises(ValueError, match="too small"):
        reduce_standard(rho, P1)


def test_modified_post_state_closed_form_on_qubit():
    for a2, z in [(0.5, 0.1), (0.3, 0.2j), (0.9, 0.05 + 0.02j)]:
        rho = coherent_qubit(a2, z)
        out = reduce_modified(rho, P0)
        expected = np.array([[1.0, z / (2 * a2)], [np.conj(z) / (2 * a2), 0.0]])
        assert np.max(np.abs(out.post_state.matrix - expected)) < 1e-14
        assert abs(out.probability - a2) < 1e-14
        assert out.postulate is Postulate.MODIFIED


def test_modified_conditions_on_negative_probability_direction():
    """On a quasi-positive state the rule applies even where p < 0."""
    rng = rng_for(301)
    u = haar_unitary(rng, 3)
    eigs = np.array([-1e-3, 0.5005, 0.5005])
    rho = make_density((u * eigs) @ u.conj().T, quasi_threshold=1e-2)
    proj = Projector(np.outer(u[:, 0], u[:, 0].conj()))
    out = reduce_modified(rho, proj, quasi_threshold=1e-2)
    assert abs(out.probability + 1e-3) < 1e-12
    # rho and P share the eigenvector, so the post-state is P itself
    assert np.max(np.abs(out.post_state.matrix - proj.matrix)) < 1e-10


def test_modified_rejects_zero_probability():
    rho = pure_state_density([1.0, 0.0])
    with pytest.raises(ValueError, match="too small"):
        reduce_modified(rho, P1)


def test_modified_may_leave_indefinite_state():
    plus = pure_state_density([np.sqrt(0.5), np.sqrt(0.5)])
    out = reduce_modified(plus, P0)
    assert out.post_state.positivity_class is PositivityClass.INDEFINITE
    relaxed = reduce_modified(plus, P0, quasi_threshold=0.5)
    assert relaxed.post_state.positivity_class is PositivityClass.QUASI_POSITIVE


def test_lambda_zero_reduces_to_anticommutator_rule():
    for dim in (2, 3, 5):
        rng = rng_for(302, dim)
        rho = random_density(rng, dim)
        fam = random_rank1_family(rng, dim)
        for index in range(dim):
            via_family = reduce_lambda(rho, fam, index, lam=0.0)
            direct = reduce_modified(rho, fam[index])
            assert (
                density_distance(via_family.post_state, direct.post_state) < 1e-12
            )
            assert abs(via_family.probability - direct.probability) < 1e-14


def test_lambda_post_state_closed_form_on_symmetric_qubit():
    ratio = 0.1
    rho = symmetric_qubit(ratio)
    for lam in (0.0, 0.5, 1.0, 2.0):
        out = reduce_lambda(rho, QUBIT_POINTER, 0, lam, quasi_threshold=1.0)
        expected = np.array(
            [
                [1.0 - lam * ratio, ratio / 2.0],
                [ratio / 2.0, lam * ratio],
            ]
        )
        assert np.max(np.abs(out.post_state.matrix - expected)) < 1e-14
        assert out.lam == lam
        assert out.postulate is Postulate.LAMBDA


def test_lambda_one_restores_positivity_at_small_coherence():
    rho = symmetric_qubit(0.05)
    repaired = reduce_lambda(rho, QUBIT_POINTER, 0, lam=1.0)
    assert repaired.post_state.min_eigenvalue >= -1e-12
    assert repaired.post_state.positivity_class is PositivityClass.POSITIVE
    bare = reduce_lambda(rho, QUBIT_POINTER, 0, lam=0.0, quasi_threshold=1.0)
    assert bare.post_state.min_eigenvalue < 0.0


def test_lambda_requires_rank_one_family():
    rng = rng_for(303)
    u = haar_unitary(rng, 3)
    block = u[:, :2]
    fam = ProjectorFamily(
        [
            Projector(block @ block.conj().T),
            Projector(np.outer(u[:, 2], u[:, 2].conj())),
        ]
    )
    rho = random_density(rng, 3)
    with pytest.raises(ValueError, match="rank-1"):
        reduce_lambda(rho, fam, 0, lam=1.0)


def test_lambda_validates_index_and_dimension():
    rho = symmetric_qubit(0.1)
    with pytest.raises(ValueError, match="out of range"):
        reduce_lambda(rho, QUBIT_POINTER, 2, lam=1.0)
    rng = rng_for(304)
    fam3 = random_rank1_family(rng, 3)
    with pytest.raises(ValueError, match="dimension mismatch"):
        reduce_lambda(rho, fam3, 0, lam=1.0)
    with pytest.raises(ValueError, match="dimension mismatch"):
        unread_mixture_standard(rho, fam3)


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(0, 2**31 - 1),
    dim=st.integers(2, 5),
    lam=st.floats(-2.0, 2.0, allow_nan=False),
)
def test_unread_lambda_mixture_leaves_state_untouched(seed, dim, lam):
    """sum_n p_n rho_n == rho identically, for every lambda."""
    rng = rng_for(305, seed)
    rho = random_density(rng, dim)
    fam = random_rank1_family(rng, dim)
    mixed = unread_mixture_lambda(rho, fam, lam, quasi_threshold=1.0)
    assert density_distance(mixed, rho) < 1e-12


def test_unread_standard_mixture_strips_off_blocks():
    rho = coherent_qubit(0.3, 0.1 + 0.2j)
    mixed = unread_mixture_standard(rho, QUBIT_POINTER)
    assert np.max(np.abs(mixed.matrix - np.diag([0.3, 0.7]))) < 1e-15
    # generic dim: the residual is exactly the off-diagonal part in the
    # family's own basis
    rng = rng_for(306)
    u = haar_unitary(rng, 4)
    fam = ProjectorFamily.from_basis(u)
    rho4 = random_density(rng, 4)
    mixed4 = unread_mixture_standard(rho4, fam)
    rotated = u.conj().T @ rho4.matrix @ u
    off_norm = np.linalg.norm(rotated - np.diag(rotated.diagonal()))
    assert abs(density_distance(mixed4, rho4) - off_norm) < 1e-12


def test_event_condition_covers_all_statuses():
    half = make_density(0.5 * np.eye(2))
    assert event_condition(half, P0) is EventStatus.BRANCHES
    up = pure_state_density([1.0, 0.0])
    assert event_condition(up, P0) is EventStatus.CERTAIN_TRUE
    assert event_condition(up, P1) is EventStatus.CERTAIN_FALSE

    eps = 1e-4
    quasi = make_density([[1.0 + eps, 0.0], [0.0, -eps]])
    assert event_condition(quasi, P0) is EventStatus.OUT_OF_RANGE
    assert event_condition(quasi, P1) is EventStatus.OUT_OF_RANGE
    # widening the window absorbs the excursion
    assert event_condition(quasi, P0, tol=1e-3) is EventStatus.CERTAIN_TRUE
    assert event_condition(quasi, P1, tol=1e-3) is EventStatus.CERTAIN_FALSE


def test_postulate_distance_qubit_closed_form():
    # equal populations: the two posts differ by the full coherence, with
    # Frobenius length sqrt(2) |z|
    for z in (0.001, 0.01, 0.1, 0.2):
        rho = coherent_qubit(0.5, z)
        assert abs(postulate_distance(rho, P0) - np.sqrt(2.0) * z) < 1e-12


def test_all_rules_preserve_trace():
    rng = rng_for(307)
    for dim in (2, 4):
        rho = random_density(rng, dim)
        fam = random_rank1_family(rng, dim)
        outs = [
            reduce_standard(rho, fam[0]).post_state,
            reduce_modified(rho, fam[0]).post_state,
            reduce_lambda(rho, fam, 0, lam=1.5).post_state,
        ]
        for post in outs:
            assert abs(np.trace(post.matrix).real - 1.0) < 1e-12
