"""Exactly solvable decoherence: one system qubit against N environment qubits.

The interaction Hamiltonian is sigma_z (x) sum_k g_k sigma_z^(k) with no
self-terms, so the joint evolution is diagonal in the computational basis
and costs O(2^(N+1)) phase multiplications per time point.  The reduced
2x2 state keeps its diagonal (|a|^2, |b|^2) for all t while the coherence

    z(t) = a conj(b) prod_k [cos(2 g_k t) - i (|alpha_k|^2 - |beta_k|^2) sin(2 g_k t)]

shrinks like a product of sub-unit factors, i.e. exponentially in N for
random couplings.  The closed-form product is cross-checked against the
exact partial trace, which is the authoritative route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError
from .states import DEFAULT_QUASI_THRESHOLD, DensityMatrix, make_density

MAX_ENV_QUBITS = 14
_NORM_TOL = 1e-12


@dataclass(frozen=True)
class BitByBitModel:
    """System qubit amplitudes plus environment couplings and initial states.

    ``couplings`` holds one angular frequency g_k per environment qubit;
    ``env_init`` one normalized amplitude pair (alpha_k, beta_k) per qubit.
    ``seed`` records the PRNG seed when the model was drawn randomly.
    """

    a: complex
    b: complex
    couplings: tuple[float, ...] = field(default_factory=tuple)
    env_init: tuple[tuple[complex, complex], ...] = field(default_factory=tuple)
    seed: int = 0

    def __post_init__(self):
        if len(self.couplings) != len(self.env_init):
            raise ValueError("couplings and env_init must have equal length")
        if abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0) > _NORM_TOL:
            raise ValueError("system amplitudes must satisfy |a|^2 + |b|^2 = 1")
        for k, (al, be) in enumerate(self.env_init):
            if abs(abs(al) ** 2 + abs(be) ** 2 - 1.0) > _NORM_TOL:
                raise ValueError(f"environment qubit {k} amplitudes not normalized")

    @property
    def n_env(self) -> int:
        return len(self.couplings)

    @classmethod
    def random(cls, a: complex, b: complex, n_env: int, seed: int) -> "BitByBitModel":
        """Draw couplings uniform on [0, 1] and Haar-uniform environment states."""
        rng = np.random.default_rng(seed)
        couplings = tuple(float(g) for g in rng.uniform(0.0, 1.0, n_env))
        env = []
        for _ in range(n_env):
            raw = rng.normal(size=4)
            alpha = complex(raw[0], raw[1])
            beta = complex(raw[2], raw[3])
            norm = np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
            env.append((alpha / norm, beta / norm))
        return cls(a=a, b=b, couplings=couplings, env_init=tuple(env), seed=seed)

    def extended(self, coupling: float, alpha: complex, beta: complex) -> "BitByBitModel":
        """Same model with one more environment qubit appended."""
        return BitByBitModel(
            a=self.a,
            b=self.b,
            couplings=self.couplings + (float(coupling),),
            env_init=self.env_init + ((complex(alpha), complex(beta)),),
            seed=self.seed,
        )


def _check_cap(model: BitByBitModel) -> None:
    if model.n_env > MAX_ENV_QUBITS:
        raise CapExceededError(
            f"{model.n_env} environment qubits exceeds the cap of {MAX_ENV_QUBITS}"
        )


def build_joint_state(model: BitByBitModel) -> np.ndarray:
    """Product state (a|0> + b|1>) (x) prod_k (alpha_k|0> + beta_k|1>)."""
    _check_cap(model)
    psi = np.array([model.a, model.b], dtype=complex)
    for alpha, beta in model.env_init:
        psi = np.kron(psi, np.array([alpha, beta], dtype=complex))
    return psi


def _environment_phase_sums(model: BitByBitModel) -> np.ndarray:
    """sum_k g_k s_k over all environment basis states, s = +1 for |0>."""
    n = model.n_env
    idx = np.arange(2**n)
    total = np.zeros(2**n)
    for k, g in enumerate(model.couplings):
        bits = (idx >> (n - 1 - k)) & 1
        total = total + g * (1.0 - 2.0 * bits)
    return total


def evolve_and_trace(
    model: BitByBitModel, t: float, quasi_threshold: float = DEFAULT_QUASI_THRESHOLD
) -> DensityMatrix:
    """Reduced 2x2 system state after time t, by exact partial trace.

    The coupling commutes with sigma_z on the system, so the diagonal stays
    (|a|^2, |b|^2) exactly; only the off-diagonal coherence evolves.
    """
    _check_cap(model)
    psi = build_joint_state(model)
    env_sums = _environment_phase_sums(model)
    energies = np.concatenate([env_sums, -env_sums])  # system |0> block, then |1>
    psi_t = psi * np.exp(-1j * t * energies)
    m = psi_t.reshape(2, -1)
    rho = m @ m.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return make_density(rho, quasi_threshold=quasi_threshold)


def interference_amplitude(model: BitByBitModel, t: float) -> complex:
    """Closed-form coherence z(t); must match evolve_and_trace's (0,1) entry."""
    z = model.a * np.conj(model.b)
    for g, (alpha, beta) in zip(model.couplings, model.env_init):
        d = abs(alpha) ** 2 - abs(beta) ** 2
        z = z * (np.cos(2.0 * g * t) - 1j * d * np.sin(2.0 * g * t))
    return complex(z)


def damping_ratio(rho: DensityMatrix) -> float:
    """max_{i != j} |rho_ij| / min(rho_ii, rho_jj); inf when a diagonal
    entry is zero (or negative) so the ratio is undefined."""
    m = rho.matrix
    d = m.shape[0]
    diag = m.diagonal().real
    worst = 0.0
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            floor = min(diag[i], diag[j])
            if floor <= 0.0:
                if abs(m[i, j]) > 0.0:
                    return float("inf")
                continue
            worst = max(worst, abs(m[i, j]) / floor)
    return worst


def decohered_state(
    a2: float, z: complex, quasi_threshold: float = DEFAULT_QUASI_THRESHOLD
) -> DensityMatrix:
    """2x2 state [[a2, z], [conj(z), 1 - a2]] left behind by decoherence."""
    if not 0.0 <= a2 <= 1.0:
        raise ValueError(f"population a2 must lie in [0, 1], got {a2}")
    m = np.array([[a2, z], [np.conj(z), 1.0 - a2]], dtype=complex)
    return make_density(m, quasi_threshold=quasi_threshold)


@dataclass(frozen=True)
class SweepRow:
    """Distribution of |z(t)| over random models at one environment size."""

    n_env: int
    abs_z: np.ndarray
    models: tuple[BitByBitModel, ...]

    @property
    def median_abs_z(self) -> float:
        return float(np.median(self.abs_z))

    @property
    def q25(self) -> float:
        return float(np.percentile(self.abs_z, 25))

    @property
    def q75(self) -> float:
        return float(np.percentile(self.abs_z, 75))

    def median_trial_index(self) -> int:
        """Trial whose |z| is closest to the median (lowest index on ties)."""
        return int(np.argmin(np.abs(self.abs_z - self.median_abs_z)))


def suppression_sweep(
    base: BitByBitModel,
    n_values: list[int],
    t: float,
    trials: int,
) -> list[SweepRow]:
    """Distribution of |z(t)| versus environment size.

    For each N, draws ``trials`` models (couplings uniform on [0, 1],
    Haar-uniform environment qubits) with child seeds derived from
    ``base.seed``, keeping the system amplitudes of ``base``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rows = []
    for n in n_values:
        if n > MAX_ENV_QUBITS:
            raise CapExceededError(
                f"{n} environment qubits exceeds the cap of {MAX_ENV_QUBITS}"
            )
        abs_z = np.empty(trials)
        models = []
        for trial in range(trials):
            child = int(np.random.SeedSequence([base.seed, n, trial]).generate_state(1)[0])
            model = BitByBitModel.random(base.a, base.b, n, seed=child)
            abs_z[trial] = abs(interference_amplitude(model, t))
            models.append(model)
        rows.append(SweepRow(n_env=n, abs_z=abs_z, models=tuple(models)))
    return rows
