"""Disruption channels on a single qubit, with analytic and Monte Carlo paths.

Channel specs are small frozen dataclasses and ``apply_channel`` dispatches on
spec and mode.  Analytic mode returns the exact output state.  Monte Carlo
mode draws one realization of the channel's *own* randomness per sample (axis
choices and mixture coins; measurements always apply the full projective
mixture, outcomes are never sampled) and returns an ``McEstimate`` whose
std_error is the largest entry-wise standard error over the 8 real
components of the mean.

Draw costs per sample: RandomAxisRotation and RandomBasisMeasurement consume
2 uniforms (an axis), MeyerMixture and TwoAxisFlip consume 1 (a coin),
FixedRotation and FixedAxisMeasurement consume none, and Iterated multiplies
its inner cost by n.

Sharding: an estimate under stream (seed, stream_index) with ``shards`` > 1
splits the samples across substreams (seed, stream_index + i), accumulated in
shard order.  The result therefore depends only on (seed, stream_index,
samples, shards), never on prior consumption of the caller's stream, and
shards may be evaluated anywhere without changing the numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import (
    EXACT_TOL,
    SPIN_UP,
    from_bloch,
    to_bloch,
    validate_density,
)
from .rotations import (
    RngStream,
    pauli_dot,
    rotation_unitaries,
    sample_axes,
    spin_eigenstates,
    unit_axis,
)

DEFAULT_SAMPLES = 100_000


class NotUnitaryError(ValueError):
    pass


class InvalidAxesError(ValueError):
    pass


class UnsupportedModeError(ValueError):
    pass


def require_unitary(f) -> np.ndarray:
    """Return f as a complex array, raising NotUnitaryError unless f f+ = I."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (2, 2):
        raise NotUnitaryError(f"expected a (2, 2) matrix, got shape {f.shape}")
    if not np.all(np.isfinite(f)):
        raise NotUnitaryError("matrix has non-finite entries")
    if np.abs(f @ f.conj().T - np.eye(2)).max() > EXACT_TOL:
        raise NotUnitaryError("matrix is not unitary within EXACT_TOL")
    return f


@dataclass(frozen=True)
class FixedRotation:
    """Rotate by theta about one fixed axis."""

    axis: np.ndarray
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "axis", unit_axis(self.axis))


@dataclass(frozen=True)
class MeyerMixture:
    """Leave the state alone with probability p, else conjugate by F."""

    p: float
    f: np.ndarray

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        object.__setattr__(self, "f", require_unitary(self.f))


@dataclass(frozen=True)
class RandomAxisRotation:
    """Rotate by theta about an axis drawn uniformly on the sphere."""

    theta: float


@dataclass(frozen=True)
class FixedAxisMeasurement:
    """Projective measurement along one fixed axis, kept as the full mixture."""

    axis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "axis", unit_axis(self.axis))


@dataclass(frozen=True)
class RandomBasisMeasurement:
    """Projective measurement along an axis drawn uniformly on the sphere."""


@dataclass(frozen=True)
class TwoAxisFlip:
    """Rotate 180 degrees about one of two orthogonal axes, chosen fairly."""

    axis_a: np.ndarray
    axis_b: np.ndarray

    def __post_init__(self):
        a = unit_axis(self.axis_a)
        b = unit_axis(self.axis_b)
        if abs(float(a @ b)) > EXACT_TOL:
            raise InvalidAxesError("flip axes must be mutually orthogonal")
        object.__setattr__(self, "axis_a", a)
        object.__setattr__(self, "axis_b", b)


@dataclass(frozen=True)
class Iterated:
    """Apply an inner channel n times in sequence."""

    inner: "ChannelSpec"
    n: int

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))


ChannelSpec = (
    FixedRotation
    | MeyerMixture
    | RandomAxisRotation
    | FixedAxisMeasurement
    | RandomBasisMeasurement
    | TwoAxisFlip
    | Iterated
)


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo mean state with its worst-entry standard error."""

    mean: np.ndarray
    std_error: float
    samples: int


def _sandwich(us: np.ndarray, states: np.ndarray) -> np.ndarray:
    """u @ state @ u+ over stacked (..., 2, 2) operands."""
    return us @ states @ np.conj(np.swapaxes(us, -1, -2))


def _measure_stack(sigma_n: np.ndarray, states: np.ndarray) -> np.ndarray:
    # P(+-) = (I +- sigma.n)/2 are exactly the spin-eigenstate projectors, so
    # this is the projective mixture without the pole-sensitive spinors.
    eye = np.eye(2, dtype=complex)
    p_plus = 0.5 * (eye + sigma_n)
    p_minus = 0.5 * (eye - sigma_n)
    return p_plus @ states @ p_plus + p_minus @ states @ p_minus


# ---------------------------------------------------------------------------
# analytic paths


def apply_fixed_rotation(rho: np.ndarray, axis, theta: float) -> np.ndarray:
    """U rho U+ for the axis-angle rotation U."""
    rho = validate_density(rho)
    u = rotation_unitaries(unit_axis(axis)[None, :], theta)
    return _sandwich(u, rho[None, :, :])[0]


def apply_meyer_mixture(rho: np.ndarray, p: float, f) -> np.ndarray:
    """p rho + (1 - p) F rho F+; F must be unitary within EXACT_TOL."""
    rho = validate_density(rho)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    f = require_unitary(f)
    return p * rho + (1.0 - p) * (f @ rho @ f.conj().T)


def bloch_contraction(theta: float) -> float:
    """Bloch-vector scale factor of the random-axis rotation: (1 + 2 cos theta) / 3."""
    return (1.0 + 2.0 * math.cos(theta)) / 3.0


def twirl_analytic(theta: float, rho: np.ndarray | None = None) -> np.ndarray:
    """Closed-form random-axis rotation of the polarized basis state:

        diag(cos^2(theta/2) + sin^2(theta/2)/3,  (2/3) sin^2(theta/2))

    Only the +z basis state has this diagonal form; pass anything else and a
    ValueError points you at twirl_general.
    """
    if rho is not None:
        rho = validate_density(rho)
        if np.abs(rho - SPIN_UP).max() > EXACT_TOL:
            raise ValueError(
                "twirl_analytic is the closed form for the +z basis state; "
                "use twirl_general for arbitrary states"
            )
    c2 = math.cos(0.5 * theta) ** 2
    s2 = math.sin(0.5 * theta) ** 2
    return np.array(
        [[c2 + s2 / 3.0, 0.0], [0.0, 2.0 * s2 / 3.0]], dtype=complex
    )


def twirl_general(rho: np.ndarray, theta: float) -> np.ndarray:
    """Random-axis rotation of an arbitrary state: Bloch vector scaled by
    bloch_contraction(theta)."""
    rho = validate_density(rho)
    return from_bloch(bloch_contraction(theta) * to_bloch(rho))


def measure_fixed_axis(rho: np.ndarray, axis) -> np.ndarray:
    """Projective measurement channel along one axis:

        <b+|rho|b+> b+ b+^  +  <b-|rho|b-> b- b-^
    """
    rho = validate_density(rho)
    bp, bm = spin_eigenstates(unit_axis(axis))
    p_plus = float(np.real(bp.conj() @ rho @ bp))
    p_minus = float(np.real(bm.conj() @ rho @ bm))
    return p_plus * np.outer(bp, bp.conj()) + p_minus * np.outer(bm, bm.conj())


def random_measurement_analytic(rho: np.ndarray) -> np.ndarray:
    """Axis-averaged measurement channel: Bloch vector scaled by exactly 1/3."""
    rho = validate_density(rho)
    return from_bloch(to_bloch(rho) / 3.0)


def _analytic(spec: ChannelSpec, rho: np.ndarray) -> np.ndarray:
    if isinstance(spec, FixedRotation):
        u = rotation_unitaries(spec.axis[None, :], spec.theta)
        return _sandwich(u, rho[None, :, :])[0]
    if isinstance(spec, MeyerMixture):
        return spec.p * rho + (1.0 - spec.p) * (spec.f @ rho @ spec.f.conj().T)
    if isinstance(spec, RandomAxisRotation):
        return from_bloch(bloch_contraction(spec.theta) * to_bloch(rho))
    if isinstance(spec, FixedAxisMeasurement):
        return measure_fixed_axis(rho, spec.axis)
    if isinstance(spec, RandomBasisMeasurement):
        return from_bloch(to_bloch(rho) / 3.0)
    if isinstance(spec, TwoAxisFlip):
        ua = rotation_unitaries(spec.axis_a[None, :], math.pi)
        ub = rotation_unitaries(spec.axis_b[None, :], math.pi)
        return 0.5 * (_sandwich(ua, rho[None])[0] + _sandwich(ub, rho[None])[0])
    if isinstance(spec, Iterated):
        out = rho
        for _ in range(spec.n):
            out = _analytic(spec.inner, out)
        return out
    raise TypeError(f"unknown channel spec: {spec!r}")


# ---------------------------------------------------------------------------
# Monte Carlo paths


def _realize(spec: ChannelSpec, states: np.ndarray, gen: np.random.Generator) -> np.ndarray:
    """One random realization of the channel applied to each stacked state."""
    n = states.shape[0]
    if isinstance(spec, FixedRotation):
        u = rotation_unitaries(spec.axis[None, :], spec.theta)
        return _sandwich(u, states)
    if isinstance(spec, MeyerMixture):
        out = np.array(states)
        hit = gen.random(n) >= spec.p  # coin: u >= p applies F
        if hit.any():
            out[hit] = spec.f @ states[hit] @ spec.f.conj().T
        return out
    if isinstance(spec, RandomAxisRotation):
        us = rotation_unitaries(sample_axes(gen, n), spec.theta)
        return _sandwich(us, states)
    if isinstance(spec, FixedAxisMeasurement):
        return _measure_stack(pauli_dot(spec.axis), states)
    if isinstance(spec, RandomBasisMeasurement):
        return _measure_stack(pauli_dot(sample_axes(gen, n)), states)
    if isinstance(spec, TwoAxisFlip):
        ua = rotation_unitaries(spec.axis_a[None, :], math.pi)
        ub = rotation_unitaries(spec.axis_b[None, :], math.pi)
        first = gen.random(n) < 0.5  # coin: u < 1/2 picks axis_a
        out = np.empty((n, 2, 2), dtype=complex)
        out[first] = _sandwich(ua, states[first])
        out[~first] = _sandwich(ub, states[~first])
        return out
    if isinstance(spec, Iterated):
        for _ in range(spec.n):
            states = _realize(spec.inner, states, gen)
        return states
    raise TypeError(f"unknown channel spec: {spec!r}")


def _shard_counts(samples: int, shards: int) -> list[int]:
    base, extra = divmod(samples, shards)
    return [base + (1 if i < extra else 0) for i in range(shards)]


def _check_mc_args(samples: int, shards: int, rng) -> tuple[int, int, RngStream]:
    samples = int(samples)
    shards = int(shards)
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if shards < 1:
        raise ValueError(f"shards must be >= 1, got {shards}")
    if rng is None:
        rng = RngStream(0)
    return samples, shards, rng


def _mc_estimate(spec, rho, samples, rng, shards) -> McEstimate:
    samples, shards, rng = _check_mc_args(samples, shards, rng)
    comp_sum = np.zeros((2, 2, 2))
    comp_sq = np.zeros((2, 2, 2))
    for i, count in enumerate(_shard_counts(samples, shards)):
        if count == 0:
            continue
        gen = rng.substream(i).generator
        states = _realize(spec, np.broadcast_to(rho, (count, 2, 2)), gen)
        comps = np.stack([states.real, states.imag], axis=-1)
        comp_sum += comps.sum(axis=0)
        comp_sq += np.square(comps).sum(axis=0)
    mean_comp = comp_sum / samples
    mean = mean_comp[..., 0] + 1j * mean_comp[..., 1]
    if samples > 1:
        var = (comp_sq - comp_sum * comp_sum / samples) / (samples - 1)
        se = math.sqrt(max(float(var.max()), 0.0) / samples)
    else:
        se = 0.0  # a single draw carries no spread estimate
    return McEstimate(mean=mean, std_error=se, samples=samples)


def twirl_mc(
    rho: np.ndarray,
    theta: float,
    samples: int = DEFAULT_SAMPLES,
    rng: RngStream | None = None,
    shards: int = 1,
) -> McEstimate:
    """Monte Carlo random-axis rotation: mean over sampled-axis conjugations.

    With samples=1 the mean is bit-identical to apply_fixed_rotation at the
    axis the stream yields.
    """
    rho = validate_density(rho)
    return _mc_estimate(RandomAxisRotation(theta), rho, samples, rng, shards)


def random_measurement_mc(
    rho: np.ndarray,
    samples: int = DEFAULT_SAMPLES,
    rng: RngStream | None = None,
    shards: int = 1,
) -> McEstimate:
    """Monte Carlo random-basis measurement: mean of measure_fixed_axis over
    sampled axes."""
    rho = validate_density(rho)
    return _mc_estimate(RandomBasisMeasurement(), rho, samples, rng, shards)


def apply_channel(
    spec: ChannelSpec,
    rho: np.ndarray,
    mode: str = "analytic",
    samples: int = DEFAULT_SAMPLES,
    rng: RngStream | None = None,
    shards: int = 1,
):
    """Apply a channel spec: the exact state (analytic) or an McEstimate (mc)."""
    rho = validate_density(rho)
    if mode == "analytic":
        return _analytic(spec, rho)
    if mode == "mc":
        return _mc_estimate(spec, rho, samples, rng, shards)
    raise UnsupportedModeError(f"mode must be 'analytic' or 'mc', got {mode!r}")


def iterated_mc_curve(
    inner: ChannelSpec,
    rho: np.ndarray,
    n_steps: int,
    samples: int = DEFAULT_SAMPLES,
    rng: RngStream | None = None,
    shards: int = 1,
) -> list[McEstimate]:
    """McEstimates after each of 1..n_steps iterated applications of inner.

    One trajectory keeps its own state across iterations and redraws the
    inner channel's randomness each round.  Draws are iteration-major within
    each shard, so the step-k snapshot is bit-identical to running
    apply_channel(Iterated(inner, k), ...) on the same (seed, stream_index,
    samples, shards).
    """
    rho = validate_density(rho)
    n_steps = int(n_steps)
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    samples, shards, rng = _check_mc_args(samples, shards, rng)
    comp_sum = np.zeros((n_steps, 2, 2, 2))
    comp_sq = np.zeros((n_steps, 2, 2, 2))
    for i, count in enumerate(_shard_counts(samples, shards)):
        if count == 0:
            continue
        gen = rng.substream(i).generator
        states = np.broadcast_to(rho, (count, 2, 2))
        for k in range(n_steps):
            states = _realize(inner, states, gen)
            comps = np.stack([states.real, states.imag], axis=-1)
            comp_sum[k] += comps.sum(axis=0)
            comp_sq[k] += np.square(comps).sum(axis=0)
    estimates = []
    for k in range(n_steps):
        mean_comp = comp_sum[k] / samples
        mean = mean_comp[..., 0] + 1j * mean_comp[..., 1]
        if samples > 1:
            var = (comp_sq[k] - comp_sum[k] * comp_sum[k] / samples) / (samples - 1)
            se = math.sqrt(max(float(var.max()), 0.0) / samples)
        else:
            se = 0.0
        estimates.append(McEstimate(mean=mean, std_error=se, samples=samples))
    return estimates
