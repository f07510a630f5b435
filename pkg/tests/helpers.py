"""Shared constructors for randomized tests; all take a seeded numpy Generator."""

import numpy as np

import pennyflip as pf


def random_axis(rng: np.random.Generator) -> np.ndarray:
    return pf.unit_axis(rng.normal(size=3))


def random_density(rng: np.random.Generator) -> np.ndarray:
    # Uniform direction, radius biased toward the shell; covers pure-ish and
    # mixed states without ever leaving the ball.
    return pf.from_bloch(random_axis(rng) * rng.random() ** (1.0 / 3.0))


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    return pf.rotation_unitary(random_axis(rng), rng.uniform(0.0, 2.0 * np.pi))


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    # Rotation times a random global phase: a generic 2x2 unitary.
    return np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)) * random_rotation(rng)


def overlap(u: np.ndarray, v: np.ndarray) -> float:
    """|<u|v>| for unit spinors; 1 iff the two lie on the same ray."""
    return abs(np.vdot(u, v))
