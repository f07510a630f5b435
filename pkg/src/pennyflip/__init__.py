"""Single-qubit density-matrix toolkit for quantum penny-flip disruption
strategies: axis-angle rotations, random-axis twirls, projective measurements
along fixed or random axes, iterated play, and the win-odds bookkeeping that
scores them.
"""

from .density import (
    EXACT_TOL,
    MAXIMALLY_MIXED,
    SPIN_UP,
    BlochOutOfBallError,
    DensityMatrixError,
    NotHermitianError,
    NotPositiveError,
    TraceNotOneError,
    adjoint,
    decompose_polarized,
    eigen_hermitian,
    entropy,
    from_bloch,
    mat_mul,
    purity,
    to_bloch,
    trace_distance,
    validate_density,
)
from .rotations import (
    IDENTITY,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    POLE_EPS,
    RngStream,
    pauli_dot,
    rotation_unitaries,
    rotation_unitary,
    sample_axes,
    sample_axis,
    spin_eigenstates,
    unit_axis,
)
from .channels import (
    DEFAULT_SAMPLES,
    ChannelSpec,
    FixedAxisMeasurement,
    FixedRotation,
    InvalidAxesError,
    Iterated,
    McEstimate,
    MeyerMixture,
    NotUnitaryError,
    RandomAxisRotation,
    RandomBasisMeasurement,
    TwoAxisFlip,
    UnsupportedModeError,
    apply_channel,
    apply_fixed_rotation,
    apply_meyer_mixture,
    bloch_contraction,
    iterated_mc_curve,
    measure_fixed_axis,
    random_measurement_analytic,
    random_measurement_mc,
    require_unitary,
    twirl_analytic,
    twirl_general,
    twirl_mc,
)
from .game import (
    AngleScanResult,
    GameOutcome,
    PStrategy,
    angle_scan,
    default_strategies,
    initial_state_for,
    iterated_measurement_odds,
    outcome_from_state,
    play_case1,
    play_game,
    play_two_axis_flip,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT_TOL",
    "MAXIMALLY_MIXED",
    "SPIN_UP",
    "BlochOutOfBallError",
    "DensityMatrixError",
    "NotHermitianError",
    "NotPositiveError",
    "TraceNotOneError",
    "adjoint",
    "decompose_polarized",
    "eigen_hermitian",
    "entropy",
    "from_bloch",
    "mat_mul",
    "purity",
    "to_bloch",
    "trace_distance",
    "validate_density",
    "IDENTITY",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "POLE_EPS",
    "RngStream",
    "pauli_dot",
    "rotation_unitaries",
    "rotation_unitary",
    "sample_axes",
    "sample_axis",
    "spin_eigenstates",
    "unit_axis",
    "DEFAULT_SAMPLES",
    "ChannelSpec",
    "FixedAxisMeasurement",
    "FixedRotation",
    "InvalidAxesError",
    "Iterated",
    "McEstimate",
    "MeyerMixture",
    "NotUnitaryError",
    "RandomAxisRotation",
    "RandomBasisMeasurement",
    "TwoAxisFlip",
    "UnsupportedModeError",
    "apply_channel",
    "apply_fixed_rotation",
    "apply_meyer_mixture",
    "bloch_contraction",
    "iterated_mc_curve",
    "measure_fixed_axis",
    "random_measurement_analytic",
    "random_measurement_mc",
    "require_unitary",
    "twirl_analytic",
    "twirl_general",
    "twirl_mc",
    "AngleScanResult",
    "GameOutcome",
    "PStrategy",
    "angle_scan",
    "default_strategies",
    "initial_state_for",
    "iterated_measurement_odds",
    "outcome_from_state",
    "play_case1",
    "play_game",
    "play_two_axis_flip",
    "__version__",
]
