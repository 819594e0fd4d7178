"""Finite-truncation certificates for coordinate bricks in sequence spaces.

The package turns qualitative statements about bricks -- boxes cut out by
per-coordinate half-heights in l1, l2, c0, or the space of convergent
sequences -- into finite, re-checkable computations: truncated radii with
convergence verdicts, compactness evidence with window witnesses,
explicit eps-nets, clearance-based entropy bounds for finite sets, and
moment/operator diagnostics for discrete measures on Hilbert space.

Typical use::

    from brickentropy import Brick, HalfHeights, reciprocal_tail, standard_lp
    from brickentropy import unconditional_radius

    brick = Brick(standard_lp(2), HalfHeights(tail=reciprocal_tail()))
    report = unconditional_radius(brick)
    print(report.verdict, report.estimate)

The ``brickentropy`` command exposes the same machinery as delimited
reports; see the README for the command list.
"""

__version__ = "0.1.0"

from .bases import (
    BasisKind,
    BasisModel,
    BlockSpec,
    basis_constant,
    block_basis,
    block_harmonic_member,
    harmonic_breakpoints,
    make_uncompact_basis,
    standard_c0,
    standard_lp,
    summing_c,
    synthesize,
    analyze,
    operator_norm,
    unconditional_constant,
)
from .bricks import (
    Brick,
    ConstantTail,
    CustomTail,
    HalfHeights,
    PowerLawTail,
    ZeroTail,
    contains,
    extreme_point,
    is_extreme,
    reciprocal_sqrt_tail,
    reciprocal_tail,
    solidity_certificate,
)
from .compactness import (
    CompactnessKind,
    EpsilonNet,
    GelfandReport,
    brick_compactness,
    epsilon_net,
    gelfand_set,
    precompact_test,
    tail_radius_bound,
    verify_window_witness,
)
from .entropy import (
    ClearanceProfile,
    EntropyReport,
    basis_radius,
    c0_entropy,
    clearance_brick,
    clearances,
    entropy_bounds,
)
from .errors import (
    BrickEntropyError,
    BudgetError,
    CapExceededError,
    ConfigError,
    KernelInvariantError,
    PreconditionError,
)
from .measures import (
    DiscreteMeasure,
    InverseSquareFamily,
    LogSquaredFamily,
    MomentVerdict,
    hs_diagnostic,
    j_compactness,
    make_non_hs_measure,
    make_weak4_measure,
    moment,
    pettis_j,
)
from .radii import (
    CoincidenceReport,
    PatternEvidence,
    RadiusReport,
    TruncationSchedule,
    Verdict,
    WindowMax,
    absolute_radius,
    extreme_radius,
    pattern_convergence,
    radii_coincide,
    radius_limit,
    series_convergence,
    sign_vertex_max,
    truncated_sign_radius,
    unconditional_radius,
    windowed_sign_max,
)
from .sequences import CoefficientVector, NormTag, as_array, norm, pad_to, tail_norm
