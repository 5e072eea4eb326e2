"""Steady state of the two-qubit junction coupled to two reservoirs.

The secular population dynamics splits into two independent two-level
channels: channel a flips the pairs 1<->2 and 3<->4 (gap |kappa - epsilon|),
channel b flips 1<->3 and 2<->4 (gap kappa + epsilon). With W_mn denoting
the total rate from eigenstate n to m summed over both baths, the unique
stationary distribution is the product

    P1 = W12 W13 / D   P2 = W21 W13 / D
    P3 = W12 W31 / D   P4 = W21 W31 / D,   D = (W12 + W21)(W13 + W31),

using W24 = W13 and W34 = W12 (equal qubit splittings, equal coupling
weights). The steady-state heat current out of the left reservoir is the
second-order two-channel expression implemented in :func:`heat_current`;
the variant written in terms of bath-system coherences has no closed
evaluation route here and is not provided.
"""

from dataclasses import dataclass

import numpy as np

from .baths import BathSpec, rate_pair
from .model import DegeneratePhysicsError, SystemParams, eigensystem


class NonUniqueSteadyStateError(DegeneratePhysicsError):
    """A transition channel carries no rates at all, so the kernel is degenerate."""


@dataclass(frozen=True)
class ChannelRates:
    """Per-bath (down, up) rates across one transition channel of gap ``omega``."""

    omega: float
    left_down: float
    left_up: float
    right_down: float
    right_up: float


@dataclass(frozen=True)
class RateSet:
    """The eight golden-rule rates of the junction plus the channel layout.

    ``a`` is the |kappa - epsilon| channel (pairs 1<->2, 3<->4), ``b`` the
    kappa + epsilon channel (pairs 1<->3, 2<->4). ``a_inverted`` is True
    when epsilon > kappa, i.e. state |2> lies below |1> and the label-based
    rate W12 (2 -> 1) is an excitation rather than a relaxation.
    """

    a: ChannelRates
    b: ChannelRates
    a_inverted: bool

    @property
    def w12(self) -> float:
        """Total rate 2 -> 1."""
        ch = self.a
        if self.a_inverted:
            return ch.left_up + ch.right_up
        return ch.left_down + ch.right_down

    @property
    def w21(self) -> float:
        """Total rate 1 -> 2."""
        ch = self.a
        if self.a_inverted:
            return ch.left_down + ch.right_down
        return ch.left_up + ch.right_up

    @property
    def w13(self) -> float:
        """Total rate 3 -> 1 (state 1 is always below state 3)."""
        return self.b.left_down + self.b.right_down

    @property
    def w31(self) -> float:
        """Total rate 1 -> 3."""
        return self.b.left_up + self.b.right_up


@dataclass(frozen=True)
class Populations:
    """Normalized steady-state occupations of the four eigenstates."""

    p1: float
    p2: float
    p3: float
    p4: float

    def __post_init__(self):
        vals = (self.p1, self.p2, self.p3, self.p4)
        if any(p < -1e-9 or p > 1.0 + 1e-9 for p in vals):
            raise ValueError(f"populations outside [0, 1]: {vals}")
        if abs(sum(vals) - 1.0) > 1e-9:
            raise ValueError(f"populations do not sum to 1: {vals}")

    def __iter__(self):
        yield self.p1
        yield self.p2
        yield self.p3
        yield self.p4

    def as_array(self) -> np.ndarray:
        return np.array(tuple(self))


def channel_rates(params: SystemParams, left: BathSpec, right: BathSpec) -> RateSet:
    """Assemble both channels' rates from the two reservoir specifications.

    Channel a uses the gap |kappa - epsilon| with up/down oriented by the
    sign of kappa - epsilon; channel b uses kappa + epsilon.
    """
    es = eigensystem(params)
    gap_a = abs(es.omega21)
    la_down, la_up = rate_pair(left, gap_a)
    ra_down, ra_up = rate_pair(right, gap_a)
    lb_down, lb_up = rate_pair(left, es.omega31)
    rb_down, rb_up = rate_pair(right, es.omega31)
    return RateSet(
        a=ChannelRates(gap_a, la_down, la_up, ra_down, ra_up),
        b=ChannelRates(es.omega31, lb_down, lb_up, rb_down, rb_up),
        a_inverted=es.omega21 < 0.0,
    )


def steady_populations(rates: RateSet) -> Populations:
    """Closed-form stationary populations; normalized by construction."""
    da = rates.w12 + rates.w21
    db = rates.w13 + rates.w31
    if da == 0.0 or db == 0.0:
        raise NonUniqueSteadyStateError(
            "a channel carries no rates; the stationary state is not unique"
        )
    fa = rates.w12 / da  # weight of the channel-a side containing state 1
    fb = rates.w13 / db  # weight of the channel-b side containing state 1
    return Populations(
        p1=fa * fb,
        p2=(1.0 - fa) * fb,
        p3=fa * (1.0 - fb),
        p4=(1.0 - fa) * (1.0 - fb),
    )


def rate_matrix(rates: RateSet) -> np.ndarray:
    """Generator matrix A with A[m, n] the total rate n -> m (states 1..4 at 0..3).

    Forbidden pairs (1, 4) and (2, 3) stay zero and every column sums to
    zero, so exp(A t) conserves probability.
    """
    w12, w21 = rates.w12, rates.w21
    w13, w31 = rates.w13, rates.w31
    a = np.zeros((4, 4))
    a[0, 1], a[1, 0] = w12, w21
    a[0, 2], a[2, 0] = w13, w31
    a[1, 3], a[3, 1] = w13, w31  # pair 2<->4 mirrors 1<->3
    a[2, 3], a[3, 2] = w12, w21  # pair 3<->4 mirrors 1<->2
    np.fill_diagonal(a, -a.sum(axis=0))
    return a


def null_space_populations(a: np.ndarray) -> Populations:
    """Stationary distribution as the kernel of a generator matrix.

    Independent cross-check of :func:`steady_populations`: one balance row
    is replaced by the normalization row and the 4x4 linear system solved
    directly. Raises if the kernel is not one-dimensional.
    """
    a = np.asarray(a, dtype=float)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 generator matrix, got shape {a.shape}")
    if np.linalg.matrix_rank(a) != 3:
        raise NonUniqueSteadyStateError(
            "generator kernel is not one-dimensional; steady state not unique"
        )
    m = a.copy()
    m[-1, :] = 1.0
    rhs = np.array([0.0, 0.0, 0.0, 1.0])
    p = np.linalg.solve(m, rhs)
    p[(p < 0.0) & (p > -1e-12)] = 0.0  # rounding fuzz only; real negatives surface
    p = p / p.sum()
    return Populations(*(float(x) for x in p))


def heat_current(params: SystemParams, rates: RateSet) -> float:
    """Steady-state heat current J_L out of the left reservoir.

    Sum over the two channels c of

        omega_c (kL_up kR_down - kL_down kR_up)
        / (2 [kL_up + kR_down + kL_down + kR_up]),

    with omega_a = |kappa - epsilon| and omega_b = kappa + epsilon. Positive
    values mean heat flows from the left bath into the system; a channel
    with no rates contributes its limit value 0. The expression is written
    in down/up form, which makes it valid for either sign of
    kappa - epsilon.
    """
    gaps = (abs(params.kappa - params.epsilon), params.kappa + params.epsilon)
    total = 0.0
    for omega, ch in zip(gaps, (rates.a, rates.b)):
        denom = ch.left_up + ch.right_down + ch.left_down + ch.right_up
        if denom == 0.0:
            continue
        total += (
            omega
            * (ch.left_up * ch.right_down - ch.left_down * ch.right_up)
            / (2.0 * denom)
        )
    return total
